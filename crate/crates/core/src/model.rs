//! The model hypersurface in CP⁴ and the tube over the future light cone in C³.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{congruence, membership_so32, FormTag, QuadraticForm};
use crate::linalg::Matrix;
use crate::numfield::AlgNum;

/// Homogeneous coordinates `t⁰…t⁴` in the chart of the given form.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProjectivePoint {
    pub coords: Vec<AlgNum>,
    pub chart: FormTag,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<AlgNum>, chart: FormTag) -> Result<Self> {
        if coords.len() != 5 {
            return Err(Error::Parse(format!("expected 5 homogeneous coordinates, got {}", coords.len())));
        }
        if coords.iter().all(AlgNum::is_zero) {
            return Err(Error::Parse("all homogeneous coordinates vanish".into()));
        }
        Ok(ProjectivePoint { coords, chart })
    }

    /// Coordinates in the I32 chart (`t = S·u` for 𝓘-chart points).
    pub fn to_i32(&self) -> ProjectivePoint {
        match self.chart {
            FormTag::I32 => self.clone(),
            FormTag::CalI => ProjectivePoint {
                coords: congruence().mul_vec(&self.coords),
                chart: FormTag::I32,
            },
        }
    }

    /// Coordinates in the 𝓘 chart (`u = S⁻¹·t`).
    pub fn to_cal_i(&self) -> ProjectivePoint {
        match self.chart {
            FormTag::CalI => self.clone(),
            FormTag::I32 => ProjectivePoint {
                coords: congruence().inverse().expect("congruence is invertible").mul_vec(&self.coords),
                chart: FormTag::CalI,
            },
        }
    }

    /// Equality in CP⁴ (after moving both to the I32 chart).
    pub fn same_point(&self, other: &ProjectivePoint) -> bool {
        let (a, b) = (self.to_i32().coords, other.to_i32().coords);
        let m = Matrix::from_rows(vec![a, b]);
        m.rank() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub on_model: bool,
    /// `(t,t) = 0`
    pub bilinear_vanishes: bool,
    /// `⟨t,t⟩ = 0`
    pub hermitian_vanishes: bool,
    /// `Im(t³·conj(t⁴)) > 0`
    pub orientation_positive: bool,
    pub orientation_value: AlgNum,
}

fn hermitian(q: &QuadraticForm, t: &[AlgNum], s: &[AlgNum]) -> AlgNum {
    let tb: Vec<AlgNum> = t.iter().map(AlgNum::conj).collect();
    q.eval(&tb, s)
}

pub fn membership_model(t: &ProjectivePoint) -> MembershipReport {
    let t = t.to_i32().coords;
    let q = QuadraticForm::i32();
    let bilinear_vanishes = q.eval(&t, &t).is_zero();
    let hermitian_vanishes = hermitian(&q, &t, &t).is_zero();
    let orientation_value = (&t[3] * &t[4].conj()).im();
    let orientation_positive = orientation_value.real_sign().ok() == Some(Ordering::Greater);
    MembershipReport {
        on_model: bilinear_vanishes && hermitian_vanishes && orientation_positive,
        bilinear_vanishes,
        hermitian_vanishes,
        orientation_positive,
        orientation_value,
    }
}

/// Derivatives at `u = 0` of both defining functions along `exp(uX)·t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangencyReport {
    /// `(Xt, t) + (t, Xt)`
    pub bilinear: AlgNum,
    /// `⟨Xt, t⟩ + ⟨t, Xt⟩`
    pub hermitian: AlgNum,
}

impl TangencyReport {
    pub fn tangent(&self) -> bool {
        self.bilinear.is_zero() && self.hermitian.is_zero()
    }
}

/// `x` is a 5×5 matrix in the 𝓘 realization; the point may be in either chart.
pub fn infinitesimal_action(x: &Matrix, t: &ProjectivePoint) -> Result<TangencyReport> {
    let q = QuadraticForm::cal_i();
    if !membership_so32(x, &q) {
        return Err(Error::NotInAlgebra);
    }
    let m = membership_model(t);
    if !m.on_model {
        return Err(Error::NotOnModel(format!("{m:?}")));
    }
    let u = t.to_cal_i().coords;
    let xu = x.mul_vec(&u);
    Ok(TangencyReport {
        bilinear: q.eval(&xu, &u) + q.eval(&u, &xu),
        hermitian: hermitian(&q, &xu, &u) + hermitian(&q, &u, &xu),
    })
}

/// Sample points of the model in the I32 chart.
pub fn model_samples() -> Vec<ProjectivePoint> {
    let i = AlgNum::i;
    let n = AlgNum::from_int;
    let r2 = AlgNum::sqrt2;
    [
        vec![n(1), i(), n(0), n(1), -i()],
        vec![i(), n(1), n(0), n(1), -i()],
        vec![n(1), n(1), i() * r2(), r2(), -(i() * r2())],
    ]
    .into_iter()
    .map(|c| ProjectivePoint::new(c, FormTag::I32).expect("five nonzero coordinates"))
    .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TubePoint {
    pub z: [AlgNum; 3],
}

impl TubePoint {
    pub fn new(z1: AlgNum, z2: AlgNum, z3: AlgNum) -> Self {
        TubePoint { z: [z1, z2, z3] }
    }

    pub fn real(x1: i64, x2: i64, x3: i64) -> Self {
        Self::new(AlgNum::from_int(x1), AlgNum::from_int(x2), AlgNum::from_int(x3))
    }

    pub fn real_parts(&self) -> [AlgNum; 3] {
        [self.z[0].re(), self.z[1].re(), self.z[2].re()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviData {
    /// Basis of `ker ∂r` in C³.
    pub tangent_basis: Vec<Vec<AlgNum>>,
    /// `L_ab = conj(v_a)ᵀ H v_b`, Hermitian.
    pub levi_matrix: Vec<Vec<AlgNum>>,
    pub kernel_dimension: usize,
    /// Kernel vectors expressed in C³.
    pub kernel: Vec<Vec<AlgNum>>,
}

/// Complex Hessian `∂²r/∂z_j∂z̄_k` of `r = x₁² + x₂² − x₃²`.
pub fn tube_hessian() -> Matrix {
    let h = AlgNum::frac(1, 2);
    Matrix::from_fn(3, 3, |r, c| match (r == c, r) {
        (true, 2) => -&h,
        (true, _) => h.clone(),
        _ => AlgNum::zero(),
    })
}

fn sesquilinear(m: &Matrix, v: &[AlgNum], w: &[AlgNum]) -> AlgNum {
    v.iter().zip(m.mul_vec(w)).map(|(a, b)| a.conj() * b).sum()
}

pub fn levi_form_tube(p: &TubePoint) -> Result<LeviData> {
    let x = p.real_parts();
    if x.iter().all(AlgNum::is_zero) {
        return Err(Error::Apex);
    }
    let r = &x[0] * &x[0] + &x[1] * &x[1] - &x[2] * &x[2];
    if !r.is_zero() {
        return Err(Error::OffHypersurface(format!("r = {r}")));
    }
    if x[2].real_sign()? != Ordering::Greater {
        return Err(Error::OffHypersurface("Re z3 is not positive".into()));
    }
    let dr = Matrix::from_rows(vec![vec![x[0].clone(), x[1].clone(), -&x[2]]]);
    let tangent_basis = dr.nullspace();
    let h = tube_hessian();
    let levi = Matrix::from_fn(tangent_basis.len(), tangent_basis.len(), |a, b| {
        sesquilinear(&h, &tangent_basis[a], &tangent_basis[b])
    });
    let kernel: Vec<Vec<AlgNum>> = levi
        .nullspace()
        .into_iter()
        .map(|c| {
            (0..3)
                .map(|k| c.iter().zip(&tangent_basis).map(|(ci, v)| ci * &v[k]).sum())
                .collect()
        })
        .collect();
    Ok(LeviData {
        kernel_dimension: kernel.len(),
        levi_matrix: levi.to_rows(),
        tangent_basis,
        kernel,
    })
}

impl LeviData {
    pub fn is_hermitian(&self) -> bool {
        let n = self.levi_matrix.len();
        (0..n).all(|a| (0..n).all(|b| self.levi_matrix[a][b] == self.levi_matrix[b][a].conj()))
    }

    /// `ℒ(Jv, Jw) = ℒ(v, w)` on all pairs of tangent basis vectors, `J` = multiplication by i.
    pub fn j_invariant(&self) -> bool {
        let h = tube_hessian();
        let jv: Vec<Vec<AlgNum>> = self
            .tangent_basis
            .iter()
            .map(|v| v.iter().map(|c| c * &AlgNum::i()).collect())
            .collect();
        let n = self.tangent_basis.len();
        (0..n).all(|a| (0..n).all(|b| sesquilinear(&h, &jv[a], &jv[b]) == self.levi_matrix[a][b]))
    }

    /// Whether every kernel vector is a complex multiple of `v`.
    pub fn kernel_spanned_by(&self, v: &[AlgNum]) -> bool {
        self.kernel
            .iter()
            .all(|k| Matrix::from_rows(vec![k.clone(), v.to_vec()]).rank() == 1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointLevi {
    pub point: TubePoint,
    pub kernel_dimension: Option<usize>,
    pub hermitian: Option<bool>,
    pub radial_kernel: Option<bool>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DistributionReport {
    pub points: Vec<PointLevi>,
    /// Dimension 1 at every point that is on the smooth part of the tube.
    pub uniform_dimension_one: bool,
    pub excluded: usize,
}

/// Kernel dimension per point; apex and off-hypersurface points are reported and excluded.
pub fn levi_kernel_distribution_check(points: &[TubePoint]) -> DistributionReport {
    let mut out = Vec::new();
    let mut excluded = 0;
    let mut uniform = true;
    for p in points {
        match levi_form_tube(p) {
            Ok(l) => {
                uniform &= l.kernel_dimension == 1;
                out.push(PointLevi {
                    point: p.clone(),
                    kernel_dimension: Some(l.kernel_dimension),
                    hermitian: Some(l.is_hermitian()),
                    radial_kernel: Some(l.kernel_spanned_by(&p.real_parts())),
                    error: None,
                });
            }
            Err(e) => {
                excluded += 1;
                out.push(PointLevi {
                    point: p.clone(),
                    kernel_dimension: None,
                    hermitian: None,
                    radial_kernel: None,
                    error: Some(e.to_string()),
                });
            }
        }
    }
    DistributionReport {
        points: out,
        uniform_dimension_one: uniform && excluded < points.len(),
        excluded,
    }
}

pub fn pythagorean_samples() -> Vec<TubePoint> {
    vec![TubePoint::real(3, 4, 5), TubePoint::real(5, 12, 13), TubePoint::real(8, 15, 17)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{basis, BasisKind};

    fn pt(c: Vec<AlgNum>) -> ProjectivePoint {
        ProjectivePoint::new(c, FormTag::I32).unwrap()
    }

    #[test]
    fn membership_examples() {
        let (i, n) = (AlgNum::i, AlgNum::from_int);
        assert!(membership_model(&pt(vec![n(1), i(), n(0), n(1), -i()])).on_model);
        let r = membership_model(&pt(vec![n(1), n(0), n(0), n(0), n(0)]));
        assert!(!r.on_model && !r.hermitian_vanishes);
        let r = membership_model(&pt(vec![n(1), i(), n(0), n(1), i()]));
        assert!(!r.on_model && !r.orientation_positive);
        assert_eq!(r.orientation_value, n(-1));
    }

    #[test]
    fn chart_consistency() {
        for p in model_samples() {
            let q = p.to_cal_i();
            assert_eq!(membership_model(&p), membership_model(&q));
            assert!(q.same_point(&p));
        }
    }

    #[test]
    fn tangency() {
        for p in model_samples() {
            for x in basis(BasisKind::Standard).elements() {
                assert!(infinitesimal_action(x.matrix(), &p).unwrap().tangent());
            }
        }
        let id = Matrix::identity(5);
        assert!(matches!(infinitesimal_action(&id, &model_samples()[0]), Err(Error::NotInAlgebra)));
    }

    #[test]
    fn tube_kernel() {
        let l = levi_form_tube(&TubePoint::real(3, 4, 5)).unwrap();
        assert_eq!(l.kernel_dimension, 1);
        assert!(l.is_hermitian() && l.j_invariant());
        assert!(l.kernel_spanned_by(&[AlgNum::from_int(3), AlgNum::from_int(4), AlgNum::from_int(5)]));
        let p = TubePoint::new(AlgNum::one() + AlgNum::i(), AlgNum::frac(7, 3) * AlgNum::i(), AlgNum::one());
        assert_eq!(levi_form_tube(&p).unwrap().kernel_dimension, 1);
        assert!(matches!(levi_form_tube(&TubePoint::real(0, 0, 0)), Err(Error::Apex)));
        assert!(matches!(levi_form_tube(&TubePoint::real(1, 1, 1)), Err(Error::OffHypersurface(_))));
    }
}
