//! so(3,2) as 5×5 matrices preserving the anti-diagonal form, its three
//! standard bases, brackets, structure constants, grading and Killing form.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::numfield::AlgNum;

pub const DIM: usize = 10;

/// Number of elements of 𝔪 (the e-part) at the front of every built-in basis.
pub const M_DIM: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormTag {
    /// diag(1,1,1,−1,−1)
    I32,
    /// anti-diagonal with unit entries
    CalI,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    pub tag: FormTag,
    pub matrix: Matrix,
}

impl QuadraticForm {
    pub fn new(tag: FormTag) -> Self {
        let matrix = match tag {
            FormTag::I32 => Matrix::from_fn(5, 5, |r, c| match (r == c, r < 3) {
                (true, true) => AlgNum::one(),
                (true, false) => AlgNum::from_int(-1),
                _ => AlgNum::zero(),
            }),
            FormTag::CalI => Matrix::from_fn(5, 5, |r, c| if r + c == 4 { AlgNum::one() } else { AlgNum::zero() }),
        };
        QuadraticForm { tag, matrix }
    }

    pub fn i32() -> Self {
        Self::new(FormTag::I32)
    }

    pub fn cal_i() -> Self {
        Self::new(FormTag::CalI)
    }

    /// Bilinear (not sesquilinear) evaluation `tᵀ Q s`.
    pub fn eval(&self, t: &[AlgNum], s: &[AlgNum]) -> AlgNum {
        t.iter()
            .zip(self.matrix.mul_vec(s))
            .map(|(a, b)| a * &b)
            .sum()
    }
}

/// The fixed congruence `S` with `Sᵀ · diag(1,1,1,−1,−1) · S = 𝓘`.
///
/// Its columns pair `e0 ± e3` and `e1 ± e4` into null vectors; `t = S·u`
/// maps 𝓘-coordinates `u` to I32-coordinates `t`.
pub fn congruence() -> Matrix {
    let h = AlgNum::sqrt2() / AlgNum::from_int(2);
    let mut s = Matrix::zeros(5, 5);
    // column 0: (e0 + e3)/√2, column 4: (e0 − e3)/√2
    s[(0, 0)] = h.clone();
    s[(3, 0)] = h.clone();
    s[(0, 4)] = h.clone();
    s[(3, 4)] = -&h;
    // column 1: (e1 + e4)/√2, column 3: (e1 − e4)/√2
    s[(1, 1)] = h.clone();
    s[(4, 1)] = h.clone();
    s[(1, 3)] = h.clone();
    s[(4, 3)] = -h;
    s[(2, 2)] = AlgNum::one();
    s
}

pub fn membership_so32(m: &Matrix, form: &QuadraticForm) -> bool {
    m.rows() == 5 && m.cols() == 5 && m.transpose().mul(&form.matrix).add(&form.matrix.mul(m)).is_zero()
}

#[derive(Clone, PartialEq, Eq)]
pub struct LieElement {
    matrix: Matrix,
}

impl LieElement {
    /// Wraps a matrix after checking membership with respect to 𝓘.
    pub fn new(matrix: Matrix) -> Result<Self> {
        if membership_so32(&matrix, &QuadraticForm::cal_i()) {
            Ok(LieElement { matrix })
        } else {
            Err(Error::NotInAlgebra)
        }
    }

    fn from_entries(entries: &[(usize, usize, i64)]) -> Self {
        let mut m = Matrix::zeros(5, 5);
        for &(r, c, v) in entries {
            m[(r, c)] = AlgNum::from_int(v);
        }
        LieElement { matrix: m }
    }

    pub fn zero() -> Self {
        LieElement { matrix: Matrix::zeros(5, 5) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.matrix.entries().all(AlgNum::is_real)
    }

    pub fn conj(&self) -> Self {
        LieElement { matrix: self.matrix.conj() }
    }

    pub fn add(&self, other: &LieElement) -> Self {
        LieElement { matrix: self.matrix.add(&other.matrix) }
    }

    pub fn sub(&self, other: &LieElement) -> Self {
        LieElement { matrix: self.matrix.sub(&other.matrix) }
    }

    pub fn scale(&self, s: &AlgNum) -> Self {
        LieElement { matrix: self.matrix.scale(s) }
    }

    pub fn combination<'a>(terms: impl IntoIterator<Item = (AlgNum, &'a LieElement)>) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (c, x)| acc.add(&x.scale(&c)))
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

/// Matrix commutator `XY − YX`.
pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    LieElement {
        matrix: x.matrix.mul(&y.matrix).sub(&y.matrix.mul(&x.matrix)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisKind {
    Standard,
    Cr,
    F,
}

impl BasisKind {
    pub const ALL: [BasisKind; 3] = [BasisKind::Standard, BasisKind::Cr, BasisKind::F];

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Standard => "standard",
            BasisKind::Cr => "cr",
            BasisKind::F => "f",
        }
    }
}

/// Degrees of the ten elements, shared by all three built-in bases.
pub const DEGREES: [i32; DIM] = [-2, -1, -1, 0, 0, 0, 0, 1, 1, 2];

/// `CONJ_INDEX[a]` is the CR index of `conj(e_a)`.
pub const CONJ_INDEX: [usize; DIM] = [0, 2, 1, 4, 3, 6, 5, 8, 7, 9];

const STANDARD_LABELS: [&str; DIM] = [
    "e_{-2}", "e_{-1|1}", "e_{-1|2}", "e_{0|1}", "e_{0|2}", "E_{0|1}", "E_{0|2}", "E_{1|1}", "E_{1|2}", "E_{2}",
];
pub const CR_LABELS: [&str; DIM] = [
    "e_{-2}", "e_{-1(10)}", "e_{-1(01)}", "e_{0(10)}", "e_{0(01)}", "E_{0(10)}", "E_{0(01)}", "E_{1(10)}", "E_{1(01)}",
    "E_{2}",
];
const F_LABELS: [&str; DIM] = ["f_1", "f_2", "f_3", "f_4", "f_5", "f_6", "f_7", "f_8", "f_9", "f_10"];

/// A basis of so(3,2) with lazily built coordinate extraction and structure
/// constants.
pub struct Basis {
    kind: Option<BasisKind>,
    name: String,
    labels: Vec<String>,
    elements: Vec<LieElement>,
    coords: OnceLock<Result<Coordinates, String>>,
    constants: OnceLock<Result<StructureConstants, String>>,
}

struct Coordinates {
    // a 10×10 invertible minor of the 25×10 "flattened elements" matrix
    rows: Vec<(usize, usize)>,
    inverse: Matrix,
}

impl Basis {
    pub fn new(name: impl Into<String>, labels: Vec<String>, elements: Vec<LieElement>) -> Self {
        assert_eq!(labels.len(), elements.len());
        Basis {
            kind: None,
            name: name.into(),
            labels,
            elements,
            coords: OnceLock::new(),
            constants: OnceLock::new(),
        }
    }

    pub fn kind(&self) -> Option<BasisKind> {
        self.kind
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> &[LieElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree(&self, index: usize) -> i32 {
        DEGREES[index]
    }

    fn coordinates(&self) -> Result<&Coordinates> {
        self.coords
            .get_or_init(|| {
                let flat = Matrix::from_fn(25, self.len(), |k, j| self.elements[j].matrix[(k / 5, k % 5)].clone());
                // pivot rows of the transpose pick out an invertible minor
                let (_, pivots) = flat.transpose().rref();
                if pivots.len() != self.len() {
                    return Err(self.name.clone());
                }
                let rows: Vec<(usize, usize)> = pivots.iter().map(|&k| (k / 5, k % 5)).collect();
                let minor = Matrix::from_fn(self.len(), self.len(), |r, c| flat[(pivots[r], c)].clone());
                let inverse = minor.inverse().map_err(|_| self.name.clone())?;
                Ok(Coordinates { rows, inverse })
            })
            .as_ref()
            .map_err(|name| Error::SingularBasis(name.clone()))
    }

    /// Coefficient vector of `x` in this basis.
    pub fn coords(&self, x: &LieElement) -> Result<Vec<AlgNum>> {
        let c = self.coordinates()?;
        let sample: Vec<AlgNum> = c.rows.iter().map(|&(r, k)| x.matrix[(r, k)].clone()).collect();
        let v = c.inverse.mul_vec(&sample);
        if self.expand(&v) != *x {
            return Err(Error::NotInSpan(self.name.clone()));
        }
        Ok(v)
    }

    /// The element `Σ v_j b_j`.
    pub fn expand(&self, v: &[AlgNum]) -> LieElement {
        LieElement::combination(
            v.iter()
                .zip(&self.elements)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, x)| (c.clone(), x)),
        )
    }

    pub fn structure_constants(&self) -> Result<&StructureConstants> {
        self.constants
            .get_or_init(|| compute_structure_constants(self).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|msg| Error::SingularBasis(msg.clone()))
    }

    /// Matrix of `ad_x` in this basis: column `j` holds the coordinates of `[x, b_j]`.
    pub fn ad_matrix(&self, x: &LieElement) -> Result<Matrix> {
        let columns = self
            .elements
            .iter()
            .map(|b| self.coords(&bracket(x, b)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(&columns))
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Basis").field("name", &self.name).field("labels", &self.labels).finish()
    }
}

fn standard_elements() -> Vec<LieElement> {
    let raw: [&[(usize, usize, i64)]; DIM] = [
        &[(3, 0, 1), (4, 1, -1)],
        &[(2, 0, 1), (4, 2, -1)],
        &[(2, 1, 1), (3, 2, -1)],
        &[(0, 0, 1), (1, 1, -1), (3, 3, 1), (4, 4, -1)],
        &[(0, 1, 1), (1, 0, 1), (3, 4, -1), (4, 3, -1)],
        &[(0, 0, 1), (1, 1, 1), (3, 3, -1), (4, 4, -1)],
        &[(0, 1, 1), (1, 0, -1), (3, 4, -1), (4, 3, 1)],
        &[(0, 2, 1), (2, 4, -1)],
        &[(1, 2, 1), (2, 3, -1)],
        &[(0, 3, 1), (1, 4, -1)],
    ];
    raw.iter().map(|e| LieElement::from_entries(e)).collect()
}

fn cr_elements(std: &[LieElement]) -> Vec<LieElement> {
    let half = AlgNum::frac(1, 2);
    let minus_half_i = -(&half * &AlgNum::i());
    let holo = |a: &LieElement, b: &LieElement| a.scale(&half).add(&b.scale(&minus_half_i));
    let mut out = vec![std[0].clone()];
    for pair in [(1, 2), (3, 4), (5, 6), (7, 8)] {
        let z = holo(&std[pair.0], &std[pair.1]);
        let zbar = z.conj();
        out.push(z);
        out.push(zbar);
    }
    out.push(std[9].clone());
    out
}

fn f_elements(std: &[LieElement]) -> Vec<LieElement> {
    let r6 = AlgNum::sqrt6() / AlgNum::from_int(6);
    let r12 = AlgNum::sqrt3() / AlgNum::from_int(6);
    (0..DIM)
        .map(|k| {
            let s = if (3..7).contains(&k) { &r12 } else { &r6 };
            std[k].scale(s)
        })
        .collect()
}

/// Builds one of the three bases from the standard matrices.
pub fn build_basis(kind: BasisKind) -> Basis {
    let std = standard_elements();
    let (elements, labels) = match kind {
        BasisKind::Standard => (std, STANDARD_LABELS),
        BasisKind::Cr => (cr_elements(&std), CR_LABELS),
        BasisKind::F => (f_elements(&std), F_LABELS),
    };
    let mut b = Basis::new(kind.name(), labels.iter().map(|s| s.to_string()).collect(), elements);
    b.kind = Some(kind);
    b
}

/// Shared, lazily built instance of a built-in basis.
pub fn basis(kind: BasisKind) -> &'static Basis {
    static CELLS: [OnceLock<Basis>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let idx = kind as usize;
    CELLS[idx].get_or_init(|| build_basis(kind))
}

/// The grading element `Z = E_{0|1}`.
pub fn grading_element() -> LieElement {
    standard_elements()[5].clone()
}

/// `c^a_{bc}` with `[x_b, x_c] = Σ_a c^a_{bc} x_a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub basis: String,
    pub dim: usize,
    values: Vec<AlgNum>,
}

impl StructureConstants {
    pub fn get(&self, a: usize, b: usize, c: usize) -> &AlgNum {
        &self.values[(a * self.dim + b) * self.dim + c]
    }

    /// Coordinates of `[x_b, x_c]`.
    pub fn bracket_coords(&self, b: usize, c: usize) -> Vec<AlgNum> {
        (0..self.dim).map(|a| self.get(a, b, c).clone()).collect()
    }

    /// Entries as nested arrays `[a][b][c]`.
    pub fn to_nested(&self) -> Vec<Vec<Vec<AlgNum>>> {
        (0..self.dim)
            .map(|a| {
                (0..self.dim)
                    .map(|b| (0..self.dim).map(|c| self.get(a, b, c).clone()).collect())
                    .collect()
            })
            .collect()
    }
}

fn compute_structure_constants(basis: &Basis) -> Result<StructureConstants> {
    let n = basis.len();
    let mut values = vec![AlgNum::zero(); n * n * n];
    for b in 0..n {
        for c in b + 1..n {
            let v = basis.coords(&bracket(&basis.elements[b], &basis.elements[c]))?;
            for (a, x) in v.into_iter().enumerate() {
                if !x.is_zero() {
                    values[(a * n + c) * n + b] = -&x;
                    values[(a * n + b) * n + c] = x;
                }
            }
        }
    }
    Ok(StructureConstants {
        basis: basis.name.clone(),
        dim: n,
        values,
    })
}

pub fn structure_constants(basis: &Basis) -> Result<&StructureConstants> {
    basis.structure_constants()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingTable {
    pub basis: String,
    pub degrees: Vec<i32>,
    /// Dimensions of 𝔤₋₂, …, 𝔤₂.
    pub dims: [usize; 5],
    pub m_minus: Vec<usize>,
    pub m: Vec<usize>,
    pub h: Vec<usize>,
    /// `(i, j, holds)` for every pair of degrees in −2..=2.
    pub inclusions: Vec<(i32, i32, bool)>,
    pub h_is_subalgebra: bool,
}

impl GradingTable {
    pub fn all_inclusions_hold(&self) -> bool {
        self.inclusions.iter().all(|t| t.2)
    }
}

/// Reads the degrees off `ad_Z` and checks bracket additivity exhaustively.
pub fn grading_decomposition(basis: &Basis) -> Result<GradingTable> {
    let z = grading_element();
    let mut degrees = Vec::with_capacity(basis.len());
    for (j, x) in basis.elements.iter().enumerate() {
        let zx = basis.coords(&bracket(&z, x))?;
        let eigen = zx[j].clone();
        let pure = zx.iter().enumerate().all(|(k, v)| k == j || v.is_zero());
        let k = (-2..=2).find(|&k| eigen == AlgNum::from_int(k));
        match (pure, k) {
            (true, Some(k)) => degrees.push(k as i32),
            _ => {
                return Err(Error::NotHomogeneous {
                    basis: basis.name.clone(),
                    index: j,
                })
            }
        }
    }
    let mut dims = [0usize; 5];
    for &d in &degrees {
        dims[(d + 2) as usize] += 1;
    }
    let sc = basis.structure_constants()?;
    let mut inclusions = Vec::new();
    for i in -2..=2 {
        for j in -2..=2 {
            let mut holds = true;
            for b in (0..basis.len()).filter(|&b| degrees[b] == i) {
                for c in (0..basis.len()).filter(|&c| degrees[c] == j) {
                    for a in 0..basis.len() {
                        if degrees[a] != i + j && !sc.get(a, b, c).is_zero() {
                            holds = false;
                        }
                    }
                }
            }
            inclusions.push((i, j, holds));
        }
    }
    let m_minus: Vec<usize> = (0..basis.len()).filter(|&k| degrees[k] < 0).collect();
    let m: Vec<usize> = (0..M_DIM).collect();
    let h: Vec<usize> = (M_DIM..basis.len()).collect();
    let h_is_subalgebra = h.iter().all(|&b| {
        h.iter()
            .all(|&c| (0..M_DIM).all(|a| sc.get(a, b, c).is_zero()))
    });
    Ok(GradingTable {
        basis: basis.name.clone(),
        degrees,
        dims,
        m_minus,
        m,
        h,
        inclusions,
        h_is_subalgebra,
    })
}

/// Jacobi identity on every basis triple `b < c < d`; returns the number of
/// triples checked and the failing ones.
pub fn jacobi_check(basis: &Basis) -> (usize, Vec<(usize, usize, usize)>) {
    let e = &basis.elements;
    let mut count = 0;
    let mut failures = Vec::new();
    for a in 0..e.len() {
        for b in a + 1..e.len() {
            for c in b + 1..e.len() {
                count += 1;
                let s = bracket(&bracket(&e[a], &e[b]), &e[c])
                    .add(&bracket(&bracket(&e[b], &e[c]), &e[a]))
                    .add(&bracket(&bracket(&e[c], &e[a]), &e[b]));
                if !s.is_zero() {
                    failures.push((a, b, c));
                }
            }
        }
    }
    (count, failures)
}

/// `trace(ad_x ∘ ad_y)` with adjoint matrices taken in the F basis.
pub fn killing_form(x: &LieElement, y: &LieElement) -> Result<AlgNum> {
    let f = basis(BasisKind::F);
    Ok(f.ad_matrix(x)?.mul(&f.ad_matrix(y)?).trace())
}

/// Gram matrix of the Killing form on `basis`.
pub fn killing_matrix(basis: &Basis) -> Result<Matrix> {
    let f = self::basis(BasisKind::F);
    let ads = basis
        .elements
        .iter()
        .map(|x| f.ad_matrix(x))
        .collect::<Result<Vec<_>>>()?;
    let n = basis.len();
    let mut k = Matrix::zeros(n, n);
    for r in 0..n {
        for c in r..n {
            let v = ads[r].mul(&ads[c]).trace();
            k[(c, r)] = v.clone();
            k[(r, c)] = v;
        }
    }
    Ok(k)
}

/// `P` with `to-coords = P · from-coords`.
pub fn change_of_basis(from: &Basis, to: &Basis) -> Result<Matrix> {
    let columns = from
        .elements
        .iter()
        .map(|x| to.coords(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(&columns))
}

/// The dual functional `of^index` written in the dual basis of `in_basis`.
pub fn dual_expansion(of: &Basis, index: usize, in_basis: &Basis) -> Result<Vec<AlgNum>> {
    Ok(change_of_basis(in_basis, of)?.row(index).to_vec())
}

/// Serializable form of a basis: labels and exact matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    pub name: String,
    pub kind: Option<BasisKind>,
    pub labels: Vec<String>,
    pub matrices: Vec<Vec<Vec<AlgNum>>>,
}

impl BasisDoc {
    pub fn from_basis(b: &Basis) -> Self {
        BasisDoc {
            name: b.name.clone(),
            kind: b.kind,
            labels: b.labels.clone(),
            matrices: b.elements.iter().map(|x| x.matrix.to_rows()).collect(),
        }
    }

    pub fn into_basis(self) -> Result<Basis> {
        let elements = self
            .matrices
            .into_iter()
            .map(|rows| LieElement::new(Matrix::from_rows(rows)))
            .collect::<Result<Vec<_>>>()?;
        let mut b = Basis::new(self.name, self.labels, elements);
        b.kind = self.kind;
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn congruence_maps_i32_to_cal_i() {
        let s = congruence();
        let lhs = s.transpose().mul(&QuadraticForm::i32().matrix).mul(&s);
        assert_eq!(lhs, QuadraticForm::cal_i().matrix);
    }

    #[test]
    fn all_bases_lie_in_so32() {
        let form = QuadraticForm::cal_i();
        for kind in BasisKind::ALL {
            for x in basis(kind).elements() {
                assert!(membership_so32(x.matrix(), &form));
            }
        }
        assert!(!membership_so32(&Matrix::identity(5), &form));
    }

    #[test]
    fn cr_pair_sums_to_real_part() {
        let std = basis(BasisKind::Standard).elements();
        let cr = basis(BasisKind::Cr).elements();
        assert_eq!(cr[1].add(&cr[2]), std[1]);
        assert_eq!(cr[2], cr[1].conj());
    }

    #[test]
    fn z_bracket_and_first_structure_constant() {
        let std = basis(BasisKind::Standard).elements();
        assert_eq!(bracket(&grading_element(), &std[0]), std[0].scale(&AlgNum::from_int(-2)));
        let cr = basis(BasisKind::Cr);
        let sc = cr.structure_constants().unwrap();
        assert_eq!(*sc.get(0, 1, 2), AlgNum::i() / AlgNum::from_int(2));
        assert_eq!(*sc.get(0, 2, 1), -(AlgNum::i() / AlgNum::from_int(2)));
    }

    #[test]
    fn grading_dims() {
        for kind in BasisKind::ALL {
            let g = grading_decomposition(basis(kind)).unwrap();
            assert_eq!(g.dims, [1, 2, 4, 2, 1]);
            assert_eq!(g.degrees, DEGREES.to_vec());
            assert!(g.all_inclusions_hold());
            assert!(g.h_is_subalgebra);
        }
    }

    #[test]
    fn dual_of_e0_10() {
        let cr = basis(BasisKind::Cr);
        let f = basis(BasisKind::F);
        let v = dual_expansion(cr, 3, f).unwrap();
        let c = AlgNum::sqrt3() / AlgNum::from_int(6);
        assert_eq!(v[3], c);
        assert_eq!(v[4], &c * &AlgNum::i());
        assert!(v.iter().enumerate().all(|(k, x)| k == 3 || k == 4 || x.is_zero()));
    }

    #[test]
    fn killing_is_three_trace() {
        let f = basis(BasisKind::F);
        let k = killing_matrix(f).unwrap();
        for (r, x) in f.elements().iter().enumerate() {
            for (c, y) in f.elements().iter().enumerate() {
                let tr = x.matrix().mul(y.matrix()).trace();
                assert_eq!(k[(r, c)], &tr * &AlgNum::from_int(3));
            }
        }
        assert_eq!(k[(6, 6)], AlgNum::from_int(-1));
        assert_eq!(k[(0, 9)], AlgNum::one());
        assert_eq!(k[(1, 7)], AlgNum::one());
    }
}
