//! Chevalley–Eilenberg differential, codifferential kernels via Killing
//! duality, the generators of 𝔩¹, and conversion to CR curvature components.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::{AppendixFixture, Term};
use crate::liealg::{basis, change_of_basis, killing_matrix, BasisKind, CONJ_INDEX, DEGREES, DIM, M_DIM};
use crate::linalg::Matrix;
use crate::numfield::AlgNum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CochainKind {
    /// Hom(𝔥, 𝔤)
    HomHG,
    /// Hom(𝔪, 𝔤)
    HomMG,
    /// Hom(Λ²𝔪₋, 𝔤)
    Lambda2MMinus,
    /// Hom(Λ²𝔤, 𝔤), the codomain of the differential
    Lambda2G,
}

impl CochainKind {
    pub fn is_linear(self) -> bool {
        matches!(self, CochainKind::HomHG | CochainKind::HomMG)
    }

    /// Basis indices on which a linear map of this kind is defined.
    pub fn domain(self) -> std::ops::Range<usize> {
        match self {
            CochainKind::HomHG => M_DIM..DIM,
            CochainKind::HomMG => 0..M_DIM,
            CochainKind::Lambda2MMinus => 0..3,
            CochainKind::Lambda2G => 0..DIM,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Source {
    One(usize),
    /// Always stored with the smaller index first.
    Pair(usize, usize),
}

/// A linear or antisymmetric bilinear map between graded pieces, with
/// coefficients keyed by `(target, source)` in one basis.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct CochainMap {
    pub kind: CochainKind,
    pub basis: BasisKind,
    pub shifting_degree: Option<i32>,
    entries: BTreeMap<(usize, Source), AlgNum>,
}

impl CochainMap {
    pub fn new(kind: CochainKind, basis: BasisKind) -> Self {
        CochainMap {
            kind,
            basis,
            shifting_degree: None,
            entries: BTreeMap::new(),
        }
    }

    pub fn with_degree(mut self, d: i32) -> Self {
        self.shifting_degree = Some(d);
        self
    }

    pub fn set_linear(&mut self, target: usize, source: usize, value: AlgNum) {
        assert!(self.kind.is_linear());
        self.put((target, Source::One(source)), value);
    }

    /// Sets `τ(b_j, b_k)` component `target`; the swapped pair gets the negative.
    pub fn set_bilinear(&mut self, target: usize, j: usize, k: usize, value: AlgNum) {
        assert!(!self.kind.is_linear());
        assert_ne!(j, k, "alternating map");
        let (key, v) = if j < k {
            (Source::Pair(j, k), value)
        } else {
            (Source::Pair(k, j), -value)
        };
        self.put((target, key), v);
    }

    fn put(&mut self, key: (usize, Source), value: AlgNum) {
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn linear(&self, target: usize, source: usize) -> AlgNum {
        self.entries
            .get(&(target, Source::One(source)))
            .cloned()
            .unwrap_or_else(AlgNum::zero)
    }

    pub fn bilinear(&self, target: usize, j: usize, k: usize) -> AlgNum {
        use std::cmp::Ordering::*;
        match j.cmp(&k) {
            Equal => AlgNum::zero(),
            Less => self.entries.get(&(target, Source::Pair(j, k))).cloned().unwrap_or_else(AlgNum::zero),
            Greater => -self.entries.get(&(target, Source::Pair(k, j))).cloned().unwrap_or_else(AlgNum::zero),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, Source), &AlgNum)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Image of the basis element `b_source` (zero off the domain).
    pub fn apply_basis(&self, source: usize) -> Vec<AlgNum> {
        let mut out = vec![AlgNum::zero(); DIM];
        if self.kind.domain().contains(&source) {
            for ((t, s), v) in &self.entries {
                if *s == Source::One(source) {
                    out[*t] = v.clone();
                }
            }
        }
        out
    }

    /// Image of the vector with coordinates `x`; components off the domain are dropped.
    pub fn apply(&self, x: &[AlgNum]) -> Vec<AlgNum> {
        let mut out = vec![AlgNum::zero(); DIM];
        for ((t, s), v) in &self.entries {
            if let Source::One(s) = *s {
                if self.kind.domain().contains(&s) && !x[s].is_zero() {
                    out[*t] += &(v * &x[s]);
                }
            }
        }
        out
    }

    /// `τ(x, y)` for coordinate vectors `x`, `y`.
    pub fn apply2(&self, x: &[AlgNum], y: &[AlgNum]) -> Vec<AlgNum> {
        let mut out = vec![AlgNum::zero(); DIM];
        for ((t, s), v) in &self.entries {
            if let Source::Pair(j, k) = *s {
                let w = &(&x[j] * &y[k]) - &(&x[k] * &y[j]);
                if !w.is_zero() {
                    out[*t] += &(v * &w);
                }
            }
        }
        out
    }

    /// True when every entry respects the declared shifting degree.
    pub fn respects_degree(&self) -> bool {
        let Some(d) = self.shifting_degree else {
            return true;
        };
        self.entries.keys().all(|(t, s)| match *s {
            Source::One(s) => DEGREES[*t] == DEGREES[s] + d,
            Source::Pair(j, k) => DEGREES[*t] == DEGREES[j] + DEGREES[k] + d,
        })
    }
}

impl fmt::Debug for CochainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CochainMap({:?}, {:?}", self.kind, self.basis)?;
        for ((t, s), v) in &self.entries {
            match s {
                Source::One(s) => write!(f, ", {v}·{}⊗{}*", t + 1, s + 1)?,
                Source::Pair(j, k) => write!(f, ", {v}·{}⊗({}∧{})*", t + 1, j + 1, k + 1)?,
            }
        }
        write!(f, ")")
    }
}

/// Coordinates of `∂A(b_x, b_y) = [b_x, A(b_y)] − [b_y, A(b_x)] − A(π[b_x, b_y])`,
/// where `π` keeps only the components in the domain of `A`.
pub fn spencer_value(a: &CochainMap, x: usize, y: usize) -> Result<Vec<AlgNum>> {
    let sc = basis(a.basis).structure_constants()?;
    let ax = a.apply_basis(x);
    let ay = a.apply_basis(y);
    let mut out = vec![AlgNum::zero(); DIM];
    for m in 0..DIM {
        for t in 0..DIM {
            if !ay[m].is_zero() {
                let c = sc.get(t, x, m);
                if !c.is_zero() {
                    out[t] += &(c * &ay[m]);
                }
            }
            if !ax[m].is_zero() {
                let c = sc.get(t, y, m);
                if !c.is_zero() {
                    out[t] -= &(c * &ax[m]);
                }
            }
        }
    }
    let xy = sc.bracket_coords(x, y);
    let pushed = a.apply(&xy);
    for t in 0..DIM {
        out[t] -= &pushed[t];
    }
    Ok(out)
}

/// `∂A` evaluated on the requested argument pairs.
pub fn spencer_differential(a: &CochainMap, pairs: &[(usize, usize)]) -> Result<CochainMap> {
    if !a.kind.is_linear() {
        return Err(Error::UnsupportedFormat(format!("differential of {:?}", a.kind)));
    }
    let mut out = CochainMap::new(CochainKind::Lambda2G, a.basis);
    for &(x, y) in pairs {
        if x == y {
            continue;
        }
        for (t, v) in spencer_value(a, x, y)?.into_iter().enumerate() {
            out.set_bilinear(t, x, y, v);
        }
    }
    Ok(out)
}

/// Killing duality on the F basis: `f^α = ε_α ⟨f̂_α, ·⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HatDual {
    /// `hat[α]` is the index of `f̂_α`.
    pub hat: [usize; DIM],
    pub sign: [i32; DIM],
}

pub fn hat_duality() -> Result<HatDual> {
    let k = killing_matrix(basis(BasisKind::F))?;
    let mut hat = [0; DIM];
    let mut sign = [0; DIM];
    for a in 0..DIM {
        let nonzero: Vec<usize> = (0..DIM).filter(|&b| !k[(a, b)].is_zero()).collect();
        let [b] = nonzero[..] else {
            return Err(Error::SingularBasis("Killing matrix is not a signed permutation".into()));
        };
        sign[a] = if k[(a, b)] == AlgNum::one() {
            1
        } else if k[(a, b)] == AlgNum::from_int(-1) {
            -1
        } else {
            return Err(Error::SingularBasis("Killing matrix entry is not ±1".into()));
        };
        hat[a] = b;
    }
    Ok(HatDual { hat, sign })
}

impl HatDual {
    /// Checks `f^α(f_γ) = ε_α K(f̂_α, f_γ)` over all pairs; returns the failures.
    pub fn pairing_consistency(&self) -> Result<Vec<(usize, usize)>> {
        let k = killing_matrix(basis(BasisKind::F))?;
        let mut bad = Vec::new();
        for a in 0..DIM {
            for g in 0..DIM {
                let lhs = if a == g { AlgNum::one() } else { AlgNum::zero() };
                let rhs = &k[(self.hat[a], g)] * &AlgNum::from_int(self.sign[a] as i64);
                if lhs != rhs {
                    bad.push((a, g));
                }
            }
        }
        Ok(bad)
    }
}

/// Component `τ^i_{jk}` of a map on Λ²𝔪₋ (0-based indices into the F basis).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TauIndex {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl TauIndex {
    pub fn label(&self) -> String {
        format!("{}_{}{}", self.i + 1, self.j + 1, self.k + 1)
    }

    pub fn parse(label: &str) -> Result<Self> {
        let bad = || Error::UnknownSymbol(label.to_string());
        let (i, jk) = label.split_once('_').ok_or_else(bad)?;
        let i: usize = i.parse().map_err(|_| bad())?;
        let mut digits = jk.chars().map(|c| c.to_digit(10).map(|d| d as usize));
        let (Some(Some(j)), Some(Some(k)), None) = (digits.next(), digits.next(), digits.next()) else {
            return Err(bad());
        };
        if !(1..=DIM).contains(&i) || !(1..=3).contains(&j) || !(1..=3).contains(&k) || j >= k {
            return Err(bad());
        }
        Ok(TauIndex { i: i - 1, j: j - 1, k: k - 1 })
    }
}

/// Components of a map in Hom(Λ²𝔪₋, 𝔤) of shifting degree `d`, in display order.
pub fn tau_components(d: i32) -> Result<Vec<TauIndex>> {
    if !(1..=3).contains(&d) {
        return Err(Error::UnsupportedDegree(d));
    }
    let mut out = Vec::new();
    for (j, k) in [(0, 1), (0, 2), (1, 2)] {
        for i in 0..DIM {
            if DEGREES[i] == DEGREES[j] + DEGREES[k] + d {
                out.push(TauIndex { i, j, k });
            }
        }
    }
    Ok(out)
}

/// Index of `E^α_β` (α any, β in 𝔥) among the 50 spanning maps of Hom(𝔥,𝔤).
pub fn a_index(alpha: usize, beta: usize) -> usize {
    alpha * (DIM - M_DIM) + (beta - M_DIM)
}

pub fn a_label(idx: usize) -> String {
    let alpha = idx / (DIM - M_DIM);
    let beta = idx % (DIM - M_DIM) + M_DIM;
    format!("{}_{}", alpha + 1, beta + 1)
}

pub fn parse_a_label(label: &str) -> Result<usize> {
    let bad = || Error::UnknownSymbol(label.to_string());
    let (a, b) = label.split_once('_').ok_or_else(bad)?;
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    if !(1..=DIM).contains(&a) || !(M_DIM + 1..=DIM).contains(&b) {
        return Err(bad());
    }
    Ok(a_index(a - 1, b - 1))
}

pub const HOM_H_G_DIM: usize = DIM * (DIM - M_DIM);

fn unit_map(alpha: usize, beta: usize) -> CochainMap {
    let mut a = CochainMap::new(CochainKind::HomHG, BasisKind::F);
    a.set_linear(alpha, beta, AlgNum::one());
    a
}

/// The pairing matrix: entry `(A, c)` is `ε_i f̂^i(∂E^α_β(f̂_j, f̂_k))` for
/// `A = E^α_β` and component `c = τ^i_{jk}`.
pub fn pairing_system(d: i32) -> Result<(Vec<TauIndex>, Matrix)> {
    let comps = tau_components(d)?;
    let hd = hat_duality()?;
    let mut m = Matrix::zeros(HOM_H_G_DIM, comps.len());
    for alpha in 0..DIM {
        for beta in M_DIM..DIM {
            let a = unit_map(alpha, beta);
            let row = a_index(alpha, beta);
            let mut cache: BTreeMap<(usize, usize), Vec<AlgNum>> = BTreeMap::new();
            for (col, c) in comps.iter().enumerate() {
                let (x, y) = (hd.hat[c.j], hd.hat[c.k]);
                if let std::collections::btree_map::Entry::Vacant(e) = cache.entry((x, y)) {
                    e.insert(spencer_value(&a, x, y)?);
                }
                let v = &cache[&(x, y)][hd.hat[c.i]];
                m[(row, col)] = v * &AlgNum::from_int(hd.sign[c.i] as i64);
            }
        }
    }
    Ok((comps, m))
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub degree: i32,
    pub components: Vec<String>,
    pub system_rows: usize,
    pub system_cols: usize,
    pub rank: usize,
    pub dimension: usize,
    /// Kernel basis as F-basis component vectors, aligned with `components`.
    pub basis: Vec<Vec<AlgNum>>,
    /// For degree 3: the CR curvature components of each basis element.
    pub cr_components: Option<Vec<CurvatureComponentVector>>,
}

/// Basis of the τ of shifting degree `d` orthogonal to `∂ Hom(𝔥,𝔤)`.
pub fn codifferential_kernel(d: i32) -> Result<KernelReport> {
    let (comps, m) = pairing_system(d)?;
    let basis = m.nullspace();
    let cr_components = if d == 3 {
        Some(
            basis
                .iter()
                .map(|v| kernel_to_cr_components(&tau_map(&comps, v, d)))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    Ok(KernelReport {
        degree: d,
        components: comps.iter().map(TauIndex::label).collect(),
        system_rows: m.rows(),
        system_cols: m.cols(),
        rank: m.rank(),
        dimension: basis.len(),
        basis,
        cr_components,
    })
}

/// Assembles the bilinear map with the given component values.
pub fn tau_map(comps: &[TauIndex], values: &[AlgNum], d: i32) -> CochainMap {
    let mut t = CochainMap::new(CochainKind::Lambda2MMinus, BasisKind::F).with_degree(d);
    for (c, v) in comps.iter().zip(values) {
        t.set_bilinear(c.i, c.j, c.k, v.clone());
    }
    t
}

/// A coefficient vector over `labels` from fixture terms.
pub fn terms_to_vector(terms: &[Term], labels: &[String]) -> Result<Vec<AlgNum>> {
    let mut v = vec![AlgNum::zero(); labels.len()];
    for (c, l) in terms {
        let idx = labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownSymbol(l.clone()))?;
        v[idx] += c;
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormDiscrepancy {
    pub tau: String,
    pub a: String,
    pub printed: AlgNum,
    pub computed: AlgNum,
}

/// Compares each reference linear form (coefficient of `τ^i_{jk}` as a form
/// in the components of `A`) with the computed pairing column.
pub fn linear_form_discrepancies(d: i32, fixture: &AppendixFixture) -> Result<Vec<FormDiscrepancy>> {
    let (comps, m) = pairing_system(d)?;
    let group = fixture
        .linear_forms(d)
        .ok_or_else(|| Error::UnknownSymbol(format!("linear forms of degree {d}")))?;
    let a_labels: Vec<String> = (0..HOM_H_G_DIM).map(a_label).collect();
    let mut out = Vec::new();
    let mut seen = vec![false; comps.len()];
    for form in &group.forms {
        let t = TauIndex::parse(&form.tau)?;
        let col = comps.iter().position(|c| *c == t).ok_or_else(|| Error::UnknownSymbol(form.tau.clone()))?;
        seen[col] = true;
        let printed = terms_to_vector(&form.terms, &a_labels)?;
        for (row, p) in printed.iter().enumerate() {
            if *p != m[(row, col)] {
                out.push(FormDiscrepancy {
                    tau: form.tau.clone(),
                    a: a_labels[row].clone(),
                    printed: p.clone(),
                    computed: m[(row, col)].clone(),
                });
            }
        }
    }
    for (col, s) in seen.iter().enumerate() {
        if !s {
            // an unlisted component must pair trivially with everything
            for row in 0..m.rows() {
                if !m[(row, col)].is_zero() {
                    out.push(FormDiscrepancy {
                        tau: comps[col].label(),
                        a: a_labels[row].clone(),
                        printed: AlgNum::zero(),
                        computed: m[(row, col)].clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

fn normalize_row(row: &[AlgNum]) -> Option<Vec<AlgNum>> {
    let lead = row.iter().find(|x| !x.is_zero())?;
    let inv = lead.inv().ok()?;
    Some(row.iter().map(|x| x * &inv).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct SystemCheck {
    pub degree: i32,
    pub rows: usize,
    pub variables: usize,
    pub printed_rank: usize,
    pub computed_rank: usize,
    /// Printed rows with no proportional computed row, with the residual
    /// against the computed row sharing its leading variable.
    pub unmatched_printed: Vec<(usize, Vec<AlgNum>)>,
    /// Distinct computed rows not proportional to any printed row.
    pub unmatched_computed: usize,
}

impl SystemCheck {
    pub fn residual_is_zero(&self) -> bool {
        self.unmatched_printed.is_empty() && self.unmatched_computed == 0
    }
}

/// Matches the printed equations of a kernel system against the rows of the
/// pairing matrix (one equation per component of `A`), up to scaling.
pub fn system_check(d: i32, printed: &[Vec<Term>]) -> Result<SystemCheck> {
    let (comps, m) = pairing_system(d)?;
    let labels: Vec<String> = comps.iter().map(TauIndex::label).collect();
    let printed_rows = printed
        .iter()
        .map(|r| terms_to_vector(r, &labels))
        .collect::<Result<Vec<_>>>()?;
    let mut computed: Vec<Vec<AlgNum>> = Vec::new();
    for r in 0..m.rows() {
        if let Some(n) = normalize_row(m.row(r)) {
            if !computed.contains(&n) {
                computed.push(n);
            }
        }
    }
    let mut unmatched_printed = Vec::new();
    let mut matched = vec![false; computed.len()];
    for (idx, p) in printed_rows.iter().enumerate() {
        let np = normalize_row(p).unwrap_or_else(|| p.clone());
        match computed.iter().position(|c| *c == np) {
            Some(k) => matched[k] = true,
            None => {
                let lead = np.iter().position(|x| !x.is_zero());
                let other = computed
                    .iter()
                    .find(|c| c.iter().position(|x| !x.is_zero()) == lead)
                    .cloned()
                    .unwrap_or_else(|| vec![AlgNum::zero(); labels.len()]);
                unmatched_printed.push((idx, np.iter().zip(&other).map(|(a, b)| a - b).collect()));
            }
        }
    }
    Ok(SystemCheck {
        degree: d,
        rows: printed_rows.len(),
        variables: labels.len(),
        printed_rank: Matrix::from_rows(printed_rows).rank(),
        computed_rank: m.rank(),
        unmatched_printed,
        unmatched_computed: matched.iter().filter(|m| !**m).count(),
    })
}

pub fn degree2_system_check(fixture: &AppendixFixture) -> Result<SystemCheck> {
    system_check(2, &fixture.degree2_system)
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducedCheck {
    /// `(kernel basis index, relation index)` pairs that fail.
    pub violations: Vec<(usize, usize)>,
    pub relations_rank: usize,
    /// True when the relations cut out exactly the computed kernel.
    pub same_space: bool,
}

/// Evaluates the reduced degree-3 relations on the computed kernel.
pub fn degree3_reduced_check(fixture: &AppendixFixture) -> Result<ReducedCheck> {
    let report = codifferential_kernel(3)?;
    let rel = fixture
        .degree3_reduced
        .iter()
        .map(|r| terms_to_vector(r, &report.components))
        .collect::<Result<Vec<_>>>()?;
    let mut violations = Vec::new();
    for (b, v) in report.basis.iter().enumerate() {
        for (r, row) in rel.iter().enumerate() {
            let s: AlgNum = row.iter().zip(v).map(|(a, b)| a * b).sum();
            if !s.is_zero() {
                violations.push((b, r));
            }
        }
    }
    let rank = Matrix::from_rows(rel).rank();
    Ok(ReducedCheck {
        same_space: violations.is_empty() && rank + report.dimension == report.components.len(),
        violations,
        relations_rank: rank,
    })
}

/// The five complex curvature components cut out by condition (c).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvatureComponentVector {
    /// T^{0(10)}_{−2,−1(10)}
    pub t_m2_m1a: AlgNum,
    /// T^{0(10)}_{−2,−1(01)}
    pub t_m2_m1b: AlgNum,
    /// R^{0(10)}_{−2,−1(10)}
    pub r0_m2_m1a: AlgNum,
    /// R^{0(10)}_{−2,−1(01)}
    pub r0_m2_m1b: AlgNum,
    /// R^{1(10)}_{−1(10),−1(01)}
    pub r1_m1a_m1b: AlgNum,
}

pub const CURVATURE_COMPONENT_NAMES: [&str; 5] = [
    "T^{0(10)}_{-2,-1(10)}",
    "T^{0(10)}_{-2,-1(01)}",
    "R^{0(10)}_{-2,-1(10)}",
    "R^{0(10)}_{-2,-1(01)}",
    "R^{1(10)}_{-1(10),-1(01)}",
];

impl CurvatureComponentVector {
    pub fn as_array(&self) -> [&AlgNum; 5] {
        [&self.t_m2_m1a, &self.t_m2_m1b, &self.r0_m2_m1a, &self.r0_m2_m1b, &self.r1_m1a_m1b]
    }

    /// `conj(R0a) + ½T + ½R0b`
    pub fn residual_c1(&self) -> AlgNum {
        let h = AlgNum::frac(1, 2);
        self.r0_m2_m1a.conj() + &h * &self.t_m2_m1a + &h * &self.r0_m2_m1b
    }

    /// `R1 − (i/2)T + (i/2)R0b`
    pub fn residual_c2(&self) -> AlgNum {
        let hi = AlgNum::i() * AlgNum::frac(1, 2);
        &self.r1_m1a_m1b - &(&hi * &self.t_m2_m1a) + &hi * &self.r0_m2_m1b
    }

    pub fn residual_c1_conj(&self) -> AlgNum {
        let h = AlgNum::frac(1, 2);
        &self.r0_m2_m1a + &(&h * &self.t_m2_m1a.conj()) + &h * &self.r0_m2_m1b.conj()
    }

    pub fn residual_c2_conj(&self) -> AlgNum {
        let hi = AlgNum::i() * AlgNum::frac(1, 2);
        self.r1_m1a_m1b.conj() + &hi * &self.t_m2_m1a.conj() - &hi * &self.r0_m2_m1b.conj()
    }

    /// `R1 + i conj(R0a) + i R0b`
    pub fn residual_r1_from_r0(&self) -> AlgNum {
        let i = AlgNum::i();
        &self.r1_m1a_m1b + &(&i * &self.r0_m2_m1a.conj()) + &i * &self.r0_m2_m1b
    }

    /// `T + 2 conj(R0a) + R0b`
    pub fn residual_t_from_r0(&self) -> AlgNum {
        &self.t_m2_m1a + &(AlgNum::from_int(2) * self.r0_m2_m1a.conj()) + self.r0_m2_m1b.clone()
    }

    pub fn residuals(&self) -> [AlgNum; 6] {
        [
            self.residual_c1(),
            self.residual_c2(),
            self.residual_c1_conj(),
            self.residual_c2_conj(),
            self.residual_r1_from_r0(),
            self.residual_t_from_r0(),
        ]
    }
}

/// `X^A(τ(e_B, e_C))` with CR basis vectors and CR dual functionals.
pub fn cr_component(tau: &CochainMap, a: usize, b: usize, c: usize) -> Result<AlgNum> {
    let cr = basis(BasisKind::Cr);
    let f = basis(tau.basis);
    let to_tau = change_of_basis(cr, f)?;
    let to_cr = change_of_basis(f, cr)?;
    let value = tau.apply2(&to_tau.column(b), &to_tau.column(c));
    Ok(to_cr.mul_vec(&value)[a].clone())
}

pub fn kernel_to_cr_components(tau: &CochainMap) -> Result<CurvatureComponentVector> {
    if tau.shifting_degree != Some(3) {
        return Err(Error::UnsupportedDegree(tau.shifting_degree.unwrap_or(0)));
    }
    Ok(CurvatureComponentVector {
        t_m2_m1a: cr_component(tau, 3, 0, 1)?,
        t_m2_m1b: cr_component(tau, 3, 0, 2)?,
        r0_m2_m1a: cr_component(tau, 5, 0, 1)?,
        r0_m2_m1b: cr_component(tau, 5, 0, 2)?,
        r1_m1a_m1b: cr_component(tau, 7, 1, 2)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConversionCheck {
    pub component: String,
    /// Computed / reference ratio on every unit τ, when constant.
    pub factor: Option<AlgNum>,
    pub expected_factor: AlgNum,
}

impl ConversionCheck {
    pub fn holds(&self) -> bool {
        self.factor.as_ref() == Some(&self.expected_factor)
    }
}

/// Compares the reference conversion formulas with the computed CR
/// components on all ten unit maps of degree 3.
pub fn conversion_checks(fixture: &AppendixFixture) -> Result<Vec<ConversionCheck>> {
    let comps = tau_components(3)?;
    let labels: Vec<String> = comps.iter().map(TauIndex::label).collect();
    let mut computed = vec![Vec::new(); 5];
    for k in 0..comps.len() {
        let mut v = vec![AlgNum::zero(); comps.len()];
        v[k] = AlgNum::one();
        let c = kernel_to_cr_components(&tau_map(&comps, &v, 3))?;
        for (slot, x) in computed.iter_mut().zip(c.as_array()) {
            slot.push(x.clone());
        }
    }
    let mut out = Vec::new();
    for formula in &fixture.cr_conversion {
        let slot = CURVATURE_COMPONENT_NAMES
            .iter()
            .position(|n| *n == formula.component)
            .ok_or_else(|| Error::UnknownSymbol(formula.component.clone()))?;
        let printed = terms_to_vector(&formula.terms, &labels)?;
        let mut factor: Option<AlgNum> = None;
        let mut consistent = true;
        for (p, c) in printed.iter().zip(&computed[slot]) {
            match (p.is_zero(), c.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let r = c / p;
                    match &factor {
                        None => factor = Some(r),
                        Some(f) if *f == r => {}
                        Some(_) => consistent = false,
                    }
                }
                _ => consistent = false,
            }
        }
        out.push(ConversionCheck {
            component: formula.component.clone(),
            factor: if consistent { factor } else { None },
            expected_factor: formula.erratum_factor.clone().unwrap_or_else(AlgNum::one),
        });
    }
    Ok(out)
}

/// One of the eight generators of 𝔩¹ ⊂ Hom(𝔪, 𝔤), in CR coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct L1Generator {
    pub index: usize,
    pub map: CochainMap,
}

impl L1Generator {
    /// `B(e_source)` in CR coordinates.
    pub fn apply(&self, source: usize) -> Vec<AlgNum> {
        self.map.apply_basis(source)
    }

    /// Real under the CR reality pairing: `conj(B(conj x)) = B(x)`.
    pub fn is_real(&self) -> bool {
        self.map.entries().all(|((t, s), v)| match *s {
            Source::One(s) => self.map.linear(CONJ_INDEX[*t], CONJ_INDEX[s]) == v.conj(),
            Source::Pair(..) => false,
        })
    }
}

pub fn l1_generators() -> Vec<L1Generator> {
    let i = AlgNum::i;
    let one = AlgNum::one;
    // (target, source, coefficient) in the CR basis
    let table: [Vec<(usize, usize, AlgNum)>; 8] = [
        vec![(1, 0, one()), (2, 0, one())],
        vec![(1, 0, i()), (2, 0, -i())],
        vec![(3, 1, one()), (6, 1, -one()), (4, 2, one()), (5, 2, -one())],
        vec![(3, 1, i()), (6, 1, -i()), (4, 2, -i()), (5, 2, i())],
        vec![(3, 1, i()), (6, 1, i()), (4, 2, -i()), (5, 2, -i())],
        // second summand taken with + so that the map is real
        vec![(3, 1, one()), (6, 1, one()), (4, 2, one()), (5, 2, one())],
        vec![(5, 1, one()), (6, 1, one()), (5, 2, one()), (6, 2, one())],
        vec![(5, 1, i()), (6, 1, i()), (5, 2, -i()), (6, 2, -i())],
    ];
    table
        .into_iter()
        .enumerate()
        .map(|(k, entries)| {
            let mut map = CochainMap::new(CochainKind::HomMG, BasisKind::Cr);
            for (t, s, v) in entries {
                map.set_linear(t, s, v);
            }
            L1Generator { index: k + 1, map }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionReport {
    /// Per generator: `(∂B)^{−2}_{−2,−1(10)}`, `(∂B)^{−1(10)}_{−1(10),−1(01)}`, `(∂B)^{−1(01)}_{−1(10),−1(01)}`.
    pub components: Vec<[AlgNum; 3]>,
    pub generators_real: bool,
    pub generators_rank: usize,
    /// Real rank of the image in the 4-dimensional Tor¹(𝔪).
    pub image_rank: usize,
    pub complement_dimension: usize,
    pub complement_basis: Vec<Vec<AlgNum>>,
}

impl TorsionReport {
    /// Looks up a component by generator number (1-based) and upper index label.
    pub fn component(&self, generator: usize, upper: &str) -> Option<&AlgNum> {
        let slot = match upper {
            "-2" => 0,
            "-1(10)" => 1,
            "-1(01)" => 2,
            _ => return None,
        };
        self.components.get(generator.checked_sub(1)?).map(|c| &c[slot])
    }
}

/// Computes `(∂𝔩¹)^⊥` inside Tor¹(𝔪), with the four real component
/// functionals declared orthonormal.
pub fn torsion_complement() -> Result<TorsionReport> {
    let gens = l1_generators();
    let mut components = Vec::new();
    let mut real_rows = Vec::new();
    for g in &gens {
        let a = spencer_value(&g.map, 0, 1)?[0].clone();
        let ab = spencer_value(&g.map, 1, 2)?;
        let (b, bb) = (ab[1].clone(), ab[2].clone());
        real_rows.push(vec![a.re(), a.im(), b.re(), b.im()]);
        components.push([a, b, bb]);
    }
    // realified coefficient vectors for independence over ℝ
    let flat: Vec<Vec<AlgNum>> = gens
        .iter()
        .map(|g| {
            let mut v = Vec::new();
            for t in 0..DIM {
                for s in 0..M_DIM {
                    let c = g.map.linear(t, s);
                    v.push(c.re());
                    v.push(c.im());
                }
            }
            v
        })
        .collect();
    let m = Matrix::from_rows(real_rows);
    let complement_basis = m.nullspace();
    Ok(TorsionReport {
        components,
        generators_real: gens.iter().all(L1Generator::is_real),
        generators_rank: Matrix::from_rows(flat).rank(),
        image_rank: m.rank(),
        complement_dimension: complement_basis.len(),
        complement_basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hat_pairs() {
        let hd = hat_duality().unwrap();
        assert_eq!(hd.hat, [9, 7, 8, 3, 4, 5, 6, 1, 2, 0]);
        assert_eq!(hd.sign[6], -1);
        assert!(hd.sign.iter().enumerate().all(|(k, s)| k == 6 || *s == 1));
        assert!(hd.pairing_consistency().unwrap().is_empty());
    }

    #[test]
    fn degree_patterns() {
        assert_eq!(tau_components(1).unwrap().len(), 4);
        assert_eq!(tau_components(2).unwrap().len(), 8);
        assert_eq!(tau_components(3).unwrap().len(), 10);
        assert!(tau_components(4).is_err());
        let labels: Vec<String> = tau_components(1).unwrap().iter().map(TauIndex::label).collect();
        assert_eq!(labels, ["1_12", "1_13", "2_23", "3_23"]);
    }

    #[test]
    fn differential_of_zero_vanishes() {
        let a = CochainMap::new(CochainKind::HomHG, BasisKind::F);
        let pairs: Vec<(usize, usize)> = (0..DIM).flat_map(|x| (x + 1..DIM).map(move |y| (x, y))).collect();
        assert!(spencer_differential(&a, &pairs).unwrap().is_zero());
    }

    #[test]
    fn first_coefficient() {
        // f^10(∂A(f_10, f_8)) as a form in A
        let (_, m) = pairing_system(1).unwrap();
        let col: Vec<(String, AlgNum)> = (0..HOM_H_G_DIM)
            .filter(|&r| !m[(r, 0)].is_zero())
            .map(|r| (a_label(r), m[(r, 0)].clone()))
            .collect();
        let r3 = AlgNum::sqrt3() / AlgNum::from_int(3);
        let r6 = AlgNum::sqrt6() / AlgNum::from_int(6);
        assert_eq!(col, vec![("6_8".to_string(), -r3), ("9_10".to_string(), r6)]);
    }

    #[test]
    fn kernel_dimensions() {
        for (d, dim) in [(1, 0), (2, 1), (3, 6)] {
            assert_eq!(codifferential_kernel(d).unwrap().dimension, dim);
        }
    }

    #[test]
    fn printed_degree2_system_annihilates_kernel() {
        let fx = crate::fixtures::Fixtures::embedded().unwrap();
        let k = codifferential_kernel(2).unwrap();
        for row in &fx.appendix.degree2_system {
            let coeffs = terms_to_vector(row, &k.components).unwrap();
            let v: AlgNum = coeffs.iter().zip(&k.basis[0]).map(|(a, b)| a * b).sum();
            assert!(v.is_zero());
        }
    }

    #[test]
    fn generators_apply() {
        let g = l1_generators();
        let b1 = g[0].apply(0);
        assert!(b1[1].is_one() && b1[2].is_one());
        assert!(g[2].apply(0).iter().all(AlgNum::is_zero));
        assert!(g.iter().all(L1Generator::is_real));
    }

    #[test]
    fn torsion() {
        let t = torsion_complement().unwrap();
        assert_eq!(*t.component(3, "-2").unwrap(), AlgNum::from_int(-1));
        assert_eq!(*t.component(4, "-2").unwrap(), -AlgNum::i());
        assert_eq!(*t.component(1, "-1(10)").unwrap(), -(AlgNum::i() / AlgNum::from_int(2)));
        assert_eq!(*t.component(2, "-1(01)").unwrap(), AlgNum::frac(-1, 2));
        assert_eq!(t.generators_rank, 8);
        assert_eq!(t.complement_dimension, 0);
    }
}
