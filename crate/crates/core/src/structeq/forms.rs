//! Polynomials in curvature symbols and exterior forms over the coframe.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::CONJ_INDEX;
use crate::numfield::AlgNum;

use super::symbols::{generator_label, generator_latex, parse_generator, CurvSym};

/// Sorted multiset of symbols.
pub type Monomial = Vec<CurvSym>;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, AlgNum>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: AlgNum) -> Self {
        let mut p = Poly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(AlgNum::one())
    }

    pub fn sym(s: CurvSym) -> Self {
        let mut p = Poly::zero();
        p.add_term(vec![s], AlgNum::one());
        p
    }

    fn add_term(&mut self, mut m: Monomial, c: AlgNum) {
        if c.is_zero() {
            return;
        }
        m.sort();
        let slot = self.terms.entry(m).or_insert_with(AlgNum::zero);
        *slot += &c;
        if slot.is_zero() {
            let key = self.terms.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &AlgNum)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &AlgNum) -> Poly {
        let mut out = Poly::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Complex conjugate: conjugated coefficients, conjugate symbols.
    pub fn conj(&self) -> Poly {
        let mut out = Poly::zero();
        for (m, v) in &self.terms {
            let mut sign = 1;
            let mono: Monomial = m
                .iter()
                .map(|s| {
                    let (c, sg) = s.conj();
                    sign *= sg;
                    c
                })
                .collect();
            out.add_term(mono, &v.conj() * &AlgNum::from_int(sign as i64));
        }
        out
    }

    /// Sets every symbol in `zeroed` to zero.
    pub fn without(&self, zeroed: &BTreeSet<CurvSym>) -> Poly {
        let mut out = Poly::zero();
        for (m, v) in &self.terms {
            if m.iter().all(|s| !zeroed.contains(s)) {
                out.add_term(m.clone(), v.clone());
            }
        }
        out
    }

    pub fn symbols(&self) -> BTreeSet<CurvSym> {
        self.terms.keys().flatten().copied().collect()
    }

    pub fn to_latex(&self) -> String {
        let mut parts = Vec::new();
        for (m, v) in &self.terms {
            let syms: Vec<String> = m.iter().map(CurvSym::to_latex).collect();
            parts.push(latex_term(v, &syms.join(" ")));
        }
        join_signed(parts)
    }
}

/// `(sign, magnitude)` rendering of `coefficient · body`.
fn latex_term(c: &AlgNum, body: &str) -> (bool, String) {
    let (neg, mag) = match c.real_sign() {
        Ok(std::cmp::Ordering::Less) => (true, -c),
        Ok(_) => (false, c.clone()),
        Err(_) => {
            // purely imaginary with negative imaginary part reads better negated
            let im = c.im();
            if c.re().is_zero() && matches!(im.real_sign(), Ok(std::cmp::Ordering::Less)) {
                (true, -c)
            } else {
                (false, c.clone())
            }
        }
    };
    let s = if body.is_empty() {
        mag.to_latex()
    } else if mag.is_one() {
        body.to_string()
    } else if mag.is_rational() || mag.re().is_zero() {
        format!("{} {}", mag.to_latex(), body)
    } else {
        format!("\\left({}\\right) {}", mag.to_latex(), body)
    };
    (neg, s)
}

fn join_signed(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (neg, s)) in parts.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&s);
    }
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, v) in &rhs.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&AlgNum::from_int(-1))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut m = a.clone();
                m.extend(b.iter().copied());
                out.add_term(m, x * y);
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, v)| {
                let syms: Vec<String> = m.iter().map(ToString::to_string).collect();
                if syms.is_empty() {
                    format!("({v})")
                } else {
                    format!("({v})*{}", syms.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A 1-form generator: a coframe element (CR index) or the formal
/// differential of a curvature function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Coframe(usize),
    Diff(CurvSym),
}

impl Gen {
    pub fn conj(&self) -> Gen {
        match self {
            Gen::Coframe(k) => Gen::Coframe(CONJ_INDEX[*k]),
            // symbols are canonical up to sign; the sign is carried by `Form::conj`
            Gen::Diff(s) => Gen::Diff(s.conj().0),
        }
    }

    fn conj_sign(&self) -> i32 {
        match self {
            Gen::Coframe(_) => 1,
            Gen::Diff(s) => s.conj().1,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Gen::Coframe(k) => generator_label(*k),
            Gen::Diff(s) => format!("d({s})"),
        }
    }

    pub fn parse(s: &str) -> Result<Gen> {
        if let Some(inner) = s.strip_prefix("d(").and_then(|r| r.strip_suffix(')')) {
            return Ok(Gen::Diff(inner.parse()?));
        }
        Ok(Gen::Coframe(parse_generator(s)?))
    }

    pub fn to_latex(&self) -> String {
        match self {
            Gen::Coframe(k) => generator_latex(*k),
            Gen::Diff(s) => format!("d{}", s.to_latex()),
        }
    }
}

/// Exterior form `Σ P_I g^{i₁}∧…∧g^{i_k}` with strictly increasing generator tuples.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Form {
    terms: BTreeMap<Vec<Gen>, Poly>,
}

/// Sorts `gens`, returning the permutation sign, or `None` on a repeat.
fn sort_gens(mut gens: Vec<Gen>) -> Option<(Vec<Gen>, i64)> {
    let mut sign = 1;
    for i in 1..gens.len() {
        let mut j = i;
        while j > 0 && gens[j - 1] > gens[j] {
            gens.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if gens.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((gens, sign))
    }
}

impl Form {
    pub fn zero() -> Self {
        Form::default()
    }

    pub fn scalar(p: Poly) -> Self {
        let mut f = Form::zero();
        f.add_term(Vec::new(), p);
        f
    }

    pub fn gen(g: Gen) -> Self {
        let mut f = Form::zero();
        f.add_term(vec![g], Poly::one());
        f
    }

    pub fn coframe(k: usize) -> Self {
        Self::gen(Gen::Coframe(k))
    }

    /// `c · g₁ ∧ … ∧ g_k` in any order.
    pub fn monomial(c: Poly, gens: &[Gen]) -> Self {
        let mut f = Form::zero();
        if let Some((g, sign)) = sort_gens(gens.to_vec()) {
            f.add_term(g, c.scale(&AlgNum::from_int(sign)));
        }
        f
    }

    fn add_term(&mut self, gens: Vec<Gen>, p: Poly) {
        if p.is_zero() {
            return;
        }
        let merged = match self.terms.get(&gens) {
            Some(q) => q + &p,
            None => p,
        };
        if merged.is_zero() {
            self.terms.remove(&gens);
        } else {
            self.terms.insert(gens, merged);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Gen>, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, gens: &[Gen]) -> Poly {
        match sort_gens(gens.to_vec()) {
            Some((g, sign)) => self
                .terms
                .get(&g)
                .map(|p| p.scale(&AlgNum::from_int(sign)))
                .unwrap_or_default(),
            None => Poly::zero(),
        }
    }

    pub fn scale(&self, p: &Poly) -> Form {
        let mut out = Form::zero();
        for (g, q) in &self.terms {
            out.add_term(g.clone(), q * p);
        }
        out
    }

    pub fn scale_num(&self, c: &AlgNum) -> Form {
        self.scale(&Poly::constant(c.clone()))
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero();
        for (a, p) in &self.terms {
            for (b, q) in &other.terms {
                let mut g = a.clone();
                g.extend(b.iter().copied());
                if let Some((g, sign)) = sort_gens(g) {
                    out.add_term(g, (p * q).scale(&AlgNum::from_int(sign)));
                }
            }
        }
        out
    }

    pub fn conj(&self) -> Form {
        let mut out = Form::zero();
        for (g, p) in &self.terms {
            let sign: i32 = g.iter().map(Gen::conj_sign).product();
            let gens: Vec<Gen> = g.iter().map(Gen::conj).collect();
            out = &out + &Form::monomial(p.conj().scale(&AlgNum::from_int(sign as i64)), &gens);
        }
        out
    }

    /// Sets every symbol in `zeroed` to zero.
    pub fn without(&self, zeroed: &BTreeSet<CurvSym>) -> Form {
        let mut out = Form::zero();
        for (g, p) in &self.terms {
            if g.iter().all(|x| !matches!(x, Gen::Diff(s) if zeroed.contains(s))) {
                out.add_term(g.clone(), p.without(zeroed));
            }
        }
        out
    }

    pub fn symbols(&self) -> BTreeSet<CurvSym> {
        self.terms.values().flat_map(Poly::symbols).collect()
    }

    pub fn to_latex(&self) -> String {
        let mut parts = Vec::new();
        for (g, p) in &self.terms {
            let body: Vec<String> = g.iter().map(Gen::to_latex).collect();
            let body = body.join(" \\wedge ");
            if p.terms.len() == 1 {
                let (m, c) = p.terms.iter().next().expect("one term");
                let syms: Vec<String> = m.iter().map(CurvSym::to_latex).collect();
                let full = [syms.join(" "), body].iter().filter(|s| !s.is_empty()).cloned().collect::<Vec<_>>().join(" ");
                parts.push(latex_term(c, &full));
            } else {
                parts.push((false, format!("\\left({}\\right) {}", p.to_latex(), body)));
            }
        }
        join_signed(parts)
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        for (g, p) in &rhs.terms {
            out.add_term(g.clone(), p.clone());
        }
        out
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self + &(-rhs)
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale_num(&AlgNum::from_int(-1))
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, p)| {
                let gens: Vec<String> = g.iter().map(Gen::label).collect();
                format!("[{p:?}] {}", gens.join("^"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Serialized term of a form: coefficient polynomial and generator labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormTermDoc {
    pub coefficient: Vec<(AlgNum, Vec<CurvSym>)>,
    pub generators: Vec<String>,
}

impl Serialize for Form {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let docs: Vec<FormTermDoc> = self
            .terms
            .iter()
            .map(|(g, p)| FormTermDoc {
                coefficient: p.terms.iter().map(|(m, c)| (c.clone(), m.clone())).collect(),
                generators: g.iter().map(Gen::label).collect(),
            })
            .collect();
        docs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Form {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let docs = Vec::<FormTermDoc>::deserialize(d)?;
        let mut out = Form::zero();
        for doc in docs {
            let mut p = Poly::zero();
            for (c, m) in doc.coefficient {
                p.add_term(m, c);
            }
            let gens = doc
                .generators
                .iter()
                .map(|g| Gen::parse(g))
                .collect::<Result<Vec<_>>>()
                .map_err(serde::de::Error::custom)?;
            out = &out + &Form::monomial(p, &gens);
        }
        Ok(out)
    }
}

/// Exterior derivative driven by rules for generators and function symbols.
#[derive(Clone, Debug, Default)]
pub struct ExteriorDerivative {
    pub generator_rules: BTreeMap<Gen, Form>,
    pub function_rules: BTreeMap<CurvSym, Form>,
    /// Generators declared closed.
    pub closed: BTreeSet<Gen>,
}

impl ExteriorDerivative {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares `s` a formal function whose differential is the closed generator `d(s)`.
    pub fn formal_function(&mut self, s: CurvSym) {
        self.function_rules.insert(s, Form::gen(Gen::Diff(s)));
        self.closed.insert(Gen::Diff(s));
    }

    fn d_gen(&self, g: &Gen) -> Result<Form> {
        if let Some(f) = self.generator_rules.get(g) {
            return Ok(f.clone());
        }
        if self.closed.contains(g) {
            return Ok(Form::zero());
        }
        Err(Error::MissingRule(g.label()))
    }

    fn d_poly(&self, p: &Poly) -> Result<Form> {
        let mut out = Form::zero();
        for (m, c) in p.terms() {
            for k in 0..m.len() {
                let rule = self
                    .function_rules
                    .get(&m[k])
                    .ok_or_else(|| Error::MissingRule(m[k].to_string()))?;
                let mut rest = m.clone();
                rest.remove(k);
                let mut coeff = Poly::zero();
                coeff.add_term(rest, c.clone());
                out = &out + &rule.scale(&coeff);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, form: &Form) -> Result<Form> {
        let mut out = Form::zero();
        for (gens, p) in form.terms() {
            let g_form = Form::monomial(Poly::one(), gens);
            out = &out + &self.d_poly(p)?.wedge(&g_form);
            for k in 0..gens.len() {
                let before = Form::monomial(Poly::one(), &gens[..k]);
                let after = Form::monomial(Poly::one(), &gens[k + 1..]);
                let term = before.wedge(&self.d_gen(&gens[k])?).wedge(&after);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                out = &out + &term.scale(&p.scale(&AlgNum::from_int(sign)));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> CurvSym {
        "T^{-1(10)}_{-2,0(10)}".parse().unwrap()
    }

    #[test]
    fn wedge_is_alternating() {
        let a = Form::coframe(0);
        let b = Form::coframe(1);
        assert!(a.wedge(&a).is_zero());
        assert_eq!(a.wedge(&b), -&b.wedge(&a));
    }

    #[test]
    fn leibniz_with_formal_function() {
        let mut d = ExteriorDerivative::new();
        d.formal_function(t());
        let dtheta = Form::coframe(1).wedge(&Form::coframe(2)).scale_num(&AlgNum::i());
        d.generator_rules.insert(Gen::Coframe(0), dtheta.clone());
        let f = Form::coframe(0).scale(&Poly::sym(t()));
        let expected = &Form::gen(Gen::Diff(t())).wedge(&Form::coframe(0)) + &dtheta.scale(&Poly::sym(t()));
        assert_eq!(d.apply(&f).unwrap(), expected);
        assert!(matches!(d.apply(&Form::coframe(3)), Err(Error::MissingRule(_))));
    }

    #[test]
    fn conj_is_involution() {
        let f = &Form::coframe(1).wedge(&Form::coframe(3)).scale(&Poly::sym(t())).scale_num(&AlgNum::i())
            + &Form::gen(Gen::Diff(t()));
        assert_eq!(f.conj().conj(), f);
    }

    #[test]
    fn json_round_trip() {
        let f = Form::coframe(1).wedge(&Form::coframe(3)).scale(&Poly::sym(t())).scale_num(&AlgNum::frac(1, 2));
        let s = serde_json::to_string(&f).unwrap();
        let back: Form = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
