//! CR index labels, coframe generators and curvature symbols.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::liealg::{CONJ_INDEX, DIM, M_DIM};

/// Index labels in CR order; e- and E-parts share the degree-0 labels.
pub const INDEX_LABELS: [&str; DIM] = [
    "-2", "-1(10)", "-1(01)", "0(10)", "0(01)", "0(10)", "0(01)", "1(10)", "1(01)", "2",
];

/// Position of a lower (𝔪) index label.
pub fn lower_index(label: &str) -> Result<usize> {
    INDEX_LABELS[..M_DIM]
        .iter()
        .position(|l| *l == label)
        .ok_or_else(|| Error::UnknownSymbol(label.to_string()))
}

fn upper_index(label: &str, curvature_r: bool) -> Result<usize> {
    let range = if curvature_r { M_DIM..DIM } else { 0..M_DIM };
    range
        .clone()
        .find(|&k| INDEX_LABELS[k] == label)
        .ok_or_else(|| Error::UnknownSymbol(label.to_string()))
}

pub fn generator_label(k: usize) -> String {
    if k < M_DIM {
        format!("theta^{{{}}}", INDEX_LABELS[k])
    } else {
        format!("omega^{{{}}}", INDEX_LABELS[k])
    }
}

pub fn generator_latex(k: usize) -> String {
    if k < M_DIM {
        format!("\\vartheta^{{{}}}", INDEX_LABELS[k])
    } else {
        format!("\\omega^{{{}}}", INDEX_LABELS[k])
    }
}

pub fn parse_generator(s: &str) -> Result<usize> {
    let bad = || Error::UnknownSymbol(s.to_string());
    let (head, rest) = s.split_once('^').ok_or_else(bad)?;
    let label = rest.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
    match head {
        "theta" => upper_index(label, false),
        "omega" => upper_index(label, true),
        _ => Err(bad()),
    }
}

/// A curvature component `T^A_{BC}` (upper index in 𝔪) or `R^D_{BC}` (upper
/// index in 𝔥), lower pair in 𝔪 with `b < c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurvSym {
    upper: usize,
    b: usize,
    c: usize,
}

impl CurvSym {
    /// Canonical symbol for `X^upper_{b c}` and the sign relating it to the
    /// requested index order; `None` for a repeated lower index.
    pub fn oriented(upper: usize, b: usize, c: usize) -> Option<(CurvSym, i32)> {
        assert!(upper < DIM && b < M_DIM && c < M_DIM);
        use std::cmp::Ordering::*;
        match b.cmp(&c) {
            Equal => None,
            Less => Some((CurvSym { upper, b, c }, 1)),
            Greater => Some((CurvSym { upper, b: c, c: b }, -1)),
        }
    }

    pub fn new(upper: usize, b: usize, c: usize) -> CurvSym {
        let (s, sign) = Self::oriented(upper, b, c).expect("distinct lower indices");
        assert_eq!(sign, 1, "lower indices must be increasing");
        s
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn lower(&self) -> (usize, usize) {
        (self.b, self.c)
    }

    pub fn is_torsion(&self) -> bool {
        self.upper < M_DIM
    }

    /// The symbol equal to the complex conjugate of this one, with sign.
    pub fn conj(&self) -> (CurvSym, i32) {
        Self::oriented(CONJ_INDEX[self.upper], CONJ_INDEX[self.b], CONJ_INDEX[self.c]).expect("distinct lower indices")
    }

    pub fn to_latex(&self) -> String {
        format!(
            "{}^{{{}}}_{{{}\\,{}}}",
            if self.is_torsion() { "T" } else { "R" },
            INDEX_LABELS[self.upper],
            INDEX_LABELS[self.b],
            INDEX_LABELS[self.c]
        )
    }
}

impl fmt::Display for CurvSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}^{{{}}}_{{{},{}}}",
            if self.is_torsion() { "T" } else { "R" },
            INDEX_LABELS[self.upper],
            INDEX_LABELS[self.b],
            INDEX_LABELS[self.c]
        )
    }
}

/// A symbol reference as written in fixtures: `T^{A}_{B,C}` or `conj(T^{A}_{B,C})`,
/// with the lower pair in any order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymRef {
    pub sym: CurvSym,
    pub sign: i32,
}

impl FromStr for SymRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<SymRef> {
        let bad = || Error::UnknownSymbol(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = compact.strip_prefix("conj(").and_then(|r| r.strip_suffix(')')) {
            let r: SymRef = inner.parse()?;
            let (c, sign) = r.sym.conj();
            return Ok(SymRef { sym: c, sign: sign * r.sign });
        }
        let is_r = match compact.chars().next() {
            Some('T') => false,
            Some('R') => true,
            _ => return Err(bad()),
        };
        let rest = compact[1..].strip_prefix("^{").ok_or_else(bad)?;
        let (upper, rest) = rest.split_once("}_{").ok_or_else(bad)?;
        let lower = rest.strip_suffix('}').ok_or_else(bad)?;
        let (b, c) = lower.split_once(',').ok_or_else(bad)?;
        let upper = upper_index(upper, is_r)?;
        let (b, c) = (lower_index(b)?, lower_index(c)?);
        let (sym, sign) = CurvSym::oriented(upper, b, c).ok_or_else(bad)?;
        Ok(SymRef { sym, sign })
    }
}

impl FromStr for CurvSym {
    type Err = Error;

    fn from_str(s: &str) -> Result<CurvSym> {
        let r: SymRef = s.parse()?;
        if r.sign != 1 {
            return Err(Error::UnknownSymbol(format!("{s} is not in canonical index order")));
        }
        Ok(r.sym)
    }
}

impl Serialize for CurvSym {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CurvSym {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl<'de> Deserialize<'de> for SymRef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let s: CurvSym = "T^{-1(10)}_{-2,0(10)}".parse().unwrap();
        assert_eq!(s.to_string(), "T^{-1(10)}_{-2,0(10)}");
        assert_eq!(s.conj().0.to_string(), "T^{-1(01)}_{-2,0(01)}");
        let r: CurvSym = "R^{1(10)}_{-1(10),-1(01)}".parse().unwrap();
        assert_eq!(r.upper(), 7);
        // conj swaps the lower pair order
        assert_eq!(r.conj(), ("R^{1(01)}_{-1(10),-1(01)}".parse().unwrap(), -1));
        let c: SymRef = "conj(R^{0(10)}_{-2,-1(10)})".parse().unwrap();
        assert_eq!(c.sym.to_string(), "R^{0(01)}_{-2,-1(01)}");
        assert!("T^{0(10)}_{0(10),0(10)}".parse::<SymRef>().is_err());
        assert!("R^{-2}_{0(10),0(01)}".parse::<SymRef>().is_err());
    }

    #[test]
    fn generators() {
        for k in 0..DIM {
            assert_eq!(parse_generator(&generator_label(k)).unwrap(), k);
        }
    }
}
