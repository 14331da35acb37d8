//! Vanishing lists and linear relations among curvature components.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numfield::AlgNum;

use super::fixture::{ConstraintGroupDoc, ConstraintsFixture, RelationDoc};
use super::symbols::{CurvSym, SymRef};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingEntry {
    pub symbol: CurvSym,
    /// Group names that list this symbol (or its conjugate, for implied entries).
    pub sources: Vec<String>,
    /// True when the symbol is zero only because its conjugate is.
    pub implied_by_conjugation: bool,
}

/// `lhs = Σ c·sym`, all symbols canonical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub name: String,
    pub lhs: CurvSym,
    pub rhs: Vec<(AlgNum, CurvSym)>,
}

impl Relation {
    fn from_doc(doc: &RelationDoc) -> Result<Relation> {
        let lhs: SymRef = doc.lhs.parse()?;
        let sign = AlgNum::from_int(lhs.sign as i64);
        let rhs = doc
            .rhs
            .iter()
            .map(|(c, s)| {
                let r: SymRef = s.parse()?;
                Ok((c * &sign * AlgNum::from_int(r.sign as i64), r.sym))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Relation {
            name: doc.name.clone(),
            lhs: lhs.sym,
            rhs,
        })
    }

    pub fn conj(&self) -> Relation {
        let (lhs, ls) = self.lhs.conj();
        let rhs = self
            .rhs
            .iter()
            .map(|(c, s)| {
                let (cs, sg) = s.conj();
                (c.conj() * AlgNum::from_int((ls * sg) as i64), cs)
            })
            .collect();
        Relation {
            name: format!("conj({})", self.name),
            lhs,
            rhs,
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = CurvSym> + '_ {
        std::iter::once(self.lhs).chain(self.rhs.iter().map(|(_, s)| *s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SymbolStatus {
    Free,
    ZeroByConstraint,
    DeterminedByRelation { relations: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstraintTable {
    vanishing: BTreeMap<CurvSym, VanishingEntry>,
    relations: Vec<Relation>,
}

impl ConstraintTable {
    /// Builds the table from the fixture and closes it under conjugation.
    pub fn from_fixture(doc: &ConstraintsFixture) -> Result<ConstraintTable> {
        let mut vanishing: BTreeMap<CurvSym, VanishingEntry> = BTreeMap::new();
        for ConstraintGroupDoc { name, vanishing: list, .. } in &doc.groups {
            for s in list {
                let sym = s.parse::<SymRef>()?.sym;
                let e = vanishing.entry(sym).or_insert_with(|| VanishingEntry {
                    symbol: sym,
                    sources: Vec::new(),
                    implied_by_conjugation: false,
                });
                if !e.sources.contains(name) {
                    e.sources.push(name.clone());
                }
            }
        }
        let printed: Vec<VanishingEntry> = vanishing.values().cloned().collect();
        for e in printed {
            let c = e.symbol.conj().0;
            vanishing.entry(c).or_insert_with(|| VanishingEntry {
                symbol: c,
                sources: e.sources.clone(),
                implied_by_conjugation: true,
            });
        }
        let mut relations = Vec::new();
        for r in &doc.relations {
            let rel = Relation::from_doc(r)?;
            let c = rel.conj();
            relations.push(rel);
            relations.push(c);
        }
        let table = ConstraintTable { vanishing, relations };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        for r in &self.relations {
            for s in r.symbols() {
                if self.vanishing.contains_key(&s) {
                    return Err(Error::InconsistentConstraint(format!(
                        "{s} is both zero and constrained by {}",
                        r.name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn vanishing(&self) -> impl Iterator<Item = &VanishingEntry> {
        self.vanishing.values()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn vanishing_symbols(&self) -> BTreeSet<CurvSym> {
        self.vanishing.keys().copied().collect()
    }

    /// Symbols appearing as the left side of a relation.
    pub fn determined_symbols(&self) -> BTreeSet<CurvSym> {
        self.relations.iter().map(|r| r.lhs).collect()
    }

    pub fn status(&self, s: &CurvSym) -> SymbolStatus {
        if self.vanishing.contains_key(s) {
            return SymbolStatus::ZeroByConstraint;
        }
        let relations: Vec<String> = self
            .relations
            .iter()
            .filter(|r| r.lhs == *s)
            .map(|r| r.name.clone())
            .collect();
        if relations.is_empty() {
            SymbolStatus::Free
        } else {
            SymbolStatus::DeterminedByRelation { relations }
        }
    }

    /// The table with one vanishing symbol dropped; no re-closure.
    pub fn without_symbol(&self, s: &CurvSym) -> ConstraintTable {
        let mut t = self.clone();
        t.vanishing.remove(s);
        t
    }

    pub fn without_relation(&self, name: &str) -> ConstraintTable {
        let mut t = self.clone();
        t.relations.retain(|r| r.name != name);
        t
    }

    /// Adds a vanishing symbol, failing if a relation mentions it.
    pub fn with_vanishing(&self, s: CurvSym, source: &str) -> Result<ConstraintTable> {
        let mut t = self.clone();
        t.vanishing.insert(
            s,
            VanishingEntry {
                symbol: s,
                sources: vec![source.to_string()],
                implied_by_conjugation: false,
            },
        );
        t.validate()?;
        Ok(t)
    }
}

/// Symbols printed in the fixture's vanishing lists, resolved to canonical form.
pub fn printed_symbols(doc: &ConstraintsFixture) -> Result<BTreeSet<CurvSym>> {
    let mut out = BTreeSet::new();
    for g in &doc.groups {
        for s in &g.vanishing {
            out.insert(s.parse::<SymRef>()?.sym);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixtures;

    fn table() -> ConstraintTable {
        ConstraintTable::from_fixture(&Fixtures::embedded().unwrap().constraints).unwrap()
    }

    #[test]
    fn closed_under_conjugation() {
        let t = table();
        for s in t.vanishing_symbols() {
            assert!(t.vanishing_symbols().contains(&s.conj().0), "{s}");
        }
        assert_eq!(t.relations().len(), 4);
        assert_eq!(t.determined_symbols().len(), 4);
    }

    #[test]
    fn conj_of_r1_relation() {
        let t = table();
        let r = t.relations().iter().find(|r| r.name == "conj(c2)").unwrap();
        assert_eq!(r.lhs.to_string(), "R^{1(01)}_{-1(10),-1(01)}");
        // conj(R1) = -R^{1(01)}, conj(i/2) = -i/2, so the coefficient of T stays i/2
        assert_eq!(r.rhs[0].0, AlgNum::frac(1, 2) * AlgNum::i());
    }

    #[test]
    fn contradiction_is_reported() {
        let t = table();
        let s: CurvSym = "R^{1(10)}_{-1(10),-1(01)}".parse().unwrap();
        assert!(matches!(t.with_vanishing(s, "test"), Err(Error::InconsistentConstraint(_))));
    }
}
