//! Flat Maurer-Cartan forms and the structure equations of the parallelism.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{basis, BasisKind, CONJ_INDEX, DIM, M_DIM};

use super::constraints::{ConstraintTable, SymbolStatus};
use super::fixture::{EquationDoc, StructureEquationsFixture};
use super::forms::{ExteriorDerivative, Form, Gen, Poly};
use super::symbols::{generator_label, parse_generator, CurvSym};

/// `Σ_{B<C} c^A_{BC} g^B∧g^C` for every generator `A`; the flat `d(g^A)` is its negative.
pub fn maurer_cartan_parts() -> Result<Vec<Form>> {
    let sc = basis(BasisKind::Cr).structure_constants()?;
    Ok((0..DIM)
        .map(|a| {
            let mut f = Form::zero();
            for b in 0..DIM {
                for c in b + 1..DIM {
                    let v = sc.get(a, b, c);
                    if !v.is_zero() {
                        f = &f + &Form::monomial(Poly::constant(v.clone()), &[Gen::Coframe(b), Gen::Coframe(c)]);
                    }
                }
            }
            f
        })
        .collect())
}

/// Exterior derivatives of the flat coframe.
pub fn maurer_cartan_forms() -> Result<Vec<Form>> {
    Ok(maurer_cartan_parts()?.iter().map(|f| -f).collect())
}

pub fn flat_derivative() -> Result<ExteriorDerivative> {
    let mut d = ExteriorDerivative::new();
    for (k, f) in maurer_cartan_forms()?.into_iter().enumerate() {
        d.generator_rules.insert(Gen::Coframe(k), f);
    }
    Ok(d)
}

/// Generators whose `d(d(g))` fails to vanish in the flat model.
pub fn d_squared_failures() -> Result<Vec<usize>> {
    let d = flat_derivative()?;
    let mut out = Vec::new();
    for k in 0..DIM {
        if !d.apply(&d.apply(&Form::coframe(k))?)?.is_zero() {
            out.push(k);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhsTerm {
    pub symbol: CurvSym,
    /// Relation names when the symbol is fixed by a linear relation.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constrained_by: Vec<String>,
}

/// `d(g^A) + mc = Σ sym · ϑ^B∧ϑ^C`, one term per surviving symbol `X^A_{BC}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureEquation {
    pub generator: usize,
    pub mc: Form,
    pub rhs: Vec<RhsTerm>,
}

impl StructureEquation {
    pub fn generator_label(&self) -> String {
        generator_label(self.generator)
    }

    pub fn rhs_form(&self) -> Form {
        let mut f = Form::zero();
        for t in &self.rhs {
            let (b, c) = t.symbol.lower();
            f = &f + &Form::monomial(Poly::sym(t.symbol), &[Gen::Coframe(b), Gen::Coframe(c)]);
        }
        f
    }

    /// `d(g^A)` as a 2-form.
    pub fn derivative(&self) -> Form {
        &self.rhs_form() - &self.mc
    }

    pub fn symbols(&self) -> BTreeSet<CurvSym> {
        self.rhs.iter().map(|t| t.symbol).collect()
    }

    pub fn constrained(&self) -> BTreeSet<CurvSym> {
        self.rhs.iter().filter(|t| !t.constrained_by.is_empty()).map(|t| t.symbol).collect()
    }

    /// The equation of the conjugate generator obtained by the reality involution.
    /// Relation names are kept so that the result is comparable by constrained symbol set.
    pub fn conj(&self) -> StructureEquation {
        let mut rhs: Vec<RhsTerm> = self
            .rhs
            .iter()
            .map(|t| RhsTerm {
                symbol: t.symbol.conj().0,
                constrained_by: t.constrained_by.clone(),
            })
            .collect();
        rhs.sort_by_key(|t| t.symbol);
        StructureEquation {
            generator: CONJ_INDEX[self.generator],
            mc: self.mc.conj(),
            rhs,
        }
    }

    pub fn from_doc(doc: &EquationDoc) -> Result<StructureEquation> {
        let generator = parse_generator(&doc.generator)?;
        let mut mc = Form::zero();
        for (c, a, b) in &doc.mc {
            let gens = [Gen::Coframe(parse_generator(a)?), Gen::Coframe(parse_generator(b)?)];
            mc = &mc + &Form::monomial(Poly::constant(c.clone()), &gens);
        }
        let mut rhs = Vec::new();
        for t in &doc.rhs {
            let symbol: CurvSym = t.symbol.parse()?;
            let wedge = (parse_generator(&t.wedge.0)?, parse_generator(&t.wedge.1)?);
            if wedge != symbol.lower() || symbol.upper() != generator {
                return Err(Error::Parse(format!(
                    "{} does not multiply {}^{} in the equation of {}",
                    t.symbol, t.wedge.0, t.wedge.1, doc.generator
                )));
            }
            rhs.push(RhsTerm {
                symbol,
                constrained_by: t.constrained_by.iter().cloned().collect(),
            });
        }
        rhs.sort_by_key(|t| t.symbol);
        Ok(StructureEquation { generator, mc, rhs })
    }
}

pub fn generate_structure_equations(table: &ConstraintTable) -> Result<Vec<StructureEquation>> {
    let mc = maurer_cartan_parts()?;
    Ok(mc
        .into_iter()
        .enumerate()
        .map(|(a, mc)| {
            let mut rhs = Vec::new();
            for b in 0..M_DIM {
                for c in b + 1..M_DIM {
                    let symbol = CurvSym::new(a, b, c);
                    match table.status(&symbol) {
                        SymbolStatus::ZeroByConstraint => {}
                        SymbolStatus::Free => rhs.push(RhsTerm {
                            symbol,
                            constrained_by: Vec::new(),
                        }),
                        SymbolStatus::DeterminedByRelation { relations } => rhs.push(RhsTerm {
                            symbol,
                            constrained_by: relations,
                        }),
                    }
                }
            }
            rhs.sort_by_key(|t| t.symbol);
            StructureEquation { generator: a, mc, rhs }
        })
        .collect())
}

/// Printed equations together with the conjugates of those with a (10) generator,
/// keyed by generator.
pub fn fixture_equations(doc: &StructureEquationsFixture) -> Result<BTreeMap<usize, StructureEquation>> {
    let mut out = BTreeMap::new();
    for e in &doc.equations {
        let eq = StructureEquation::from_doc(e)?;
        let c = eq.conj();
        if c.generator != eq.generator {
            out.insert(c.generator, c);
        }
        out.insert(eq.generator, eq);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EquationDiff {
    pub generator: String,
    /// Generated minus printed left-hand terms.
    pub mc_residual: Form,
    pub missing: Vec<CurvSym>,
    pub extra: Vec<CurvSym>,
    /// Symbols whose constrained flag differs.
    pub constraint_mismatch: Vec<CurvSym>,
    pub absent_from_fixture: bool,
}

impl EquationDiff {
    pub fn is_empty(&self) -> bool {
        self.mc_residual.is_zero()
            && self.missing.is_empty()
            && self.extra.is_empty()
            && self.constraint_mismatch.is_empty()
            && !self.absent_from_fixture
    }
}

/// Term-by-term comparison; returns only the non-empty diffs.
pub fn diff_against_fixture(
    generated: &[StructureEquation],
    fixture: &BTreeMap<usize, StructureEquation>,
) -> Vec<EquationDiff> {
    let mut out = Vec::new();
    for g in generated {
        let mut d = EquationDiff {
            generator: g.generator_label(),
            ..Default::default()
        };
        match fixture.get(&g.generator) {
            None => d.absent_from_fixture = true,
            Some(f) => {
                d.mc_residual = &g.mc - &f.mc;
                let (gs, fs) = (g.symbols(), f.symbols());
                d.missing = fs.difference(&gs).copied().collect();
                d.extra = gs.difference(&fs).copied().collect();
                let (gc, fc) = (g.constrained(), f.constrained());
                d.constraint_mismatch = gc.symmetric_difference(&fc).filter(|s| gs.contains(s) && fs.contains(s)).copied().collect();
            }
        }
        if !d.is_empty() {
            out.push(d);
        }
    }
    out
}

/// Generators whose equation is not mapped onto the conjugate generator's equation by the involution.
pub fn involution_failures(eqs: &[StructureEquation]) -> Vec<usize> {
    eqs.iter()
        .filter(|e| {
            let c = e.conj();
            let target = &eqs[c.generator];
            c.mc != target.mc || c.symbols() != target.symbols() || c.constrained() != target.constrained()
        })
        .map(|e| e.generator)
        .collect()
}

/// Free symbols of the generated system and of the fixture.
pub fn free_symbol_sets(
    generated: &[StructureEquation],
    fixture: &BTreeMap<usize, StructureEquation>,
) -> (BTreeSet<CurvSym>, BTreeSet<CurvSym>) {
    let g = generated.iter().flat_map(StructureEquation::symbols).collect();
    let f = fixture.values().flat_map(StructureEquation::symbols).collect();
    (g, f)
}

/// One entry per constraint removed from the table: its label and the number
/// of non-empty equation diffs it causes.
pub fn negative_control(table: &ConstraintTable, fixture: &BTreeMap<usize, StructureEquation>) -> Result<Vec<(String, usize)>> {
    let mut out = Vec::new();
    for s in table.vanishing_symbols() {
        let eqs = generate_structure_equations(&table.without_symbol(&s))?;
        out.push((format!("zero:{s}"), diff_against_fixture(&eqs, fixture).len()));
    }
    for r in table.relations() {
        let eqs = generate_structure_equations(&table.without_relation(&r.name))?;
        out.push((format!("relation:{}", r.name), diff_against_fixture(&eqs, fixture).len()));
    }
    Ok(out)
}

/// Exterior derivative whose generator rules are the given structure equations,
/// with every curvature symbol a formal function.
pub fn derivative_from_equations(eqs: &[StructureEquation]) -> ExteriorDerivative {
    let mut d = ExteriorDerivative::new();
    for e in eqs {
        for s in e.symbols() {
            d.formal_function(s);
        }
        d.generator_rules.insert(Gen::Coframe(e.generator), e.derivative());
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixtures;
    use crate::numfield::AlgNum;

    fn setup() -> (Vec<StructureEquation>, BTreeMap<usize, StructureEquation>) {
        let fx = Fixtures::embedded().unwrap();
        let table = ConstraintTable::from_fixture(&fx.constraints).unwrap();
        (
            generate_structure_equations(&table).unwrap(),
            fixture_equations(&fx.structure_equations).unwrap(),
        )
    }

    #[test]
    fn flat_d_squared_vanishes() {
        assert!(d_squared_failures().unwrap().is_empty());
    }

    #[test]
    fn first_equation_mc_part() {
        let mc = &maurer_cartan_parts().unwrap()[0];
        let half_i = AlgNum::frac(1, 2) * AlgNum::i();
        assert_eq!(mc.coefficient(&[Gen::Coframe(1), Gen::Coframe(2)]), Poly::constant(half_i));
        assert_eq!(mc.coefficient(&[Gen::Coframe(5), Gen::Coframe(0)]), Poly::constant(AlgNum::from_int(-1)));
    }

    #[test]
    fn generated_matches_fixture() {
        let (eqs, fx) = setup();
        let diffs = diff_against_fixture(&eqs, &fx);
        assert!(diffs.is_empty(), "{diffs:#?}");
        let counts: Vec<usize> = [0usize, 1, 3, 5, 7, 9].iter().map(|&k| eqs[k].rhs.len()).collect();
        assert_eq!(counts, vec![0, 2, 6, 7, 10, 10]);
    }

    #[test]
    fn involution_holds() {
        let (eqs, _) = setup();
        assert!(involution_failures(&eqs).is_empty());
    }
}
