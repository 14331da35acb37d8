//! Change of frame towards the alternative parallelism built from
//! `ω, ω¹, φ², θ², φ¹`, checked against its first two structure equations.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numfield::AlgNum;

use super::equations::{derivative_from_equations, StructureEquation};
use super::forms::{Form, Gen, Poly};
use super::symbols::CurvSym;

const THETA_M2: usize = 0;
const THETA_M1A: usize = 1;
const THETA_M1B: usize = 2;
const THETA_0B: usize = 4;
const OMEGA_0A: usize = 5;
const OMEGA_0B: usize = 6;
const OMEGA_1A: usize = 7;

/// `T^{-1(10)}_{-2,0(10)}`
pub fn t_symbol() -> CurvSym {
    CurvSym::new(1, 0, 3)
}

/// `T^{-1(10)}_{-2,0(01)}`
pub fn s_symbol() -> CurvSym {
    CurvSym::new(1, 0, 4)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameForms {
    pub omega: Form,
    pub omega1: Form,
    pub phi2: Form,
    pub theta2: Form,
    pub phi1: Form,
}

fn num(n: i64, d: i64) -> AlgNum {
    AlgNum::frac(n, d)
}

fn inum(n: i64, d: i64) -> AlgNum {
    AlgNum::frac(n, d) * AlgNum::i()
}

pub fn frame_forms() -> FrameForms {
    let t = Poly::sym(t_symbol());
    let tb = t.conj();
    let s = Poly::sym(s_symbol());
    let th = Form::coframe;

    let omega = th(THETA_M2).scale_num(&inum(-2, 1));
    let omega1 = &th(THETA_M1A) - &th(THETA_M2).scale(&tb);
    let phi2 = &th(OMEGA_0A) + &th(THETA_M1B).scale(&tb).scale_num(&inum(1, 2));
    let theta2 = &th(3) + &omega1.scale(&tb).scale_num(&AlgNum::i());
    let dtb = Form::gen(Gen::Diff(t_symbol().conj().0));
    let parts = [
        th(OMEGA_1A).scale_num(&num(1, 2)),
        th(THETA_0B).scale(&s).scale_num(&inum(-1, 2)),
        th(THETA_M1A).scale(&(&tb * &t)).scale_num(&num(-1, 2)),
        th(THETA_M1B).scale(&(&tb * &tb)).scale_num(&num(1, 4)),
        th(OMEGA_0B).scale(&tb).scale_num(&inum(-1, 2)),
        dtb.scale_num(&inum(-1, 2)),
    ];
    let phi1 = parts.iter().fold(Form::zero(), |acc, f| &acc + f);
    FrameForms {
        omega,
        omega1,
        phi2,
        theta2,
        phi1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IzResiduals {
    /// `dω + ω¹∧ω^{1̄} + ω∧(φ² + φ^{2̄})`
    pub omega: Form,
    /// `dω¹ − θ²∧ω^{1̄} + ω¹∧φ² + ω∧φ¹`
    pub omega1: Form,
}

impl IzResiduals {
    pub fn vanish(&self) -> bool {
        self.omega.is_zero() && self.omega1.is_zero()
    }
}

fn residuals_with(eqs: &[StructureEquation]) -> Result<IzResiduals> {
    for k in [THETA_M2, THETA_M1A, THETA_M1B] {
        if !eqs.iter().any(|e| e.generator == k) {
            return Err(Error::MissingRule(super::symbols::generator_label(k)));
        }
    }
    let mut d = derivative_from_equations(eqs);
    for s in [t_symbol(), s_symbol()] {
        d.formal_function(s);
        d.formal_function(s.conj().0);
    }
    let f = frame_forms();
    let omega1_bar = f.omega1.conj();
    let lhs0 = d.apply(&f.omega)?;
    let rhs0 = &(-&f.omega1.wedge(&omega1_bar)) - &f.omega.wedge(&(&f.phi2 + &f.phi2.conj()));
    let lhs1 = d.apply(&f.omega1)?;
    let rhs1 = &(&f.theta2.wedge(&omega1_bar) - &f.omega1.wedge(&f.phi2)) - &f.omega.wedge(&f.phi1);
    Ok(IzResiduals {
        omega: &lhs0 - &rhs0,
        omega1: &lhs1 - &rhs1,
    })
}

/// Residuals of both identities using the generated equations of
/// `ϑ^{-2}`, `ϑ^{-1(10)}` and `ϑ^{-1(01)}`.
pub fn verify_iz_change_of_frame(eqs: &[StructureEquation]) -> Result<IzResiduals> {
    residuals_with(eqs)
}

/// Same check with the torsion terms of the `ϑ^{-1(10)}` equation removed.
pub fn iz_negative_control(eqs: &[StructureEquation]) -> Result<IzResiduals> {
    let zeroed: BTreeSet<CurvSym> = [t_symbol(), s_symbol()].into_iter().collect();
    let modified: Vec<StructureEquation> = eqs
        .iter()
        .map(|e| {
            let mut e = e.clone();
            if e.generator == THETA_M1A {
                e.rhs.retain(|t| !zeroed.contains(&t.symbol));
            }
            e
        })
        .collect();
    residuals_with(&modified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixtures;
    use crate::structeq::{generate_structure_equations, ConstraintTable};

    fn eqs() -> Vec<StructureEquation> {
        let fx = Fixtures::embedded().unwrap();
        generate_structure_equations(&ConstraintTable::from_fixture(&fx.constraints).unwrap()).unwrap()
    }

    #[test]
    fn residuals_vanish() {
        let r = verify_iz_change_of_frame(&eqs()).unwrap();
        assert!(r.omega.is_zero(), "{:?}", r.omega);
        assert!(r.omega1.is_zero(), "{:?}", r.omega1);
    }

    #[test]
    fn negative_control_has_power() {
        let r = iz_negative_control(&eqs()).unwrap();
        assert!(!r.omega1.is_zero());
    }
}
