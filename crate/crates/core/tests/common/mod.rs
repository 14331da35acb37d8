#![allow(dead_code)]

use girdled::structeq::{CurvSym, Form, Gen, Poly};
use girdled::AlgNum;
use proptest::prelude::*;

pub fn alg_num() -> impl Strategy<Value = AlgNum> {
    (prop::array::uniform8(-12i64..=12), 1i64..=9).prop_map(|(n, d)| {
        let units = [
            AlgNum::one(),
            AlgNum::sqrt2(),
            AlgNum::sqrt3(),
            AlgNum::sqrt6(),
            AlgNum::i(),
            AlgNum::i() * AlgNum::sqrt2(),
            AlgNum::i() * AlgNum::sqrt3(),
            AlgNum::i() * AlgNum::sqrt6(),
        ];
        n.iter()
            .zip(units)
            .map(|(k, u)| AlgNum::frac(*k, d) * u)
            .sum()
    })
}

pub fn symbol() -> impl Strategy<Value = CurvSym> {
    (0usize..10, 0usize..5, 0usize..5)
        .prop_filter_map("distinct lower indices", |(a, b, c)| CurvSym::oriented(a, b, c).map(|s| s.0))
}

pub fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((alg_num(), prop::option::of(symbol())), 0..3).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, s)| {
            let t = match s {
                Some(s) => Poly::sym(s).scale(&c),
                None => Poly::constant(c),
            };
            &acc + &t
        })
    })
}

/// A 1-form over the ten coframe generators.
pub fn one_form() -> impl Strategy<Value = Form> {
    prop::collection::vec((poly(), 0usize..10), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Form::zero(), |acc, (p, k)| &acc + &Form::monomial(p, &[Gen::Coframe(k)]))
    })
}
