mod common;

use common::{alg_num, one_form, poly};
use girdled::structeq::Form;
use girdled::AlgNum;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_ring_axioms(a in alg_num(), b in alg_num(), c in alg_num()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, AlgNum::zero());
    }

    #[test]
    fn field_inverses(a in alg_num()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert!((&a * &a.conj()).is_real());
    }

    #[test]
    fn text_round_trip(a in alg_num()) {
        prop_assert_eq!(a.to_string().parse::<AlgNum>().unwrap(), a);
    }

    #[test]
    fn wedge_alternating(a in one_form(), b in one_form()) {
        prop_assert!(a.wedge(&a).is_zero());
        prop_assert_eq!(a.wedge(&b), -&b.wedge(&a));
    }

    #[test]
    fn wedge_bilinear(a in one_form(), b in one_form(), c in one_form(), p in poly()) {
        prop_assert_eq!((&a + &b).wedge(&c), &a.wedge(&c) + &b.wedge(&c));
        prop_assert_eq!(a.scale(&p).wedge(&c), a.wedge(&c).scale(&p));
    }

    #[test]
    fn conjugation_is_an_involution(a in one_form(), b in one_form()) {
        let w: Form = a.wedge(&b);
        prop_assert_eq!(w.conj().conj(), w.clone());
        prop_assert_eq!(w.conj(), a.conj().wedge(&b.conj()));
    }
}
