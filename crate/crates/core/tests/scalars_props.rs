mod common;

use common::{constant, poly, rational};
use num_traits::Zero;
use proptest::prelude::*;
use stargeo::{Coefficient, RelationSet, Symbol};

const XYZ: &[&str] = &["x", "y", "z"];
const CS: &[&str] = &["c", "s", "t"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in rational(XYZ), b in rational(XYZ), c in rational(XYZ)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn constants_form_a_field(a in constant(), b in constant()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
    }

    #[test]
    fn common_factors_cancel(p in poly(XYZ, 2, 3), q in poly(XYZ, 2, 3), r in poly(XYZ, 2, 3)) {
        prop_assume!(!p.is_zero() && !r.is_zero());
        let expect = q.checked_div(&r).unwrap();
        prop_assert_eq!((&p * &q).checked_div(&(&p * &r)).unwrap(), expect);
    }

    #[test]
    fn inverse_cancels(a in rational(XYZ)) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), Coefficient::from(1));
    }

    #[test]
    fn conjugation_is_multiplicative(a in constant(), b in poly(XYZ, 2, 3)) {
        let ib = &b * &Coefficient::i();
        prop_assert_eq!((&a * &ib).conj(), &a.conj() * &ib.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn reduce_is_idempotent(a in poly(CS, 4, 5)) {
        let rels = RelationSet::circular(Symbol::new("c"), Symbol::new("s"));
        let once = a.reduce(&rels);
        prop_assert_eq!(once.reduce(&rels), once.clone());
        prop_assert!(once.numerator().degree_in(Symbol::new("c")) <= 1);
        let hyp = RelationSet::hyperbolic(Symbol::new("c"), Symbol::new("s"));
        let h = a.reduce(&hyp);
        prop_assert_eq!(h.reduce(&hyp), h);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(XYZ, 2, 3), b in poly(XYZ, 2, 3), v in poly(CS, 1, 2)) {
        let bind = [(Symbol::new("x"), v)].into_iter().collect();
        let lhs = (&a * &b).substitute(&bind).unwrap();
        prop_assert_eq!(lhs, &a.substitute(&bind).unwrap() * &b.substitute(&bind).unwrap());
    }

    #[test]
    fn series_coefficients_rebuild(a in poly(&["hbar", "x"], 3, 4)) {
        let h = Symbol::new("hbar");
        let mut acc = Coefficient::zero();
        for k in 0..=3u32 {
            let ck = a.series_coefficient(h, k).unwrap();
            acc = &acc + &(&ck * &Coefficient::var(h).pow(k as i32).unwrap());
        }
        prop_assert_eq!(acc, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn difference_with_itself_is_zero(a in rational(XYZ)) {
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a - &a, Coefficient::zero());
    }
}
