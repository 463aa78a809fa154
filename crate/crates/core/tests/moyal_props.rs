mod common;

use common::{multivector, poly_total};
use num_traits::{One, Zero};
use proptest::prelude::*;
use stargeo::moyal::{
    correspondence_order, moyal_clifford_star, phase_space_integral, radial_star_h, wigner_harmonic, StarProduct,
};
use stargeo::{AlgebraSpec, Coefficient, Symbol};

const ONE_D: &[&str] = &["q", "p"];
const TWO_D: &[&str] = &["q1", "p1", "q2", "p2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn moyal_is_associative(
        f in poly_total(ONE_D, 4, 3),
        g in poly_total(ONE_D, 4, 3),
        h in poly_total(ONE_D, 4, 3),
    ) {
        let m = StarProduct::moyal_1d();
        let left = m.star(&m.star(&f, &g).unwrap(), &h).unwrap();
        let right = m.star(&f, &m.star(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn moyal_is_associative_in_two_dimensions(
        f in poly_total(TWO_D, 2, 3),
        g in poly_total(TWO_D, 2, 3),
        h in poly_total(TWO_D, 2, 3),
    ) {
        let m = StarProduct::moyal_nd(2);
        let left = m.star(&m.star(&f, &g).unwrap(), &h).unwrap();
        let right = m.star(&f, &m.star(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn moyal_clifford_reduces_to_clifford_classically(
        f in multivector(AlgebraSpec::euclidean(2), poly_total(ONE_D, 2, 2), 3),
        g in multivector(AlgebraSpec::euclidean(2), poly_total(ONE_D, 2, 2), 3),
    ) {
        let m = StarProduct::moyal_1d();
        let mc = moyal_clifford_star(&m, &f, &g).unwrap();
        let classical = mc.series_coefficient(Symbol::new("hbar"), 0).unwrap();
        prop_assert_eq!(classical, &f * &g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn correspondence_gives_poisson_bracket(
        f in poly_total(TWO_D, 4, 3),
        g in poly_total(TWO_D, 4, 3),
    ) {
        let m = StarProduct::moyal_nd(2);
        prop_assert_eq!(correspondence_order(&m, &f, &g).unwrap(), m.poisson_bracket(&f, &g));
    }
}

#[test]
fn radial_genvalues_and_normalization() {
    let hw = &Coefficient::symbol("hbar") * &Coefficient::symbol("omega");
    let two_pi_hbar = &(&Coefficient::from(2) * &Coefficient::symbol("pi")) * &Coefficient::symbol("hbar");
    for n in 0..=10u32 {
        let w = wigner_harmonic(n);
        let energy = &hw * &Coefficient::rational(2 * n as i64 + 1, 2);
        assert_eq!(radial_star_h(&w), w.scale(&energy), "n = {n}");
        let norm = phase_space_integral(&w).unwrap().checked_div(&two_pi_hbar).unwrap();
        assert!(norm.is_one(), "n = {n}: {norm}");
    }
}

#[test]
fn correspondence_is_antisymmetric_and_kills_constants() {
    let m = StarProduct::moyal_1d();
    let f = &Coefficient::symbol("q").pow(3).unwrap() * &Coefficient::symbol("p");
    assert!(correspondence_order(&m, &f, &Coefficient::from(7)).unwrap().is_zero());
    let g = Coefficient::symbol("p").pow(2).unwrap();
    let fg = correspondence_order(&m, &f, &g).unwrap();
    assert_eq!(fg, -&correspondence_order(&m, &g, &f).unwrap());
}
