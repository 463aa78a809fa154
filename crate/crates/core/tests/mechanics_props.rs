mod common;

use common::{poly_total, sym, vector};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use stargeo::mechanics::ks::constraint_preserved;
use stargeo::mechanics::{ks_position, oscillator_orbit, poisson_ga};
use stargeo::moyal::{correspondence_order, StarProduct};
use stargeo::{AlgebraSpec, Coefficient, Multivector};

const TWO_D: &[&str] = &["q1", "p1", "q2", "p2"];

fn rational_u() -> impl Strategy<Value = [Coefficient; 4]> {
    prop::array::uniform4((-20i64..=20, 1i64..=9)).prop_map(|u| u.map(|(n, d)| Coefficient::rational(n, d)))
}

fn norm_squared(v: &[Coefficient]) -> Coefficient {
    v.iter().fold(Coefficient::zero(), |acc, x| &acc + &(x * x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn poisson_routes_agree(
        f in poly_total(TWO_D, 4, 3),
        g in poly_total(TWO_D, 4, 3),
    ) {
        let m = StarProduct::moyal_nd(2);
        prop_assert_eq!(poisson_ga(2, &f, &g), correspondence_order(&m, &f, &g).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ks_routes_agree(u in rational_u()) {
        let pos = ks_position(&u);
        prop_assert!(pos.agrees());
        let r = norm_squared(&u);
        prop_assert_eq!(&pos.radius, &r);
        prop_assert_eq!(norm_squared(&pos.rotor), &r * &r);
    }

    #[test]
    fn ks_routes_agree_over_big_rationals(u in prop::array::uniform4((-50i64..=50, 1i64..=7))) {
        let u = u.map(|(n, d)| BigRational::new(n.into(), d.into()));
        prop_assert!(ks_position(&u).agrees());
    }

    #[test]
    fn planar_orbits_stay_in_the_plane(
        a in vector(AlgebraSpec::euclidean(2), poly_total(&["a"], 1, 2)),
    ) {
        let spec = AlgebraSpec::<Coefficient>::euclidean(3);
        let amp = Multivector::vector(&spec, &[a.coefficient(1), a.coefficient(2), Coefficient::zero()]);
        let plane = Multivector::blade(&spec, 0b011, Coefficient::from(1));
        let orbit = oscillator_orbit(&amp, &plane, &sym("c"), &sym("s")).unwrap();
        prop_assert!(orbit.out_of_plane.is_zero());
        prop_assert_eq!(orbit.vector_part, orbit.orbit);
    }
}

#[test]
fn symbolic_radius_is_spinor_norm() {
    let u: [Coefficient; 4] = std::array::from_fn(|i| sym(&format!("u{}", i + 1)));
    let pos = ks_position(&u);
    assert!(pos.agrees());
    let r = norm_squared(&u);
    assert_eq!(pos.radius, r);
    assert_eq!(norm_squared(&pos.rotor), &r * &r);
}

#[test]
fn out_of_plane_amplitude_leaves_trivector() {
    let spec = AlgebraSpec::<Coefficient>::euclidean(3);
    let amp = Multivector::vector(&spec, &[sym("a1"), sym("a2"), sym("a3")]);
    let plane = Multivector::blade(&spec, 0b011, Coefficient::from(1));
    let orbit = oscillator_orbit(&amp, &plane, &sym("c"), &sym("s")).unwrap();
    let expect = Multivector::pseudoscalar(&spec).scale(&(&sym("a3") * &sym("s")));
    assert_eq!(orbit.out_of_plane, expect);
}

#[test]
fn radial_constraint_is_conserved() {
    assert!(constraint_preserved().unwrap());
}
