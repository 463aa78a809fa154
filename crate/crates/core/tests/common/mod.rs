#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use stargeo::{AlgebraSpec, Coefficient, Multivector};

pub type Mv = Multivector<Coefficient>;

pub fn sym(name: &str) -> Coefficient {
    Coefficient::symbol(name)
}

fn monomial(names: &[&str], coef: i64, exps: &[u32]) -> Coefficient {
    let mut out = Coefficient::from(coef);
    for (n, &e) in names.iter().zip(exps) {
        out = &out * &sym(n).pow(e as i32).unwrap();
    }
    out
}

/// Polynomial in `names` with small integer coefficients.
pub fn poly(names: &'static [&'static str], max_deg: u32, max_terms: usize) -> impl Strategy<Value = Coefficient> + Clone {
    let n = names.len();
    prop::collection::vec((-4i64..=4, prop::collection::vec(0..=max_deg, n)), 1..=max_terms).prop_map(
        move |terms| {
            terms
                .iter()
                .fold(Coefficient::from(0), |acc, (c, e)| &acc + &monomial(names, *c, e))
        },
    )
}

/// Polynomial whose total degree stays at most `max_deg`.
pub fn poly_total(names: &'static [&'static str], max_deg: u32, max_terms: usize) -> impl Strategy<Value = Coefficient> + Clone {
    let n = names.len();
    prop::collection::vec((-4i64..=4, prop::collection::vec(0..=max_deg, n)), 1..=max_terms).prop_map(
        move |terms| {
            terms.iter().fold(Coefficient::from(0), |acc, (c, e)| {
                let mut e = e.clone();
                while e.iter().sum::<u32>() > max_deg {
                    let k = e.iter().position(|&x| x > 0).unwrap();
                    e[k] -= 1;
                }
                &acc + &monomial(names, *c, &e)
            })
        },
    )
}

/// Rational function with a nonzero denominator.
pub fn rational(names: &'static [&'static str]) -> impl Strategy<Value = Coefficient> + Clone {
    (poly(names, 2, 3), poly(names, 1, 2))
        .prop_filter("nonzero denominator", |(_, d)| !num_traits::Zero::is_zero(d))
        .prop_map(|(n, d)| n.checked_div(&d).unwrap())
}

/// Gaussian-rational constant.
pub fn constant() -> impl Strategy<Value = Coefficient> + Clone {
    (-6i64..=6, 1i64..=4, -3i64..=3).prop_map(|(n, d, im)| {
        &Coefficient::rational(n, d) + &(&Coefficient::i() * &Coefficient::from(im))
    })
}

/// Sparse multivector with coefficients drawn from `coef`.
pub fn multivector<S>(spec: Arc<AlgebraSpec<Coefficient>>, coef: S, max_terms: usize) -> impl Strategy<Value = Mv> + Clone
where
    S: Strategy<Value = Coefficient> + Clone,
{
    let blades = 1u32 << spec.dim();
    prop::collection::vec((0..blades, coef), 0..=max_terms)
        .prop_map(move |terms| Multivector::from_terms(&spec, terms))
}

/// Homogeneous multivector of grade `r`.
pub fn homogeneous<S>(spec: Arc<AlgebraSpec<Coefficient>>, r: usize, coef: S) -> impl Strategy<Value = Mv> + Clone
where
    S: Strategy<Value = Coefficient> + Clone,
{
    multivector(spec, coef, 4).prop_map(move |m| m.grade(r))
}

/// Grade-1 element with the given component strategy.
pub fn vector<S>(spec: Arc<AlgebraSpec<Coefficient>>, coef: S) -> impl Strategy<Value = Mv> + Clone
where
    S: Strategy<Value = Coefficient> + Clone,
{
    let d = spec.dim();
    prop::collection::vec(coef, d).prop_map(move |c| Multivector::vector(&spec, &c))
}
