//! Moyal-Clifford product and the Pauli splitting of the minimally coupled
//! Hamiltonian.

use std::sync::Arc;

use num_traits::Zero;

use super::star::StarProduct;
use crate::error::{Error, Result};
use crate::grassmann::{AlgebraSpec, Multivector};
use crate::scalars::{Coefficient, Symbol};

type Mv = Multivector<Coefficient>;

/// `F ⋆MC G = Σ_{A,B} (f_A ⋆M g_B)(e_A ⋆C e_B)`.
pub fn moyal_clifford_star(star: &StarProduct, f: &Mv, g: &Mv) -> Result<Mv> {
    if f.spec() != g.spec() && **f.spec() != **g.spec() {
        return Err(Error::AlgebraMismatch);
    }
    let spec = f.spec();
    let mut out = Multivector::zero(spec);
    for (a, fa) in f.terms() {
        for (b, gb) in g.terms() {
            let c = star.star(fa, gb)?;
            if c.is_zero() {
                continue;
            }
            for (blade, w) in spec.blade_product(a, b) {
                out.add_term(blade, &c * &w);
            }
        }
    }
    Ok(out)
}

/// Pieces of `(1/2m)[(p + eA)·σ]^{2⋆MC}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliSplit {
    /// `(1/2m) Σ (p_n + eA_n)^{2⋆M}`.
    pub h0: Coefficient,
    /// `(1/2m) Σ_{m<n} [p_m + eA_m, p_n + eA_n]⋆M σ_m σ_n`.
    pub spin: Mv,
    /// The full Moyal-Clifford square, for cross-checking.
    pub full: Mv,
}

impl PauliSplit {
    /// The full square equals `H₀ + spin terms`.
    pub fn is_consistent(&self) -> bool {
        let spec = self.full.spec();
        &Multivector::scalar(spec, self.h0.clone()) + &self.spin == self.full
    }
}

/// Expands the minimally coupled Hamiltonian for a vector potential given by
/// three components polynomial in `q1..q3, p1..p3`.
pub fn pauli_split(potential: &[Coefficient; 3], charge: &Coefficient, mass: &Coefficient) -> Result<PauliSplit> {
    let spec: Arc<AlgebraSpec<Coefficient>> = AlgebraSpec::euclidean(3);
    let star = StarProduct::moyal_nd(3);
    let kin: Vec<Coefficient> = (0..3)
        .map(|n| &Coefficient::var(Symbol::new(&format!("p{}", n + 1))) + &(charge * &potential[n]))
        .collect();
    let two_m = mass * &Coefficient::from(2);
    let v = Multivector::vector(&spec, &kin);
    let full = moyal_clifford_star(&star, &v, &v)?.try_map(|c| c.checked_div(&two_m))?;
    let mut h0 = Coefficient::zero();
    for k in &kin {
        h0 = &h0 + &star.star(k, k)?;
    }
    let h0 = h0.checked_div(&two_m)?;
    let mut spin = Multivector::zero(&spec);
    for m in 0..3 {
        for n in m + 1..3 {
            let c = star.commutator(&kin[m], &kin[n])?.checked_div(&two_m)?;
            spin.add_term((1 << m) | (1 << n), c);
        }
    }
    Ok(PauliSplit { h0, spin, full })
}

/// Uniform field along the third axis: `A = (-B₃q₂/2, B₃q₁/2, 0)`.
pub fn uniform_field_potential() -> [Coefficient; 3] {
    let b = Coefficient::symbol("B3");
    let half = Coefficient::rational(1, 2);
    [
        -&(&(&b * &Coefficient::symbol("q2")) * &half),
        &(&b * &Coefficient::symbol("q1")) * &half,
        Coefficient::zero(),
    ]
}

/// `σ³ = -iσ₁σ₂` on the Euclidean three-space.
pub fn sigma3_quaternion(spec: &Arc<AlgebraSpec<Coefficient>>) -> Mv {
    Multivector::blade(spec, 0b011, -Coefficient::i())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn vector_pair() {
        let spec = AlgebraSpec::<Coefficient>::euclidean(1);
        let star = StarProduct::moyal_1d();
        let f = Multivector::generator(&spec, 0).scale(&Coefficient::symbol("q"));
        let g = Multivector::generator(&spec, 0).scale(&Coefficient::symbol("p"));
        let expect = &(&Coefficient::symbol("q") * &Coefficient::symbol("p"))
            + &(&(&Coefficient::i() * &Coefficient::symbol("hbar")) * &Coefficient::rational(1, 2));
        assert_eq!(moyal_clifford_star(&star, &f, &g).unwrap(), Multivector::scalar(&spec, expect));
    }

    #[test]
    fn noncommuting_square_has_bivector() {
        let spec = AlgebraSpec::<Coefficient>::euclidean(2);
        let star = StarProduct::moyal_nd(1);
        let a = Multivector::vector(&spec, &[Coefficient::symbol("q1"), Coefficient::symbol("p1")]);
        let sq = moyal_clifford_star(&star, &a, &a).unwrap();
        assert_eq!(sq.grades(), vec![0, 2]);
    }

    #[test]
    fn uniform_field_spin_term() {
        let split = pauli_split(&uniform_field_potential(), &Coefficient::symbol("e"), &Coefficient::symbol("m")).unwrap();
        assert!(split.is_consistent());
        let spec = split.spin.spec().clone();
        let omega = (&Coefficient::symbol("e") * &Coefficient::symbol("B3")).checked_div(&Coefficient::symbol("m")).unwrap();
        let coef = &(&Coefficient::symbol("hbar") * &omega) * &Coefficient::rational(1, 2);
        assert_eq!(split.spin, sigma3_quaternion(&spec).scale(&coef));
        let classical = split.spin.series_coefficient(Symbol::new("hbar"), 0).unwrap();
        assert!(classical.is_zero());
    }

    #[test]
    fn free_particle() {
        let zero = [Coefficient::zero(), Coefficient::zero(), Coefficient::zero()];
        let split = pauli_split(&zero, &Coefficient::symbol("e"), &Coefficient::one()).unwrap();
        assert!(split.spin.is_zero());
        let p2 = (1..=3).fold(Coefficient::zero(), |acc, i| {
            let p = Coefficient::symbol(&format!("p{i}"));
            &acc + &(&p * &p)
        });
        assert_eq!(split.h0, &p2 * &Coefficient::rational(1, 2));
    }
}
