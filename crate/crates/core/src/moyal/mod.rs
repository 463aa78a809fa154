//! Moyal and Moyal-Clifford products, oscillator and spin Wigner functions,
//! and the hydrogen spectrum.

pub mod hydrogen;
pub mod mc;
pub mod radial;
pub mod spin;
pub mod star;

pub use hydrogen::{hydrogen_level, hydrogen_levels, HydrogenLevel};
pub use mc::{moyal_clifford_star, pauli_split, PauliSplit};
pub use radial::{laguerre, phase_space_integral, radial_star_h, wigner_harmonic, Oscillator, RadialFunction};
pub use spin::{fermionic_star_exp, spin_wigner, Spin, SpinState, Spectral, SpectralTerm};
pub use star::{correspondence_order, holomorphic_pair, moyal_star, StarProduct};

use crate::error::{Error, Result};
use crate::grassmann::Multivector;
use crate::scalars::Coefficient;

/// An operand of a genvalue equation.
#[derive(Clone, Debug, PartialEq)]
pub enum Operand {
    /// The oscillator Hamiltonian acting through the radial calculus.
    Oscillator(Oscillator),
    /// A function of the oscillator energy.
    Radial(RadialFunction),
    /// A multivector with phase-space coefficients.
    Clifford(Multivector<Coefficient>),
    /// A polynomial phase-space function.
    Phase(Coefficient),
}

/// Outcome of `H ⋆ π - Eπ`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenvalueCheck {
    pub holds: bool,
    pub residual: Operand,
}

/// Checks `H ⋆ π = Eπ`. Phase functions and multivectors mix through the
/// Moyal-Clifford product; radial states need the oscillator Hamiltonian.
pub fn stargenvalue_check(h: &Operand, state: &Operand, energy: &Coefficient) -> Result<GenvalueCheck> {
    let residual = match (h, state) {
        (Operand::Oscillator(osc), Operand::Radial(g)) => Operand::Radial(osc.star_h(g).sub(&g.scale(energy))?),
        (Operand::Phase(f), Operand::Phase(g)) => Operand::Phase(&moyal_star(f, g)? - &(g * energy)),
        (Operand::Clifford(_) | Operand::Phase(_), Operand::Clifford(g))
        | (Operand::Clifford(g), Operand::Phase(_)) => {
            let spec = g.spec();
            let lift = |x: &Operand| match x {
                Operand::Clifford(m) => m.clone(),
                Operand::Phase(c) => Multivector::scalar(spec, c.clone()),
                _ => unreachable!(),
            };
            let hm = lift(h);
            let sm = lift(state);
            let lhs = moyal_clifford_star(&StarProduct::moyal_standard(), &hm, &sm)?;
            Operand::Clifford(lhs.try_sub(&sm.scale(energy))?)
        }
        _ => return Err(Error::ClassMismatch),
    };
    let holds = match &residual {
        Operand::Radial(r) => r.is_zero(),
        Operand::Clifford(m) => m.is_zero(),
        Operand::Phase(c) => num_traits::Zero::is_zero(c),
        Operand::Oscillator(_) => false,
    };
    Ok(GenvalueCheck { holds, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::AlgebraSpec;
    use crate::scalars::Symbol;

    #[test]
    fn oscillator_levels() {
        let osc = Oscillator::symbolic();
        for n in 0..=10 {
            let chk = stargenvalue_check(
                &Operand::Oscillator(osc.clone()),
                &Operand::Radial(wigner_harmonic(n)),
                &osc.level(n),
            )
            .unwrap();
            assert!(chk.holds, "n = {n}");
        }
    }

    #[test]
    fn spin_level_and_residual() {
        let spec = AlgebraSpec::theta(3);
        let omega = Coefficient::symbol("omega");
        let h = Operand::Clifford(SpinState::hamiltonian(&spec, &omega));
        let up = spin_wigner(Spin::Up);
        let e = up.energy(&omega);
        // re-home the state on the same algebra
        let state = Multivector::from_terms(&spec, up.value.terms().map(|(b, c)| (b, c.clone())));
        let chk = stargenvalue_check(&h, &Operand::Clifford(state.clone()), &e).unwrap();
        assert!(chk.holds);
        let off = &e + &Coefficient::from(1);
        let chk = stargenvalue_check(&h, &Operand::Clifford(state.clone()), &off).unwrap();
        assert!(!chk.holds);
        assert_eq!(chk.residual, Operand::Clifford(-&state));
    }

    #[test]
    fn phase_and_mismatch() {
        let q = Coefficient::var(Symbol::new("q"));
        let chk = stargenvalue_check(&Operand::Phase(Coefficient::from(3)), &Operand::Phase(q.clone()), &Coefficient::from(3)).unwrap();
        assert!(chk.holds);
        let err = stargenvalue_check(&Operand::Phase(q), &Operand::Radial(wigner_harmonic(0)), &Coefficient::from(0));
        assert_eq!(err.unwrap_err(), Error::ClassMismatch);
    }
}
