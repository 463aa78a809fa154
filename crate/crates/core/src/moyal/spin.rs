//! Pseudoclassical spin: Pauli functions of the θ-variables, spin Wigner
//! functions and the fermionic star exponential.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grassmann::{AlgebraSpec, Multivector};
use crate::scalars::{Coefficient, Symbol};

type Mv = Multivector<Coefficient>;

fn hbar() -> Coefficient {
    Coefficient::var(Symbol::new("hbar"))
}

/// `σ^i = (1/iħ) ε^{ijk} θ_j θ_k` on the three-generator θ-algebra.
pub fn pauli_functions(spec: &Arc<AlgebraSpec<Coefficient>>) -> [Mv; 3] {
    let pref = Coefficient::from(2)
        .checked_div(&(&Coefficient::i() * &hbar()))
        .expect("nonzero");
    let th = Multivector::generators(spec);
    let pair = |j: usize, k: usize| th[j].wedge(&th[k]).expect("same algebra").scale(&pref);
    [pair(1, 2), pair(2, 0), pair(0, 1)]
}

/// Spin orientation along the third axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn sign(self) -> i64 {
        match self {
            Spin::Up => 1,
            Spin::Down => -1,
        }
    }
}

/// Spin Wigner function `π_{±1/2} = (1 ± σ³)/2` on the θ-algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinState {
    pub spin: Spin,
    pub value: Mv,
}

/// Expectation values `Tr(π ⋆ S_i)` and `Tr(π ⋆ S⃗²)` with `S⃗ = (ħ/2)σ⃗`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinExpectations {
    pub components: [Coefficient; 3],
    pub squared: Coefficient,
}

pub fn spin_wigner(spin: Spin) -> SpinState {
    let spec = AlgebraSpec::theta(3);
    let sigma = pauli_functions(&spec);
    let half = Coefficient::rational(1, 2);
    let value = (&Multivector::one(&spec) + &sigma[2].scale(&Coefficient::from(spin.sign()))).scale(&half);
    SpinState { spin, value }
}

impl SpinState {
    pub fn is_idempotent(&self) -> bool {
        &self.value * &self.value == self.value
    }

    pub fn trace(&self) -> Coefficient {
        self.value.trace()
    }

    /// `ωS₃ = (ħω/2)σ³`.
    pub fn hamiltonian(spec: &Arc<AlgebraSpec<Coefficient>>, omega: &Coefficient) -> Mv {
        let sigma = pauli_functions(spec);
        sigma[2].scale(&(&(&hbar() * omega) * &Coefficient::rational(1, 2)))
    }

    /// `±ħω/2`.
    pub fn energy(&self, omega: &Coefficient) -> Coefficient {
        &(&(&hbar() * omega) * &Coefficient::rational(1, 2)) * &Coefficient::from(self.spin.sign())
    }

    /// Expectations of the spin components and of `S⃗ ⋆ S⃗`.
    pub fn expectations(&self) -> SpinExpectations {
        let spec = self.value.spec();
        let sigma = pauli_functions(spec);
        let half_h = &hbar() * &Coefficient::rational(1, 2);
        let components = [0, 1, 2].map(|i| (&self.value * &sigma[i].scale(&half_h)).trace());
        let mut s2 = Multivector::zero(spec);
        for s in &sigma {
            s2 = &s2 + &(s * s);
        }
        let quarter_h2 = &(&hbar() * &hbar()) * &Coefficient::rational(1, 4);
        let squared = (&self.value * &s2.scale(&quarter_h2)).trace();
        SpinExpectations { components, squared }
    }
}

/// One term `π_k e^{-iE_k t/ħ}` of a spectral decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralTerm {
    pub energy: Coefficient,
    pub projector: Mv,
}

/// `Exp_C(Ht) = Σ_k π_k e^{-iE_k t/ħ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectral {
    pub hamiltonian: Mv,
    pub terms: Vec<SpectralTerm>,
}

/// Spectral decomposition of an element whose non-scalar part squares to a
/// perfect-square scalar `E²`: energies `h₀ ± E`, projectors `(1 ± H'/E)/2`.
pub fn fermionic_star_exp(h: &Mv) -> Result<Spectral> {
    let spec = h.spec();
    let h0 = h.scalar_part();
    let rest = h - &Multivector::scalar(spec, h0.clone());
    if rest.is_zero() {
        return Ok(Spectral {
            hamiltonian: h.clone(),
            terms: vec![SpectralTerm {
                energy: h0,
                projector: Multivector::one(spec),
            }],
        });
    }
    let sq = (&rest * &rest).as_scalar().ok_or(Error::NotSpectral)?;
    if sq.is_zero() {
        return Err(Error::NotSpectral);
    }
    let e = sq.sqrt_exact().ok_or(Error::NotSpectral)?;
    let unit = rest.scale(&e.inv()?);
    let one = Multivector::one(spec);
    let half = Coefficient::rational(1, 2);
    let terms = vec![
        SpectralTerm {
            energy: &h0 + &e,
            projector: (&one + &unit).scale(&half),
        },
        SpectralTerm {
            energy: &h0 - &e,
            projector: (&one - &unit).scale(&half),
        },
    ];
    Ok(Spectral {
        hamiltonian: h.clone(),
        terms,
    })
}

impl Spectral {
    /// `Σ_k π_k = 1` and `π_k ⋆ π_l = δ_kl π_k`.
    pub fn is_resolution_of_identity(&self) -> bool {
        let spec = self.hamiltonian.spec();
        let mut sum = Multivector::zero(spec);
        for (k, a) in self.terms.iter().enumerate() {
            sum = &sum + &a.projector;
            for (l, b) in self.terms.iter().enumerate() {
                let p = &a.projector * &b.projector;
                let ok = if k == l { p == a.projector } else { p.is_zero() };
                if !ok {
                    return false;
                }
            }
        }
        sum == Multivector::one(spec)
    }

    /// `H ⋆ π_k = E_k π_k` for every term.
    pub fn genvalues_hold(&self) -> bool {
        self.terms
            .iter()
            .all(|t| &self.hamiltonian * &t.projector == t.projector.scale(&t.energy))
    }

    /// Time derivative with the phases `e^{-iE_k t/ħ}` as independent
    /// functions: `iħ d/dt` multiplies term `k` by `iħ · (-iE_k/ħ)`, which must
    /// equal `H ⋆ π_k`.
    pub fn schrodinger_holds(&self) -> Result<bool> {
        let ih = &Coefficient::i() * &hbar();
        for t in &self.terms {
            let rate = (&(-&Coefficient::i()) * &t.energy).checked_div(&hbar())?;
            let lhs = t.projector.scale(&(&ih * &rate));
            if lhs != &self.hamiltonian * &t.projector {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Compares the truncated series `Σ_{n≤N} (-it/ħ)^n H^n / n!` with the
    /// spectral sum of the same truncated phase series, exactly in `t`.
    pub fn matches_series(&self, order: u32) -> Result<bool> {
        let spec = self.hamiltonian.spec();
        let t = Coefficient::var(Symbol::new("t"));
        let x = (&(-&Coefficient::i()) * &t).checked_div(&hbar())?;
        let mut series = Multivector::zero(spec);
        let mut hn = Multivector::one(spec);
        let mut pref = Coefficient::one();
        for n in 0..=order {
            if n > 0 {
                hn = &hn * &self.hamiltonian;
                pref = &(&pref * &x) * &Coefficient::rational(1, n as i64);
            }
            series = &series + &hn.scale(&pref);
        }
        let mut spectral = Multivector::zero(spec);
        for term in &self.terms {
            let mut phase = Coefficient::zero();
            let mut xn = Coefficient::one();
            let xe = &x * &term.energy;
            for n in 0..=order {
                if n > 0 {
                    xn = &(&xn * &xe) * &Coefficient::rational(1, n as i64);
                }
                phase = &phase + &xn;
            }
            spectral = &spectral + &term.projector.scale(&phase);
        }
        Ok(series == spectral)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_three_from_thetas() {
        let spec = AlgebraSpec::theta(3);
        let s = pauli_functions(&spec);
        // σ³ = -(2i/ħ) θ₁θ₂
        let coef = -&(&Coefficient::from(2) * &Coefficient::i()).checked_div(&hbar()).unwrap();
        assert_eq!(s[2], Multivector::blade(&spec, 0b011, coef));
        assert_eq!(s[2].involution(), s[2]);
    }

    #[test]
    fn spin_suite() {
        let up = spin_wigner(Spin::Up);
        let down = spin_wigner(Spin::Down);
        assert!(up.is_idempotent() && down.is_idempotent());
        assert_eq!(&up.value + &down.value, Multivector::one(up.value.spec()));
        assert!((&up.value * &down.value).is_zero());
        assert!(up.trace().is_one());
        let ex = up.expectations();
        assert!(ex.components[0].is_zero() && ex.components[1].is_zero());
        assert_eq!(ex.components[2], &hbar() * &Coefficient::rational(1, 2));
        assert_eq!(ex.squared, &(&hbar() * &hbar()) * &Coefficient::rational(3, 4));
        assert_eq!(down.expectations().components[2], &hbar() * &Coefficient::rational(-1, 2));
    }

    #[test]
    fn spectral_decomposition() {
        let spec = AlgebraSpec::theta(3);
        let omega = Coefficient::symbol("omega");
        let h = SpinState::hamiltonian(&spec, &omega);
        let sp = fermionic_star_exp(&h).unwrap();
        assert_eq!(sp.terms[0].energy, spin_wigner(Spin::Up).energy(&omega));
        assert_eq!(sp.terms[0].projector, spin_wigner(Spin::Up).value);
        assert_eq!(sp.terms[1].projector, spin_wigner(Spin::Down).value);
        assert!(sp.is_resolution_of_identity());
        assert!(sp.genvalues_hold());
        assert!(sp.schrodinger_holds().unwrap());
        assert!(sp.matches_series(6).unwrap());
        let zero = fermionic_star_exp(&Multivector::zero(&spec)).unwrap();
        assert_eq!(zero.terms.len(), 1);
        assert!(zero.terms[0].energy.is_zero());
    }

    #[test]
    fn nilpotent_is_not_spectral() {
        let spec = AlgebraSpec::theta(3);
        let th = Multivector::generators(&spec);
        // θ₁θ₂ + iθ₁θ₃ squares to zero
        let n = &th[0].wedge(&th[1]).unwrap() + &th[0].wedge(&th[2]).unwrap().scale(&Coefficient::i());
        assert!((&n * &n).is_zero());
        assert_eq!(fermionic_star_exp(&n).unwrap_err(), Error::NotSpectral);
    }
}
