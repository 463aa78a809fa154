//! Exact calculus on functions `P(H) exp(λH)` of the oscillator energy.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{Coefficient, Symbol};

fn sym(name: &str) -> Coefficient {
    Coefficient::var(Symbol::new(name))
}

/// `g(H) = Σ_k poly[k] H^k · exp(λH)`.
#[derive(Clone, PartialEq, Debug)]
pub struct RadialFunction {
    poly: Vec<Coefficient>,
    lambda: Coefficient,
}

impl RadialFunction {
    pub fn new(mut poly: Vec<Coefficient>, lambda: Coefficient) -> Self {
        while poly.last().is_some_and(|c| c.is_zero()) {
            poly.pop();
        }
        Self { poly, lambda }
    }

    /// Polynomial in `H` without exponential factor.
    pub fn polynomial(poly: Vec<Coefficient>) -> Self {
        Self::new(poly, Coefficient::zero())
    }

    /// `H^k`.
    pub fn power(k: usize) -> Self {
        let mut poly = vec![Coefficient::zero(); k + 1];
        poly[k] = Coefficient::one();
        Self::polynomial(poly)
    }

    /// `exp(λH)`.
    pub fn exponential(lambda: Coefficient) -> Self {
        Self::new(vec![Coefficient::one()], lambda)
    }

    pub fn coefficients(&self) -> &[Coefficient] {
        &self.poly
    }

    pub fn lambda(&self) -> &Coefficient {
        &self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self::new(self.poly.iter().map(|x| x * c).collect(), self.lambda.clone())
    }

    /// Sum of two functions sharing the same exponent.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.lambda != other.lambda {
            return Err(Error::ClassMismatch);
        }
        let n = self.poly.len().max(other.poly.len());
        let poly = (0..n)
            .map(|k| {
                let a = self.poly.get(k).cloned().unwrap_or_else(Coefficient::zero);
                let b = other.poly.get(k).cloned().unwrap_or_else(Coefficient::zero);
                &a + &b
            })
            .collect();
        Ok(Self::new(poly, self.lambda.clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Coefficient::from(-1)))
    }

    /// `H · g`.
    pub fn mul_h(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut poly = vec![Coefficient::zero()];
        poly.extend(self.poly.iter().cloned());
        Self::new(poly, self.lambda.clone())
    }

    /// `dg/dH`.
    pub fn derivative(&self) -> Self {
        let n = self.poly.len();
        let poly = (0..n)
            .map(|k| {
                let lin = &self.lambda * &self.poly[k];
                match self.poly.get(k + 1) {
                    Some(next) => &lin + &(next * &Coefficient::from((k + 1) as i64)),
                    None => lin,
                }
            })
            .collect();
        Self::new(poly, self.lambda.clone())
    }

    /// The polynomial factor as a coefficient in the symbol `H`, or any
    /// expression substituted for it.
    pub fn polynomial_part(&self, h: &Coefficient) -> Coefficient {
        let mut acc = Coefficient::zero();
        for c in self.poly.iter().rev() {
            acc = &(&acc * h) + c;
        }
        acc
    }
}

impl fmt::Display for RadialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.polynomial_part(&sym("H"));
        if self.lambda.is_zero() {
            write!(f, "{p}")
        } else {
            write!(f, "({p}) exp(({}) H)", self.lambda)
        }
    }
}

/// One-dimensional oscillator `H = p²/2m + mω²q²/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct Oscillator {
    pub mass: Coefficient,
    pub omega: Coefficient,
}

impl Oscillator {
    pub fn new(mass: Coefficient, omega: Coefficient) -> Self {
        Self { mass, omega }
    }

    /// Mass `m` and frequency `ω` as formal symbols.
    pub fn symbolic() -> Self {
        Self::new(sym("m"), sym("omega"))
    }

    /// `p²/2m + mω²q²/2` in the given phase-space symbols.
    pub fn hamiltonian(&self, q: Symbol, p: Symbol) -> Coefficient {
        let q = Coefficient::var(q);
        let p = Coefficient::var(p);
        let two_m = &self.mass * &Coefficient::from(2);
        let kin = (&p * &p).checked_div(&two_m).expect("nonzero mass");
        let pot = &(&(&self.mass * &(&self.omega * &self.omega)) * &(&q * &q)) * &Coefficient::rational(1, 2);
        &kin + &pot
    }

    /// `H ⋆ g(H) = H g - (ħ²ω²/4)(g' + H g'')`.
    pub fn star_h(&self, g: &RadialFunction) -> RadialFunction {
        let h = sym("hbar");
        let c = &(&(&h * &h) * &(&self.omega * &self.omega)) * &Coefficient::rational(1, 4);
        let d1 = g.derivative();
        let d2 = d1.derivative();
        let corr = d1.add(&d2.mul_h()).expect("same exponent");
        g.mul_h().sub(&corr.scale(&c)).expect("same exponent")
    }

    /// `2(-1)^n e^{-2H/ħω} L_n(4H/ħω)`.
    pub fn wigner(&self, n: u32) -> RadialFunction {
        let hw = &sym("hbar") * &self.omega;
        let x = Coefficient::from(4).checked_div(&hw).expect("nonzero");
        let lambda = -&Coefficient::from(2).checked_div(&hw).expect("nonzero");
        let sign = if n % 2 == 0 { 2 } else { -2 };
        let mut poly = Vec::with_capacity(n as usize + 1);
        let mut xk = Coefficient::one();
        for (k, lk) in laguerre(n).into_iter().enumerate() {
            if k > 0 {
                xk = &xk * &x;
            }
            poly.push(&(&lk * &xk) * &Coefficient::from(sign));
        }
        RadialFunction::new(poly, lambda)
    }

    /// `ħω(n + 1/2)`.
    pub fn level(&self, n: u32) -> Coefficient {
        &(&sym("hbar") * &self.omega) * &Coefficient::rational(2 * n as i64 + 1, 2)
    }

    /// `∫∫ g(H) dq dp = (2π/ω) ∫₀^∞ g(E) dE = (2π/ω) Σ_k c_k k! / (-λ)^{k+1}`.
    ///
    /// `π` is the formal symbol `pi`.
    pub fn phase_space_integral(&self, g: &RadialFunction) -> Result<Coefficient> {
        if g.is_zero() {
            return Ok(Coefficient::zero());
        }
        let decay = -g.lambda();
        if decay.definite_sign() != Some(Ordering::Greater) {
            return Err(Error::DivergentIntegral);
        }
        let inv = decay.inv()?;
        let mut acc = Coefficient::zero();
        let mut fact = Coefficient::one();
        let mut pow = inv.clone();
        for (k, c) in g.coefficients().iter().enumerate() {
            if k > 0 {
                fact = &fact * &Coefficient::from(k as i64);
                pow = &pow * &inv;
            }
            acc = &acc + &(&(c * &fact) * &pow);
        }
        let pref = (&Coefficient::from(2) * &sym("pi")).checked_div(&self.omega)?;
        Ok(&pref * &acc)
    }
}

/// Coefficients of the Laguerre polynomial `L_n(x) = Σ_k C(n,k) (-1)^k x^k / k!`.
pub fn laguerre(n: u32) -> Vec<Coefficient> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut binom = Coefficient::one();
    let mut fact = Coefficient::one();
    for k in 0..=n as i64 {
        if k > 0 {
            binom = &binom * &Coefficient::rational(n as i64 - k + 1, k);
            fact = &fact * &Coefficient::from(k);
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        out.push((&binom * &Coefficient::from(sign)).checked_div(&fact).expect("nonzero"));
    }
    out
}

/// Wigner function of the `n`-th oscillator level with symbolic `m, ω`.
pub fn wigner_harmonic(n: u32) -> RadialFunction {
    Oscillator::symbolic().wigner(n)
}

/// `H ⋆ g` for the symbolic oscillator.
pub fn radial_star_h(g: &RadialFunction) -> RadialFunction {
    Oscillator::symbolic().star_h(g)
}

/// `∫∫ g dq dp` for the symbolic oscillator.
pub fn phase_space_integral(g: &RadialFunction) -> Result<Coefficient> {
    Oscillator::symbolic().phase_space_integral(g)
}
