//! Hydrogen spectrum from four holomorphic oscillator modes.

use num_traits::Zero;

use super::radial::Oscillator;
use crate::error::{Error, Result};
use crate::scalars::{Coefficient, Symbol};

fn sym(name: &str) -> Coefficient {
    Coefficient::var(Symbol::new(name))
}

/// Occupations `(n_R12, n_L12, n_R34, n_L34)` of the four modes.
pub type Occupation = [u32; 4];

/// Solution of the hydrogen genvalue problem at principal quantum number `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct HydrogenLevel {
    pub n: u32,
    /// Every occupation with `n_R12 + n_R34 = n_L12 + n_L34 = n - 1`.
    pub occupations: Vec<Occupation>,
    /// Per-mode genvalue checks `N ⋆ π_k = ħ(k + 1/2) π_k` all held.
    pub modes_hold: bool,
    /// `e² = ħω(Σ n + 2)` held for every occupation with the same `ω`.
    pub sum_consistent: bool,
    /// `ω = e²/(2nħ)`.
    pub omega: Coefficient,
    /// `E = -2mω² = -me⁴/(2ħ²n²)`.
    pub energy: Coefficient,
}

/// Occupations satisfying the constraint `n_R - n_L = 0` with `Σ n = 2(n-1)`.
pub fn occupations(n: u32) -> Vec<Occupation> {
    let k = n - 1;
    let mut out = Vec::with_capacity((n * n) as usize);
    for r12 in 0..=k {
        for l12 in 0..=k {
            out.push([r12, l12, k - r12, k - l12]);
        }
    }
    out
}

/// Full analysis of level `n`.
pub fn hydrogen_level(n: i64) -> Result<HydrogenLevel> {
    if n < 1 {
        return Err(Error::InvalidQuantumNumber(n));
    }
    let n = u32::try_from(n).map_err(|_| Error::InvalidQuantumNumber(n))?;
    let occ = occupations(n);
    let unit = Oscillator::new(sym("m"), Coefficient::from(1));
    let hbar = sym("hbar");
    let e2 = &sym("e") * &sym("e");
    let omega = e2.checked_div(&(&hbar * &Coefficient::from(2 * n as i64)))?;

    let mut modes_hold = true;
    let mut sum_consistent = true;
    for o in &occ {
        if o[0] + o[2] != o[1] + o[3] {
            sum_consistent = false;
        }
        let mut total = Coefficient::zero();
        for &k in o {
            let w = unit.wigner(k);
            let e = unit.level(k);
            if unit.star_h(&w) != w.scale(&e) {
                modes_hold = false;
            }
            total = &total + &e;
        }
        if &omega * &total != e2 {
            sum_consistent = false;
        }
    }
    let mass = sym("m");
    let energy = -&(&(&mass * &omega) * &(&omega * &Coefficient::from(2)));
    Ok(HydrogenLevel {
        n,
        occupations: occ,
        modes_hold,
        sum_consistent,
        omega,
        energy,
    })
}

/// `E_n = -me⁴/(2ħ²n²)`.
pub fn hydrogen_levels(n: i64) -> Result<Coefficient> {
    hydrogen_level(n).map(|l| l.energy)
}
