//! Kustaanheimo-Stiefel transformation: spinor and matrix forms, velocity and
//! momentum maps, and regularization of the Kepler Hamiltonian.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grassmann::{AlgebraSpec, Multivector};
use crate::scalar::Scalar;
use crate::scalars::{Coefficient, Symbol};

/// `U = u₁ + u₂σ₂σ₃ + u₃σ₃σ₁ + u₄σ₁σ₂` in the Euclidean three-space.
pub fn ks_rotor<S: Scalar>(spec: &Arc<AlgebraSpec<S>>, u: &[S; 4]) -> Multivector<S> {
    Multivector::from_terms(
        spec,
        [
            (0b000, u[0].clone()),
            (0b110, u[1].clone()),
            (0b101, -u[2].clone()),
            (0b011, u[3].clone()),
        ],
    )
}

/// The 4×4 matrix `L_u`.
pub fn ks_matrix<S: Scalar>(u: &[S; 4]) -> [[S; 4]; 4] {
    let [a, b, c, d] = u.clone();
    [
        [a.clone(), b.clone(), -c.clone(), -d.clone()],
        [-d.clone(), c.clone(), b.clone(), -a.clone()],
        [c.clone(), d.clone(), a.clone(), b.clone()],
        [-b, a, -d, c],
    ]
}

fn apply<S: Scalar>(m: &[[S; 4]; 4], v: &[S; 4]) -> [S; 4] {
    std::array::from_fn(|i| (0..4).fold(S::zero(), |acc, j| acc + m[i][j].clone() * v[j].clone()))
}

fn apply_transpose<S: Scalar>(m: &[[S; 4]; 4], v: &[S; 4]) -> [S; 4] {
    std::array::from_fn(|i| (0..4).fold(S::zero(), |acc, j| acc + m[j][i].clone() * v[j].clone()))
}

fn vector_components<S: Scalar>(v: &Multivector<S>) -> [S; 3] {
    [v.coefficient(0b001), v.coefficient(0b010), v.coefficient(0b100)]
}

/// `U ⋆ σ₁ ⋆ Ū` as three components.
pub fn ks_position_rotor<S: Scalar>(spec: &Arc<AlgebraSpec<S>>, u: &[S; 4]) -> [S; 3] {
    let rotor = ks_rotor(spec, u);
    let sigma1 = Multivector::generator(spec, 0);
    vector_components(&(&(&rotor * &sigma1) * &rotor.reverse()))
}

/// `L_u u`; the fourth component vanishes identically.
pub fn ks_position_matrix<S: Scalar>(u: &[S; 4]) -> [S; 4] {
    apply(&ks_matrix(u), u)
}

/// Position computed along both routes.
#[derive(Clone, Debug, PartialEq)]
pub struct KsPosition<S> {
    pub rotor: [S; 3],
    pub matrix: [S; 4],
    /// `U ⋆ Ū`.
    pub radius: S,
}

impl<S: Scalar> KsPosition<S> {
    /// Both routes give the same vector and the fourth matrix row gives zero.
    pub fn agrees(&self) -> bool {
        self.rotor[..] == self.matrix[..3] && self.matrix[3].is_zero()
    }
}

pub fn ks_position<S: Scalar>(u: &[S; 4]) -> KsPosition<S> {
    let spec = AlgebraSpec::euclidean(3);
    let rotor = ks_rotor(&spec, u);
    KsPosition {
        rotor: ks_position_rotor(&spec, u),
        matrix: ks_position_matrix(u),
        radius: (&rotor * &rotor.reverse()).scalar_part(),
    }
}

/// Relations of the KS map selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KsMap {
    /// `ṙ = 2 L_u u̇` (fourth entry is `ṙ₄`).
    Velocity,
    /// `u̇ = L_uᵀ ṙ / 2r`.
    InverseVelocity,
    /// `p = L_u w / 2r` (fourth entry is `p₄`).
    Momentum,
    /// `p₄ = (u₁w₂ - u₂w₁ + u₃w₄ - u₄w₃) / 2r`.
    P4,
    /// `U̇ ⋆ σ₁ ⋆ Ū = U ⋆ σ₁ ⋆ U̇‾`, equivalently `ṙ₄ = 0`.
    Constraint,
}

impl FromStr for KsMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "velocity" => KsMap::Velocity,
            "inverse_velocity" => KsMap::InverseVelocity,
            "momentum" => KsMap::Momentum,
            "p4" => KsMap::P4,
            "constraint" => KsMap::Constraint,
            other => return Err(Error::UnknownKind(other.to_string())),
        })
    }
}

impl fmt::Display for KsMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KsMap::Velocity => "velocity",
            KsMap::InverseVelocity => "inverse_velocity",
            KsMap::Momentum => "momentum",
            KsMap::P4 => "p4",
            KsMap::Constraint => "constraint",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum KsValue {
    Vector([Coefficient; 4]),
    Scalar(Coefficient),
    Flag(bool),
}

fn radius(u: &[Coefficient; 4]) -> Coefficient {
    u.iter().fold(Coefficient::zero(), |acc, x| &acc + &(x * x))
}

/// Evaluates one KS relation on `u` and a second four-tuple whose meaning
/// depends on `kind` (`u̇`, `ṙ`, or `w`).
pub fn ks_map(kind: KsMap, u: &[Coefficient; 4], other: &[Coefficient; 4]) -> Result<KsValue> {
    let l = ks_matrix(u);
    let two_r = &radius(u) * &Coefficient::from(2);
    let halve = |v: [Coefficient; 4]| -> Result<[Coefficient; 4]> {
        let mut out = v;
        for x in &mut out {
            *x = x.checked_div(&two_r)?;
        }
        Ok(out)
    };
    Ok(match kind {
        KsMap::Velocity => KsValue::Vector(apply(&l, other).map(|x| &x * &Coefficient::from(2))),
        KsMap::InverseVelocity => KsValue::Vector(halve(apply_transpose(&l, other))?),
        KsMap::Momentum => KsValue::Vector(halve(apply(&l, other))?),
        KsMap::P4 => KsValue::Scalar(p4(u, other)?),
        KsMap::Constraint => {
            let spec = AlgebraSpec::euclidean(3);
            let rotor = ks_rotor(&spec, u);
            let rate = ks_rotor(&spec, other);
            let s1 = Multivector::generator(&spec, 0);
            KsValue::Flag(&(&rate * &s1) * &rotor.reverse() == &(&rotor * &s1) * &rate.reverse())
        }
    })
}

/// Parses the kind name first.
pub fn ks_map_named(kind: &str, u: &[Coefficient; 4], other: &[Coefficient; 4]) -> Result<KsValue> {
    ks_map(kind.parse()?, u, other)
}

pub fn p4(u: &[Coefficient; 4], w: &[Coefficient; 4]) -> Result<Coefficient> {
    let num = &(&(&u[0] * &w[1]) - &(&u[1] * &w[0])) + &(&(&u[2] * &w[3]) - &(&u[3] * &w[2]));
    num.checked_div(&(&radius(u) * &Coefficient::from(2)))
}

/// `U̇ ⋆ σ₁ ⋆ Ū + U ⋆ σ₁ ⋆ U̇‾`.
pub fn velocity_rotor(u: &[Coefficient; 4], udot: &[Coefficient; 4]) -> [Coefficient; 3] {
    let spec = AlgebraSpec::euclidean(3);
    let s1 = Multivector::generator(&spec, 0);
    let (a, b) = (ks_rotor(&spec, u), ks_rotor(&spec, udot));
    vector_components(&(&(&(&b * &s1) * &a.reverse()) + &(&(&a * &s1) * &b.reverse())))
}

/// `(W ⋆ σ₁ ⋆ Ū + U ⋆ σ₁ ⋆ W̄) · factor / r`.
pub fn momentum_rotor(u: &[Coefficient; 4], w: &[Coefficient; 4], factor: &Coefficient) -> Result<[Coefficient; 3]> {
    let bracket = velocity_rotor(u, w);
    let scale = factor.checked_div(&radius(u))?;
    Ok(bracket.map(|x| &x * &scale))
}

fn symbols(prefix: &str) -> [Coefficient; 4] {
    std::array::from_fn(|i| Coefficient::var(Symbol::new(&format!("{prefix}{}", i + 1))))
}

/// Which prefactor in the momentum map satisfies `p² = |W|²/4r - p₄²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentumPrefactors {
    /// `1/4r` in front of the spinor bracket.
    pub rotor_quarter: bool,
    /// `1/2r` in front of the spinor bracket.
    pub rotor_half: bool,
    /// `1/2r` in front of `L_u w`.
    pub matrix_half: bool,
    /// The spinor bracket equals `2 L_u w` componentwise.
    pub bracket_is_twice_matrix: bool,
}

/// The identity is compared after multiplying through by `4r²`:
/// `4r² p² = r|W|² - (2r p₄)²`.
pub fn momentum_prefactors() -> Result<MomentumPrefactors> {
    let u = symbols("u");
    let w = symbols("w");
    let r = radius(&u);
    let lw = apply(&ks_matrix(&u), &w);
    let two_r_p4 = lw[3].clone();
    let target = &(&r * &radius(&w)) - &(&two_r_p4 * &two_r_p4);
    let sq = |v: &[Coefficient]| v.iter().fold(Coefficient::zero(), |acc, x| &acc + &(x * x));
    // r p for each candidate, so 4r² p² = 4 (r p)²
    let bracket = velocity_rotor(&u, &w);
    let quarter = bracket.clone().map(|x| &x * &Coefficient::rational(1, 4));
    let half = bracket.clone().map(|x| &x * &Coefficient::rational(1, 2));
    let matrix = lw.clone().map(|x| &x * &Coefficient::rational(1, 2));
    let four = Coefficient::from(4);
    Ok(MomentumPrefactors {
        rotor_quarter: &sq(&quarter) * &four == target,
        rotor_half: &sq(&half) * &four == target,
        matrix_half: &sq(&matrix[..3]) * &four == target && &p4(&u, &w)? * &(&r * &Coefficient::from(2)) == two_r_p4,
        bracket_is_twice_matrix: (0..3).all(|i| bracket[i] == &lw[i] * &Coefficient::from(2)),
    })
}

/// Symbolic check that `u̇ = L_uᵀṙ/2r` maps back to `(ṙ, 0)` under `ṙ = 2L_u u̇`
/// and satisfies the spinor constraint, so `dr₄/ds = r ṙ₄ = 0`.
pub fn constraint_preserved() -> Result<bool> {
    let u = symbols("u");
    let mut rdot = symbols("v");
    rdot[3] = Coefficient::zero();
    let KsValue::Vector(udot) = ks_map(KsMap::InverseVelocity, &u, &rdot)? else {
        unreachable!()
    };
    let KsValue::Vector(back) = ks_map(KsMap::Velocity, &u, &udot)? else {
        unreachable!()
    };
    let KsValue::Flag(ga) = ks_map(KsMap::Constraint, &u, &udot)? else {
        unreachable!()
    };
    let dr4_ds = &radius(&u) * &back[3];
    Ok(back == rdot && ga && dr4_ds.is_zero())
}

/// The chain `H → H₁ → H₂ → H₃ → H₄` for the Kepler Hamiltonian
/// `H = p²/2m - k/r`.
#[derive(Clone, Debug, PartialEq)]
pub struct KsRegularization {
    pub h: Coefficient,
    /// `H + p₀`.
    pub h1: Coefficient,
    /// `r H₁`.
    pub h2: Coefficient,
    /// `∂H₂/∂p₀`, the rate `dt/ds`.
    pub dq0_ds: Coefficient,
    /// `H₂` in KS coordinates with `p₀ = -E`.
    pub h3: Coefficient,
    /// `|W|²/8m - r p₄²/2m - k - Er`.
    pub h3_expected: Coefficient,
    /// `H₃` with `p₄ = 0` and `E = -|E|` (symbol `Eabs`).
    pub h4: Coefficient,
    /// `|W|²/8m + |E| |u|² - k`.
    pub h4_expected: Coefficient,
    /// `ω²` read off as `∂²H₄/∂u₁² · ∂²H₄/∂w₁²`.
    pub omega_squared: Coefficient,
}

impl KsRegularization {
    pub fn consistent(&self) -> bool {
        self.h3 == self.h3_expected && self.h4 == self.h4_expected
    }
}

pub fn regularize_hamiltonian() -> Result<KsRegularization> {
    let sym = |n: &str| Coefficient::var(Symbol::new(n));
    let (m, k, r, p0) = (sym("m"), sym("k"), sym("r"), sym("p0"));
    let two_m = &m * &Coefficient::from(2);
    let p: [Coefficient; 3] = std::array::from_fn(|i| sym(&format!("p{}", i + 1)));
    let psq = p.iter().fold(Coefficient::zero(), |acc, x| &acc + &(x * x));
    let h = &psq.checked_div(&two_m)? - &k.checked_div(&r)?;
    let h1 = &h + &p0;
    let h2 = &r * &h1;
    let dq0_ds = h2.derivative(Symbol::new("p0"));

    let u = symbols("u");
    let w = symbols("w");
    let ru = radius(&u);
    let KsValue::Vector(pw) = ks_map(KsMap::Momentum, &u, &w)? else {
        unreachable!()
    };
    let mut bind: Vec<(&str, Coefficient)> = vec![("r", ru.clone()), ("p0", -&sym("E"))];
    let names = ["p1", "p2", "p3"];
    for (i, n) in names.iter().enumerate() {
        bind.push((n, pw[i].clone()));
    }
    let h3 = h2.substitute_named(&bind)?;
    let p4v = p4(&u, &w)?;
    let w2 = radius(&w);
    let eight_m = &m * &Coefficient::from(8);
    let p4_term = (&ru * &(&p4v * &p4v)).checked_div(&two_m)?;
    let h3_expected = &(&(&w2.checked_div(&eight_m)? - &p4_term) - &k) - &(&sym("E") * &ru);
    let restored = &h3 + &p4_term;
    let h4 = restored.substitute_named(&[("E", -&sym("Eabs"))])?;
    let h4_expected = &(&w2.checked_div(&eight_m)? + &(&sym("Eabs") * &ru)) - &k;
    let (u1, w1) = (Symbol::new("u1"), Symbol::new("w1"));
    let omega_squared = &h4.derivative(u1).derivative(u1) * &h4.derivative(w1).derivative(w1);
    Ok(KsRegularization {
        h,
        h1,
        h2,
        dq0_ds,
        h3,
        h3_expected,
        h4,
        h4_expected,
        omega_squared,
    })
}
