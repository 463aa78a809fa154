//! Spacetime algebra over `gamma0..gamma3` with signature `(+,-,-,-)`:
//! observer splits, boosts, Lorentz generators and Dirac projectors.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometric::{inner, Rotor};
use crate::grassmann::{AlgebraSpec, Multivector};
use crate::scalars::{Coefficient, RelationSet, Symbol};

type Mv = Multivector<Coefficient>;
type Spec = Arc<AlgebraSpec<Coefficient>>;

fn sym(name: &str) -> Coefficient {
    Coefficient::var(Symbol::new(name))
}

pub fn spacetime() -> Spec {
    AlgebraSpec::spacetime()
}

/// `γ_μ`.
pub fn gamma(spec: &Spec, mu: usize) -> Mv {
    Multivector::generator(spec, mu)
}

/// `p^μ γ_μ`.
pub fn four_vector(spec: &Spec, comps: &[Coefficient; 4]) -> Mv {
    Multivector::vector(spec, comps)
}

/// `p0 γ0 + p1 γ1 + p2 γ2 + p3 γ3` with the given symbol prefix.
pub fn symbolic_four_vector(spec: &Spec, prefix: &str) -> Mv {
    let comps: [Coefficient; 4] = std::array::from_fn(|i| sym(&format!("{prefix}{i}")));
    four_vector(spec, &comps)
}

/// `p0² = m² + p1² + p2² + p3²`, eliminating `p0²`.
pub fn on_shell_relations(prefix: &str, mass: &str) -> RelationSet {
    let spatial: Vec<Symbol> = (1..4).map(|i| Symbol::new(&format!("{prefix}{i}"))).collect();
    RelationSet::on_shell(Symbol::new(&format!("{prefix}0")), Symbol::new(mass), &spatial)
}

fn require_vector(x: &Mv) -> Result<()> {
    match x.homogeneous_grade() {
        Some(1) | None => Ok(()),
        _ => Err(Error::GradeMismatch { expected: 1 }),
    }
}

/// `x ⋆ γ₀ = t + x⃗` with `x⃗` spanned by `γ_iγ₀`.
pub fn spacetime_split(x: &Mv) -> Result<(Coefficient, Mv)> {
    require_vector(x)?;
    let xg = x.star(&gamma(x.spec(), 0))?;
    Ok((xg.scalar_part(), xg.grade(2)))
}

/// `σ_i = γ_i ⋆ γ₀`.
pub fn sigma_blades(spec: &Spec) -> [Mv; 3] {
    let g0 = gamma(spec, 0);
    std::array::from_fn(|i| &gamma(spec, i + 1) * &g0)
}

/// Observer split of a proper velocity.
#[derive(Clone, Debug, PartialEq)]
pub struct ProperVelocity {
    /// `u · γ₀ = dt/dτ`.
    pub gamma: Coefficient,
    /// `(u ∧ γ₀) / (u · γ₀)`.
    pub velocity: Mv,
    /// `γ²(1 - u⃗²) = 1` after reduction.
    pub identity_holds: bool,
}

/// Splits `u` with `u ⋆ u = 1` (checked after reduction by `rels`).
pub fn proper_velocity_split(u: &Mv, rels: &RelationSet) -> Result<ProperVelocity> {
    require_vector(u)?;
    let norm = (u * u).reduce(rels);
    if norm != Multivector::one(u.spec()) {
        return Err(Error::NotNormalized(norm.to_string()));
    }
    let (g, rel) = spacetime_split(u)?;
    let velocity = rel.try_map(|c| c.checked_div(&g))?;
    let v2 = (&velocity * &velocity).scalar_part();
    let check = (&(&g * &g) * &(&Coefficient::one() - &v2)).reduce(rels);
    Ok(ProperVelocity {
        gamma: g.reduce(rels),
        velocity: velocity.reduce(rels),
        identity_holds: check.is_one(),
    })
}

/// Boost rotor `L = e^{αγ_iγ₀/2} = ch + sh γ_iγ₀` in half-angle symbols with
/// `ch² - sh² = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Boost {
    pub direction: usize,
    pub rotor: Rotor<Coefficient>,
    pub relations: RelationSet,
    /// `cosh α = ch² + sh²`, reduced.
    pub cosh: Coefficient,
    /// `sinh α = 2 ch sh`.
    pub sinh: Coefficient,
}

/// Boost along `γ_direction` with half-angle symbols `ch`, `sh`.
pub fn boost_with(spec: &Spec, direction: usize, ch: Symbol, sh: Symbol) -> Result<Boost> {
    if !(1..=3).contains(&direction) {
        return Err(Error::IndexOutOfRange(direction));
    }
    let relations = RelationSet::hyperbolic(ch, sh);
    let (c, s) = (Coefficient::var(ch), Coefficient::var(sh));
    let gen = &gamma(spec, direction) * &gamma(spec, 0);
    let value = &Multivector::scalar(spec, c.clone()) + &gen.scale(&s);
    let rotor = Rotor::new_reduced(value, &relations)?;
    Ok(Boost {
        direction,
        rotor,
        cosh: (&(&c * &c) + &(&s * &s)).reduce(&relations),
        sinh: &(&c * &s) * &Coefficient::from(2),
        relations,
    })
}

/// Boost along `γ_direction` with symbols `ch`, `sh`.
pub fn boost(direction: usize) -> Result<Boost> {
    boost_with(&spacetime(), direction, Symbol::new("ch"), Symbol::new("sh"))
}

impl Boost {
    /// `L ⋆ x ⋆ L̄`, reduced.
    pub fn apply(&self, x: &Mv) -> Result<Mv> {
        Ok(self.rotor.sandwich(x)?.reduce(&self.relations))
    }

    /// `L γ₀ L̄ = cosh α γ₀ + sinh α γ_i`, `L γ_i L̄ = cosh α γ_i + sinh α γ₀`,
    /// other directions fixed.
    pub fn identities_hold(&self) -> Result<bool> {
        let spec = self.rotor.value().spec();
        let g0 = gamma(spec, 0);
        let gi = gamma(spec, self.direction);
        let e0 = (&g0.scale(&self.cosh) + &gi.scale(&self.sinh)).reduce(&self.relations);
        let ei = (&gi.scale(&self.cosh) + &g0.scale(&self.sinh)).reduce(&self.relations);
        if self.apply(&g0)? != e0 || self.apply(&gi)? != ei {
            return Ok(false);
        }
        for j in (1..4).filter(|&j| j != self.direction) {
            let gj = gamma(spec, j);
            if self.apply(&gj)? != gj {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `σ_μν`, `K_i = σ_{0i}/2` and `S_i = ε_ijk σ_jk / 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct LorentzGenerators {
    pub sigma: Vec<Vec<Mv>>,
    pub boosts: [Mv; 3],
    pub rotations: [Mv; 3],
}

/// `σ_μν = (I₄/2) ⋆ [γ_μ, γ_ν]`.
pub fn lorentz_generators(spec: &Spec) -> LorentzGenerators {
    let i4 = Multivector::pseudoscalar(spec);
    let half = Coefficient::rational(1, 2);
    let sigma: Vec<Vec<Mv>> = (0..4)
        .map(|m| {
            (0..4)
                .map(|n| {
                    let c = gamma(spec, m).commutator(&gamma(spec, n)).expect("same algebra");
                    (&i4 * &c).scale(&half)
                })
                .collect()
        })
        .collect();
    let boosts = std::array::from_fn(|i| sigma[0][i + 1].scale(&half));
    let rotations = std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3 + 1, (i + 2) % 3 + 1);
        sigma[j][k].scale(&half)
    });
    LorentzGenerators { sigma, boosts, rotations }
}

/// `ε_ijk` for indices `0..3`.
fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// One bracket relation and whether it held.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketCheck {
    pub family: &'static str,
    pub i: usize,
    pub j: usize,
    pub holds: bool,
}

impl LorentzGenerators {
    /// `[S_i,S_j] = I₄ ε S_k`, `[S_i,K_j] = I₄ ε K_k`, `[K_i,K_j] = -I₄ ε S_k`
    /// for all nine index pairs of each family.
    pub fn bracket_checks(&self) -> Vec<BracketCheck> {
        let spec = self.rotations[0].spec();
        let i4 = Multivector::pseudoscalar(spec);
        let mut out = Vec::new();
        let fams: [(&'static str, &[Mv; 3], &[Mv; 3], &[Mv; 3], i64); 3] = [
            ("[S,S]", &self.rotations, &self.rotations, &self.rotations, 1),
            ("[S,K]", &self.rotations, &self.boosts, &self.boosts, 1),
            ("[K,K]", &self.boosts, &self.boosts, &self.rotations, -1),
        ];
        for (family, a, b, c, sign) in fams {
            for i in 0..3 {
                for j in 0..3 {
                    let lhs = a[i].commutator(&b[j]).expect("same algebra");
                    let mut rhs = Multivector::zero(spec);
                    for (k, ck) in c.iter().enumerate() {
                        let e = levi_civita(i, j, k) * sign;
                        if e != 0 {
                            rhs = &rhs + &(&i4 * ck).scale(&Coefficient::from(e));
                        }
                    }
                    out.push(BracketCheck { family, i, j, holds: lhs == rhs });
                }
            }
        }
        out
    }

    /// `Σ_{μν} I₄ ⋆ σ_μν ω^{μν} / 4` for an antisymmetric parameter matrix.
    pub fn exponent(&self, omega: &[[Coefficient; 4]; 4]) -> Mv {
        let spec = self.rotations[0].spec();
        let i4 = Multivector::pseudoscalar(spec);
        let quarter = Coefficient::rational(1, 4);
        let mut out = Multivector::zero(spec);
        for (m, row) in omega.iter().enumerate() {
            for (n, w) in row.iter().enumerate() {
                if !w.is_zero() {
                    out = &out + &(&i4 * &self.sigma[m][n]).scale(&(w * &quarter));
                }
            }
        }
        out
    }
}

/// `π_{±m} = (±p + m)/2m`.
pub fn dirac_projector(p: &Mv, positive: bool, mass: &Coefficient) -> Result<Mv> {
    require_vector(p)?;
    let sign = if positive { Coefficient::one() } else { -&Coefficient::one() };
    let num = &p.scale(&sign) + &Multivector::scalar(p.spec(), mass.clone());
    let two_m = mass * &Coefficient::from(2);
    num.try_map(|c| c.checked_div(&two_m))
}

/// `γ₅ = i I₄`.
pub fn gamma5(spec: &Spec) -> Mv {
    Multivector::pseudoscalar(spec).scale(&Coefficient::i())
}

/// `S_s = (ħ/2) γ₅ ⋆ s`.
pub fn spin_operator(s: &Mv) -> Mv {
    let half_h = &sym("hbar") * &Coefficient::rational(1, 2);
    (&gamma5(s.spec()) * s).scale(&half_h)
}

/// `π_{±s} = 1/2 ± S_s/ħ`, requiring `s ⋆ s = -1` and `s · p = 0` after
/// reduction by `rels`.
pub fn spin_projector(s: &Mv, positive: bool, p: &Mv, rels: &RelationSet) -> Result<Mv> {
    require_vector(s)?;
    require_vector(p)?;
    let s2 = (s * s).reduce(rels);
    if s2 != Multivector::scalar(s.spec(), Coefficient::from(-1)) {
        return Err(Error::InvalidSpinVector(format!("s*s = {s2}")));
    }
    let sp = inner(s, p)?.reduce(rels);
    if !sp.is_zero() {
        return Err(Error::InvalidSpinVector(format!("s.p = {sp}")));
    }
    let half = Coefficient::rational(1, 2);
    let sign = if positive { half.clone() } else { -&half };
    let unit = &gamma5(s.spec()) * s;
    Ok(&Multivector::scalar(s.spec(), half) + &unit.scale(&sign))
}
