//! Bidifferential star products on polynomial phase-space functions.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{Coefficient, GaussianRational, Poly, RelationSet, Symbol};

/// `f ⋆ g = f exp[κ Σ_j (∂⃖_{x_j} ∂⃗_{y_j} - ∂⃖_{y_j} ∂⃗_{x_j})] g`.
///
/// The Moyal product has `κ = iħ/2` over pairs `(q_j, p_j)`; the holomorphic
/// product has `κ = ħ/2` over pairs `(a_j, ā_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct StarProduct {
    pairs: Vec<(Symbol, Symbol)>,
    kappa: Coefficient,
}

fn hbar() -> Coefficient {
    Coefficient::var(Symbol::new("hbar"))
}

impl StarProduct {
    pub fn new(pairs: Vec<(Symbol, Symbol)>, kappa: Coefficient) -> Self {
        Self { pairs, kappa }
    }

    /// Moyal product over the given `(q, p)` pairs.
    pub fn moyal(pairs: Vec<(Symbol, Symbol)>) -> Self {
        let kappa = &(&Coefficient::i() * &hbar()) * &Coefficient::rational(1, 2);
        Self::new(pairs, kappa)
    }

    /// Moyal product in one dimension over `(q, p)`.
    pub fn moyal_1d() -> Self {
        Self::moyal(vec![(Symbol::new("q"), Symbol::new("p"))])
    }

    /// Moyal product over `(q1, p1) … (qd, pd)`.
    pub fn moyal_nd(d: usize) -> Self {
        Self::moyal(
            (1..=d)
                .map(|i| (Symbol::new(&format!("q{i}")), Symbol::new(&format!("p{i}"))))
                .collect(),
        )
    }

    /// Moyal product over every standard pair `(q,p), (q1,p1) … (q4,p4)`.
    pub fn moyal_standard() -> Self {
        let mut pairs = vec![(Symbol::new("q"), Symbol::new("p"))];
        pairs.extend(
            (1..=4).map(|i| (Symbol::new(&format!("q{i}")), Symbol::new(&format!("p{i}")))),
        );
        Self::moyal(pairs)
    }

    /// Holomorphic product over `(a, ā)` pairs, `κ = ħ/2`.
    pub fn holomorphic(pairs: Vec<(Symbol, Symbol)>) -> Self {
        Self::new(pairs, &hbar() * &Coefficient::rational(1, 2))
    }

    pub fn pairs(&self) -> &[(Symbol, Symbol)] {
        &self.pairs
    }

    pub fn kappa(&self) -> &Coefficient {
        &self.kappa
    }

    fn variables(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.pairs.iter().flat_map(|&(x, y)| [x, y])
    }

    fn check(&self, f: &Coefficient) -> Result<()> {
        if self.variables().any(|v| f.denominator().contains(v)) {
            Err(Error::NotPolynomial)
        } else {
            Ok(())
        }
    }

    /// The star product of two functions polynomial in the pair variables.
    pub fn star(&self, f: &Coefficient, g: &Coefficient) -> Result<Coefficient> {
        self.check(f)?;
        self.check(g)?;
        if f.is_zero() || g.is_zero() {
            return Ok(Coefficient::zero());
        }
        let active: Vec<(Symbol, Symbol)> = self
            .pairs
            .iter()
            .copied()
            .filter(|&(x, y)| (f.contains(x) || f.contains(y)) && (g.contains(x) || g.contains(y)))
            .collect();
        let mut acc = Coefficient::zero();
        self.expand(&active, 0, f.clone(), g.clone(), Coefficient::one(), &mut acc);
        Ok(acc)
    }

    // Multi-index expansion: for pair j, `a` factors of ∂⃖x∂⃗y and `b` of
    // -∂⃖y∂⃗x contribute κ^{a+b} (-1)^b / (a! b!).
    fn expand(
        &self,
        active: &[(Symbol, Symbol)],
        j: usize,
        f: Coefficient,
        g: Coefficient,
        weight: Coefficient,
        acc: &mut Coefficient,
    ) {
        if j == active.len() {
            *acc = &*acc + &(&weight * &(&f * &g));
            return;
        }
        let (x, y) = active[j];
        let mut fa = f;
        let mut ga = g;
        let mut wa = weight;
        let mut a = 0i64;
        while !fa.is_zero() && !ga.is_zero() {
            let mut fab = fa.clone();
            let mut gab = ga.clone();
            let mut wab = wa.clone();
            let mut b = 0i64;
            while !fab.is_zero() && !gab.is_zero() {
                self.expand(active, j + 1, fab.clone(), gab.clone(), wab.clone(), acc);
                b += 1;
                fab = fab.derivative(y);
                gab = gab.derivative(x);
                wab = &(&wab * &self.kappa) * &Coefficient::rational(-1, b);
            }
            a += 1;
            fa = fa.derivative(x);
            ga = ga.derivative(y);
            wa = &(&wa * &self.kappa) * &Coefficient::rational(1, a);
        }
    }

    /// `[f, g] = f⋆g - g⋆f`.
    pub fn commutator(&self, f: &Coefficient, g: &Coefficient) -> Result<Coefficient> {
        Ok(&self.star(f, g)? - &self.star(g, f)?)
    }

    /// `f⋆f⋆…⋆f` (`n` factors; `n = 0` gives one).
    pub fn power(&self, f: &Coefficient, n: u32) -> Result<Coefficient> {
        let mut out = Coefficient::one();
        for _ in 0..n {
            out = self.star(&out, f)?;
        }
        Ok(out)
    }

    /// Classical bracket `Σ_j ∂_x f ∂_y g - ∂_y f ∂_x g`.
    pub fn poisson_bracket(&self, f: &Coefficient, g: &Coefficient) -> Coefficient {
        let mut acc = Coefficient::zero();
        for &(x, y) in &self.pairs {
            acc = &acc + &(&(&f.derivative(x) * &g.derivative(y)) - &(&f.derivative(y) * &g.derivative(x)));
        }
        acc
    }
}

/// `ħ⁰` part of `(1/iħ)[f, g]` under the Moyal product.
pub fn correspondence_order(star: &StarProduct, f: &Coefficient, g: &Coefficient) -> Result<Coefficient> {
    let comm = star.commutator(f, g)?;
    let ih = &Coefficient::i() * &hbar();
    comm.checked_div(&ih)?.series_coefficient(Symbol::new("hbar"), 0)
}

/// Moyal product over `(q, p)`.
pub fn moyal_star(f: &Coefficient, g: &Coefficient) -> Result<Coefficient> {
    StarProduct::moyal_standard().star(f, g)
}

/// Holomorphic coordinates `a = (λx + i y/λ)/√2`, `ā = (λx - i y/λ)/√2`.
///
/// `√2` is carried exactly by the symbol `sqrt_half` with the returned
/// relation `sqrt_half² = 1/2`; `λ` is an arbitrary nonzero scale.
pub fn holomorphic_pair(
    x: Symbol,
    y: Symbol,
    scale: &Coefficient,
) -> Result<(Coefficient, Coefficient, RelationSet)> {
    let r = Symbol::new("sqrt_half");
    let rule = &Poly::var(r).pow(2) - &Poly::constant(GaussianRational::from_ratio(1, 2));
    let rels = RelationSet::new().with_rule(crate::scalars::Relation::eliminate(&rule, r)?)?;
    let lx = scale * &Coefficient::var(x);
    let iy = (&Coefficient::i() * &Coefficient::var(y)).checked_div(scale)?;
    let half = Coefficient::var(r);
    let a = &half * &(&lx + &iy);
    let abar = &half * &(&lx - &iy);
    Ok((a, abar, rels))
}
