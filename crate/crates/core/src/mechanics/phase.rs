//! Hamiltonian mechanics in the geometric algebra of phase space.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometric::inner;
use crate::grassmann::{AlgebraSpec, Multivector};
use crate::scalars::{Coefficient, Symbol};

type Mv = Multivector<Coefficient>;

/// Phase space spanned by `η₁..η_d` (positions) and `ρ₁..ρ_d` (momenta),
/// with coordinate symbols for each direction.
#[derive(Clone, Debug)]
pub struct PhaseSpace {
    spec: Arc<AlgebraSpec<Coefficient>>,
    q: Vec<Symbol>,
    p: Vec<Symbol>,
}

impl PhaseSpace {
    /// Coordinates `q1..qd`, `p1..pd`.
    pub fn new(d: usize) -> Self {
        let q = (1..=d).map(|i| Symbol::new(&format!("q{i}"))).collect();
        let p = (1..=d).map(|i| Symbol::new(&format!("p{i}"))).collect();
        Self::with_coordinates(q, p)
    }

    /// Explicit coordinate symbols; both lists must have the same length.
    pub fn with_coordinates(q: Vec<Symbol>, p: Vec<Symbol>) -> Self {
        assert_eq!(q.len(), p.len(), "one momentum per position");
        Self {
            spec: AlgebraSpec::phase_space(q.len()),
            q,
            p,
        }
    }

    pub fn dim(&self) -> usize {
        self.q.len()
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec<Coefficient>> {
        &self.spec
    }

    pub fn positions(&self) -> &[Symbol] {
        &self.q
    }

    pub fn momenta(&self) -> &[Symbol] {
        &self.p
    }

    pub fn eta(&self, n: usize) -> Mv {
        Multivector::generator(&self.spec, n)
    }

    pub fn rho(&self, n: usize) -> Mv {
        Multivector::generator(&self.spec, self.dim() + n)
    }

    /// `j = Σ η_n ρ_n`.
    pub fn symplectic_bivector(&self) -> Mv {
        let mut j = Multivector::zero(&self.spec);
        for n in 0..self.dim() {
            j = &j + &(&self.eta(n) * &self.rho(n));
        }
        j
    }

    /// `∇_x f = Σ η_n ∂f/∂q_n + ρ_n ∂f/∂p_n`.
    pub fn gradient(&self, f: &Coefficient) -> Mv {
        let mut out = Multivector::zero(&self.spec);
        for n in 0..self.dim() {
            out.add_term(1 << n, f.derivative(self.q[n]));
            out.add_term(1 << (self.dim() + n), f.derivative(self.p[n]));
        }
        out
    }

    /// `ẋ = j · ∇_x H`.
    pub fn hamilton_field(&self, h: &Coefficient) -> Mv {
        inner(&self.symplectic_bivector(), &self.gradient(h)).expect("same algebra")
    }

    /// `f (∇⃖_x · j·∇⃗_x) g`, the Poisson bracket `{f, g}`.
    pub fn poisson(&self, f: &Coefficient, g: &Coefficient) -> Coefficient {
        inner(&self.gradient(f), &self.hamilton_field(g))
            .expect("same algebra")
            .scalar_part()
    }

    /// Direct component formula `Σ ∂f/∂q ∂g/∂p - ∂f/∂p ∂g/∂q`.
    pub fn poisson_direct(&self, f: &Coefficient, g: &Coefficient) -> Coefficient {
        let mut acc = Coefficient::from(0);
        for n in 0..self.dim() {
            let (q, p) = (self.q[n], self.p[n]);
            acc = &acc + &(&(&f.derivative(q) * &g.derivative(p)) - &(&f.derivative(p) * &g.derivative(q)));
        }
        acc
    }

    /// Numeric flow of `ẋ = j·∇H` by fixed-step RK4, with every symbol other
    /// than the coordinates bound in `params`. Returns the largest relative
    /// deviation of `H` from its initial value.
    pub fn flow_energy_drift(
        &self,
        h: &Coefficient,
        params: &HashMap<Symbol, f64>,
        start: &[f64],
        dt: f64,
        steps: usize,
    ) -> Result<f64> {
        let d = self.dim();
        if start.len() != 2 * d {
            return Err(Error::FormShape(start.len()));
        }
        let field = self.hamilton_field(h);
        let comps: Vec<Coefficient> = (0..2 * d).map(|k| field.coefficient(1 << k)).collect();
        let coords: Vec<Symbol> = self.q.iter().chain(self.p.iter()).copied().collect();
        let eval = |c: &Coefficient, x: &[f64]| -> Result<f64> {
            let mut vals = params.clone();
            vals.extend(coords.iter().copied().zip(x.iter().copied()));
            c.eval_f64(&vals).ok_or(Error::NotPolynomial)
        };
        let rate = |x: &[f64]| -> Result<Vec<f64>> { comps.iter().map(|c| eval(c, x)).collect() };
        let mut x = start.to_vec();
        let h0 = eval(h, &x)?;
        let scale = h0.abs().max(f64::MIN_POSITIVE);
        let mut worst = 0.0f64;
        for _ in 0..steps {
            let k1 = rate(&x)?;
            let x2: Vec<f64> = x.iter().zip(&k1).map(|(a, k)| a + 0.5 * dt * k).collect();
            let k2 = rate(&x2)?;
            let x3: Vec<f64> = x.iter().zip(&k2).map(|(a, k)| a + 0.5 * dt * k).collect();
            let k3 = rate(&x3)?;
            let x4: Vec<f64> = x.iter().zip(&k3).map(|(a, k)| a + dt * k).collect();
            let k4 = rate(&x4)?;
            for i in 0..x.len() {
                x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            }
            worst = worst.max((eval(h, &x)? - h0).abs() / scale);
        }
        Ok(worst)
    }
}

/// `j = Σ η_n ρ_n` on the `2d`-dimensional phase space.
pub fn symplectic_bivector(d: usize) -> Mv {
    PhaseSpace::new(d).symplectic_bivector()
}

/// `j · ∇_x H` over coordinates `q1..qd, p1..pd`.
pub fn hamilton_field(d: usize, h: &Coefficient) -> Mv {
    PhaseSpace::new(d).hamilton_field(h)
}

/// Poisson bracket through the phase-space gradient and `j`.
pub fn poisson_ga(d: usize, f: &Coefficient, g: &Coefficient) -> Coefficient {
    PhaseSpace::new(d).poisson(f, g)
}

/// Orbit `q = a ⋆ (c + i s)` of the isotropic oscillator in the plane of the
/// unit bivector `i`, split into its vector part and the trivector part
/// `s · a∧i`. A vector solution requires the trivector part to vanish, so
/// `a` must lie in the plane.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneOrbit {
    pub orbit: Mv,
    pub vector_part: Mv,
    pub out_of_plane: Mv,
}

pub fn oscillator_orbit(amplitude: &Mv, plane: &Mv, c: &Coefficient, s: &Coefficient) -> Result<PlaneOrbit> {
    if amplitude.homogeneous_grade().is_some_and(|g| g != 1) {
        return Err(Error::GradeMismatch { expected: 1 });
    }
    if plane.homogeneous_grade().is_some_and(|g| g != 2) {
        return Err(Error::GradeMismatch { expected: 2 });
    }
    let phase = &Multivector::scalar(amplitude.spec(), c.clone()) + &plane.scale(s);
    let orbit = amplitude.star(&phase)?;
    Ok(PlaneOrbit {
        vector_part: orbit.grade(1),
        out_of_plane: orbit.grade(3),
        orbit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn sym(n: &str) -> Coefficient {
        Coefficient::symbol(n)
    }

    #[test]
    fn symplectic_contractions() {
        let ps = PhaseSpace::new(2);
        let j = ps.symplectic_bivector();
        assert_eq!(inner(&ps.eta(0), &j).unwrap(), ps.rho(0));
        assert_eq!(inner(&j, &ps.rho(1)).unwrap(), ps.eta(1));
        assert_eq!((&j * &j).scalar_part(), Coefficient::from(-2));
        assert_eq!((&symplectic_bivector(1) * &symplectic_bivector(1)).scalar_part(), Coefficient::from(-1));
    }

    #[test]
    fn oscillator_field() {
        let ps = PhaseSpace::new(1);
        let (q, p, m, w) = (sym("q1"), sym("p1"), sym("m"), sym("omega"));
        let h = &(&p * &p).checked_div(&(&m * &Coefficient::from(2))).unwrap()
            + &(&(&(&m * &w) * &(&w * &q)) * &(&q * &Coefficient::rational(1, 2)));
        let field = ps.hamilton_field(&h);
        let expect = &ps.eta(0).scale(&p.checked_div(&m).unwrap()) - &ps.rho(0).scale(&(&(&m * &w) * &(&w * &q)));
        assert_eq!(field, expect);
        assert!(ps.hamilton_field(&Coefficient::from(7)).is_zero());
    }

    #[test]
    fn brackets() {
        let ps = PhaseSpace::new(2);
        assert_eq!(poisson_ga(1, &sym("q1"), &sym("p1")), Coefficient::from(1));
        let f = &(&sym("q1") * &sym("q2")) * &sym("p1");
        let g = &(&sym("p2") * &sym("p2")) + &(&sym("q1") * &sym("p1"));
        assert_eq!(ps.poisson(&f, &g), ps.poisson_direct(&f, &g));
        assert!(ps.poisson(&f, &f).is_zero());
        // ẋ·∇f = {f, H}
        let xdot = ps.hamilton_field(&g);
        assert_eq!(inner(&xdot, &ps.gradient(&f)).unwrap().scalar_part(), ps.poisson_direct(&f, &g));
    }

    #[test]
    fn plane_condition() {
        let spec = AlgebraSpec::<Coefficient>::euclidean(3);
        let a = Multivector::vector(&spec, &[sym("a1"), sym("a2"), sym("a3")]);
        let i12 = Multivector::blade(&spec, 0b011, Coefficient::from(1));
        let o = oscillator_orbit(&a, &i12, &sym("c"), &sym("s")).unwrap();
        assert_eq!(o.out_of_plane, Multivector::blade(&spec, 0b111, &sym("s") * &sym("a3")));
        let flat = Multivector::vector(&spec, &[sym("a1"), sym("a2"), Coefficient::zero()]);
        let o = oscillator_orbit(&flat, &i12, &sym("c"), &sym("s")).unwrap();
        assert!(o.out_of_plane.is_zero());
        assert_eq!(o.orbit.homogeneous_grade(), Some(1));
    }
}
