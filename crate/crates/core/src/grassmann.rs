//! Grassmann algebras with a metric-parameterized Clifford star product.
//!
//! Elements are sparse maps from basis blades to scalars. A blade is a bit
//! mask over the generator slots and always denotes the ascending product of
//! its generators; reordering signs live in the coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::scalars::{Coefficient, RelationSet, Symbol};

/// Bit mask of generators; bit `i` set means generator `i` is present.
pub type Blade = u32;

pub fn grade_of(b: Blade) -> usize {
    b.count_ones() as usize
}

/// Sign of reordering the ascending product `a` followed by `b` into ascending
/// order, or `None` if they share a generator.
pub fn wedge_sign(a: Blade, b: Blade) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(if swaps % 2 == 0 { 1 } else { -1 })
}

/// Generator count, labels and symmetric bilinear form of one algebra.
#[derive(Debug, PartialEq)]
pub struct AlgebraSpec<S> {
    names: Vec<String>,
    form: Vec<Vec<S>>,
    diagonal: bool,
    signature: Vec<i32>,
    berezin_scale: S,
}

impl<S: Scalar> AlgebraSpec<S> {
    /// Builds a spec from generator names and a symmetric `d x d` form.
    pub fn new<N: Into<String>>(names: Vec<N>, form: Vec<Vec<S>>) -> Result<Arc<Self>> {
        Self::build(names, form, S::one())
    }

    /// Like [`new`](Self::new), with `∫dθ_i θ_i = scale` for the Berezin integral.
    pub fn with_berezin_scale<N: Into<String>>(
        names: Vec<N>,
        form: Vec<Vec<S>>,
        scale: S,
    ) -> Result<Arc<Self>> {
        Self::build(names, form, scale)
    }

    fn build<N: Into<String>>(names: Vec<N>, form: Vec<Vec<S>>, scale: S) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let d = names.len();
        if d == 0 || d > 16 || form.len() != d || form.iter().any(|row| row.len() != d) {
            return Err(Error::FormShape(d));
        }
        let mut diagonal = true;
        for i in 0..d {
            for j in 0..d {
                if form[i][j] != form[j][i] {
                    return Err(Error::AsymmetricForm(i, j));
                }
                if i != j && !form[i][j].is_zero() {
                    diagonal = false;
                }
            }
        }
        let signature = (0..d)
            .map(|i| if form[i][i].is_negative_constant() { -1 } else { 1 })
            .collect();
        Ok(Arc::new(Self {
            names,
            form,
            diagonal,
            signature,
            berezin_scale: scale,
        }))
    }

    /// Diagonal form with the given entries.
    pub fn diagonal<N: Into<String>>(names: Vec<N>, diag: Vec<S>) -> Result<Arc<Self>> {
        let d = diag.len();
        let form = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { diag[i].clone() } else { S::zero() })
                    .collect()
            })
            .collect();
        Self::new(names, form)
    }

    /// Euclidean space with generators `sigma1..sigmad`.
    pub fn euclidean(d: usize) -> Arc<Self> {
        let names = (1..=d).map(|i| format!("sigma{i}")).collect();
        Self::diagonal(names, vec![S::one(); d]).expect("euclidean form")
    }

    /// Minkowski space `gamma0..gamma3` with signature `(+,-,-,-)`.
    pub fn spacetime() -> Arc<Self> {
        let names = (0..4).map(|i| format!("gamma{i}")).collect();
        let mut diag = vec![-S::one(); 4];
        diag[0] = S::one();
        Self::diagonal(names, diag).expect("minkowski form")
    }

    /// Euclidean phase space with generators `eta1..etad, rho1..rhod`.
    pub fn phase_space(d: usize) -> Arc<Self> {
        let names: Vec<String> = (1..=d)
            .map(|i| format!("eta{i}"))
            .chain((1..=d).map(|i| format!("rho{i}")))
            .collect();
        Self::diagonal(names, vec![S::one(); 2 * d]).expect("phase-space form")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn form(&self, i: usize, j: usize) -> &S {
        &self.form[i][j]
    }

    pub fn is_diagonal(&self) -> bool {
        self.diagonal
    }

    /// Sign of each diagonal entry, used to raise indices in the Hodge dual.
    pub fn signature(&self) -> &[i32] {
        &self.signature
    }

    pub fn berezin_scale(&self) -> &S {
        &self.berezin_scale
    }

    pub fn pseudoscalar_blade(&self) -> Blade {
        ((1u64 << self.dim()) - 1) as Blade
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// All `(blade, weight)` terms of `e_a ⋆ e_b`.
    pub fn blade_product(&self, a: Blade, b: Blade) -> Vec<(Blade, S)> {
        let mut out = Vec::new();
        self.contract(a, b, 0, S::one(), &mut out);
        out
    }

    // Enumerates sets of contractions (m, n) with m drawn in ascending order
    // from the left blade and distinct n from the right blade.
    fn contract(&self, a: Blade, b: Blade, from: u32, weight: S, out: &mut Vec<(Blade, S)>) {
        if let Some(sign) = wedge_sign(a, b) {
            let w = if sign < 0 { -weight.clone() } else { weight.clone() };
            out.push((a | b, w));
        }
        if b == 0 {
            return;
        }
        let d = self.dim() as u32;
        for m in from..d {
            if a & (1 << m) == 0 {
                continue;
            }
            // right derivative on the left factor
            let sign_m = (a >> (m + 1)).count_ones();
            let a2 = a & !(1 << m);
            let candidates: Vec<u32> = if self.diagonal {
                vec![m]
            } else {
                (0..d).collect()
            };
            for n in candidates {
                if b & (1 << n) == 0 {
                    continue;
                }
                let bmn = &self.form[m as usize][n as usize];
                if bmn.is_zero() {
                    continue;
                }
                // left derivative on the right factor
                let sign_n = (b & ((1 << n) - 1)).count_ones();
                let b2 = b & !(1 << n);
                let mut w = weight.clone() * bmn.clone();
                if (sign_m + sign_n) % 2 == 1 {
                    w = -w;
                }
                self.contract(a2, b2, m + 1, w, out);
            }
        }
    }
}

impl AlgebraSpec<Coefficient> {
    /// Pseudoclassical algebra `theta1..thetad` with form `(ħ/2)δ` and
    /// `∫dθ_i θ_i = ħ`.
    pub fn theta(d: usize) -> Arc<Self> {
        let hbar = Coefficient::var(Symbol::new("hbar"));
        let half = &hbar * &Coefficient::rational(1, 2);
        let names: Vec<String> = (1..=d).map(|i| format!("theta{i}")).collect();
        let form = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { half.clone() } else { Coefficient::from_i64(0) })
                    .collect()
            })
            .collect();
        Self::with_berezin_scale(names, form, hbar).expect("theta form")
    }
}

/// Sparse element of a Grassmann algebra equipped with its star product.
#[derive(Clone)]
pub struct Multivector<S> {
    spec: Arc<AlgebraSpec<S>>,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> PartialEq for Multivector<S> {
    fn eq(&self, other: &Self) -> bool {
        same_spec(&self.spec, &other.spec) && self.terms == other.terms
    }
}

fn same_spec<S: Scalar>(a: &Arc<AlgebraSpec<S>>, b: &Arc<AlgebraSpec<S>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(spec: &Arc<AlgebraSpec<S>>) -> Self {
        Self {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(spec: &Arc<AlgebraSpec<S>>, c: S) -> Self {
        Self::blade(spec, 0, c)
    }

    pub fn one(spec: &Arc<AlgebraSpec<S>>) -> Self {
        Self::scalar(spec, S::one())
    }

    pub fn blade(spec: &Arc<AlgebraSpec<S>>, blade: Blade, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(blade, c);
        }
        Self {
            spec: spec.clone(),
            terms,
        }
    }

    /// Generator `i` (zero-based) as a grade-1 element.
    pub fn generator(spec: &Arc<AlgebraSpec<S>>, i: usize) -> Self {
        assert!(i < spec.dim(), "generator index out of range");
        Self::blade(spec, 1 << i, S::one())
    }

    /// All generators in order.
    pub fn generators(spec: &Arc<AlgebraSpec<S>>) -> Vec<Self> {
        (0..spec.dim()).map(|i| Self::generator(spec, i)).collect()
    }

    pub fn pseudoscalar(spec: &Arc<AlgebraSpec<S>>) -> Self {
        Self::blade(spec, spec.pseudoscalar_blade(), S::one())
    }

    /// `Σ c_i e_i` from a component list.
    pub fn vector(spec: &Arc<AlgebraSpec<S>>, comps: &[S]) -> Self {
        let mut out = Self::zero(spec);
        for (i, c) in comps.iter().enumerate() {
            out.add_term(1 << i, c.clone());
        }
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Blade, S)>>(spec: &Arc<AlgebraSpec<S>>, it: I) -> Self {
        let mut out = Self::zero(spec);
        for (b, c) in it {
            out.add_term(b, c);
        }
        out
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec<S>> {
        &self.spec
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn scalar_part(&self) -> S {
        self.coefficient(0)
    }

    /// The scalar value if no blade of positive grade is present.
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, blade: Blade, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&blade) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(blade, sum);
                }
            }
            None => {
                self.terms.insert(blade, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_spec(&self.spec, &other.spec) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map<F: FnMut(&S) -> S>(&self, mut f: F) -> Self {
        let mut out = Self::zero(&self.spec);
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    /// Fallible coefficient map.
    pub fn try_map<F: FnMut(&S) -> Result<S>>(&self, mut f: F) -> Result<Self> {
        let mut out = Self::zero(&self.spec);
        for (b, c) in &self.terms {
            out.add_term(*b, f(c)?);
        }
        Ok(out)
    }

    /// The Clifford star product `F exp[Σ B_mn ∂⃖_m ∂⃗_n] G`.
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.spec);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let cab = ca.clone() * cb.clone();
                for (blade, w) in self.spec.blade_product(*a, *b) {
                    out.add_term(blade, cab.clone() * w);
                }
            }
        }
        Ok(out)
    }

    /// The undeformed Grassmann (wedge) product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.spec);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(sign) = wedge_sign(*a, *b) {
                    let c = ca.clone() * cb.clone();
                    out.add_term(a | b, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Star power with non-negative exponent.
    pub fn star_pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.spec);
        for _ in 0..n {
            out = out.star(self).expect("same algebra");
        }
        out
    }

    /// Star commutator `[F, G]`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.star(other)?.try_sub(&other.star(self)?)
    }

    /// Star anticommutator `{F, G}`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.star(other)?.try_add(&other.star(self)?)
    }

    /// Grade-`n` part; errors if `n > d`.
    pub fn grade_project(&self, n: usize) -> Result<Self> {
        if n > self.spec.dim() {
            return Err(Error::GradeOutOfRange {
                grade: n,
                dim: self.spec.dim(),
            });
        }
        Ok(self.grade(n))
    }

    /// Grade-`n` part; empty for out-of-range grades.
    pub fn grade(&self, n: usize) -> Self {
        Self {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| grade_of(**b) == n)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Grades present, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| grade_of(*b)).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// The single grade of a nonzero homogeneous element.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        match self.grades().as_slice() {
            [g] => Some(*g),
            _ => None,
        }
    }

    /// Reversal of every blade without conjugating coefficients.
    pub fn reverse(&self) -> Self {
        let mut out = Self::zero(&self.spec);
        for (b, c) in &self.terms {
            let r = grade_of(*b);
            let flip = (r * r.saturating_sub(1) / 2) % 2 == 1;
            out.add_term(*b, if flip { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Antilinear anti-automorphism fixing the generators.
    pub fn involution(&self) -> Self {
        let mut out = Self::zero(&self.spec);
        for (b, c) in &self.terms {
            let r = grade_of(*b);
            let flip = (r * r.saturating_sub(1) / 2) % 2 == 1;
            let c = c.conj();
            out.add_term(*b, if flip { -c } else { c });
        }
        out
    }

    /// Hodge dual with indices raised by the signature of the form.
    pub fn hodge(&self) -> Self {
        let full = self.spec.pseudoscalar_blade();
        let mut out = Self::zero(&self.spec);
        for (b, c) in &self.terms {
            let comp = full & !b;
            let mut sign = wedge_sign(*b, comp).expect("disjoint");
            let mut rest = *b;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                sign *= self.spec.signature[i];
                rest &= rest - 1;
            }
            out.add_term(comp, if sign < 0 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Full Berezin integral: the top coefficient times the per-generator scale.
    pub fn berezin(&self) -> S {
        let top = self.coefficient(self.spec.pseudoscalar_blade());
        let mut scale = S::one();
        for _ in 0..self.spec.dim() {
            scale = scale * self.spec.berezin_scale.clone();
        }
        top * scale
    }

    /// Parity-graded sign of a homogeneous blade under `F -> (-1)^r F`.
    pub fn grade_involution(&self) -> Self {
        let mut out = Self::zero(&self.spec);
        for (b, c) in &self.terms {
            out.add_term(*b, if grade_of(*b) % 2 == 1 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Expresses every coefficient in another ring.
    pub fn convert<T: Scalar, F: FnMut(&S) -> T>(&self, spec: &Arc<AlgebraSpec<T>>, mut f: F) -> Multivector<T> {
        let mut out = Multivector::zero(spec);
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    /// Ascending generator indices of a blade.
    pub fn blade_indices(blade: Blade) -> Vec<usize> {
        (0..32).filter(|i| blade & (1 << i) != 0).collect()
    }

    /// Human-readable blade label such as `theta2 theta3`.
    pub fn blade_name(&self, blade: Blade) -> String {
        if blade == 0 {
            return "1".to_string();
        }
        Self::blade_indices(blade)
            .into_iter()
            .map(|i| self.spec.names[i].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Terms sorted by grade, then lexicographically by index list.
    pub fn sorted_terms(&self) -> Vec<(Blade, &S)> {
        let mut v: Vec<(Blade, &S)> = self.terms.iter().map(|(b, c)| (*b, c)).collect();
        v.sort_by_key(|(b, _)| (grade_of(*b), Self::blade_indices(*b)));
        v
    }
}

impl<S: Field> Multivector<S> {
    /// `Tr F = 2^{⌊d/2⌋} / scale^d · ∫ ⋆F`, which equals `2^{⌊d/2⌋} ⟨F⟩₀`.
    pub fn trace(&self) -> S {
        let d = self.spec.dim();
        let mut scale = S::one();
        for _ in 0..d {
            scale = scale * self.spec.berezin_scale.clone();
        }
        let pref = S::from_i64(1i64 << (d / 2)) / scale;
        pref * self.hodge().berezin()
    }
}

impl Multivector<Coefficient> {
    /// Reduces every coefficient modulo `rels`.
    pub fn reduce(&self, rels: &RelationSet) -> Self {
        self.map(|c| c.reduce(rels))
    }

    /// Simultaneous symbol substitution in every coefficient.
    pub fn substitute(&self, bindings: &HashMap<Symbol, Coefficient>) -> Result<Self> {
        self.try_map(|c| c.substitute(bindings))
    }

    /// Partial derivative of every coefficient.
    pub fn derivative(&self, s: Symbol) -> Self {
        self.map(|c| c.derivative(s))
    }

    /// Coefficient of `s^order` in every coefficient.
    pub fn series_coefficient(&self, s: Symbol, order: u32) -> Result<Self> {
        self.try_map(|c| c.series_coefficient(s, order))
    }

    /// Numeric value of every coefficient; `None` if any is unbound or complex.
    pub fn eval_f64(&self, values: &HashMap<Symbol, f64>) -> Option<Multivector<f64>> {
        let spec = AlgebraSpec::<f64>::new(
            self.spec.names.clone(),
            (0..self.spec.dim())
                .map(|i| {
                    (0..self.spec.dim())
                        .map(|j| self.spec.form[i][j].eval_f64(values))
                        .collect::<Option<Vec<f64>>>()
                })
                .collect::<Option<Vec<Vec<f64>>>>()?,
        )
        .ok()?;
        let mut out = Multivector::zero(&spec);
        for (b, c) in &self.terms {
            out.add_term(*b, c.eval_f64(values)?);
        }
        Some(out)
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    /// Panics if the operands belong to different algebras.
    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        self.try_add(rhs).expect("algebra mismatch")
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    /// Panics if the operands belong to different algebras.
    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        self.try_sub(rhs).expect("algebra mismatch")
    }
}

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;
    /// Star product; panics if the operands belong to different algebras.
    fn mul(self, rhs: &Multivector<S>) -> Multivector<S> {
        self.star(rhs).expect("algebra mismatch")
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        self.map(|c| -c.clone())
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Multivector<S>) -> Multivector<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Multivector<S>) -> Multivector<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Multivector<S>) -> Multivector<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        -&self
    }
}

fn needs_parens(s: &str) -> bool {
    s.chars().skip(1).any(|ch| ch == '+' || ch == '-' || ch == '/')
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let one = S::one();
        let minus_one = -S::one();
        for (k, (b, c)) in self.sorted_terms().into_iter().enumerate() {
            let body = if b == 0 {
                let s = c.to_string();
                if needs_parens(&s) && k > 0 {
                    format!("({s})")
                } else {
                    s
                }
            } else if *c == one {
                self.blade_name(b)
            } else if *c == minus_one {
                format!("-{}", self.blade_name(b))
            } else {
                let s = c.to_string();
                if needs_parens(&s) {
                    format!("({s}) {}", self.blade_name(b))
                } else {
                    format!("{s} {}", self.blade_name(b))
                }
            };
            if k == 0 {
                f.write_str(&body)?;
            } else if let Some(stripped) = body.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Coefficient as C;
    use num_traits::{One, Zero};

    fn hbar() -> C {
        C::symbol("hbar")
    }

    #[test]
    fn theta_anticommutators() {
        let spec = AlgebraSpec::theta(3);
        let th = Multivector::generators(&spec);
        for i in 0..3 {
            for j in 0..3 {
                let ac = th[i].anticommutator(&th[j]).unwrap();
                let expect = if i == j { hbar() } else { C::from_i64(0) };
                assert_eq!(ac, Multivector::scalar(&spec, expect));
            }
        }
    }

    #[test]
    fn e12_squares_to_minus_one() {
        let spec = AlgebraSpec::<f64>::euclidean(3);
        let e12 = Multivector::blade(&spec, 0b011, 1.0);
        assert_eq!(&e12 * &e12, Multivector::scalar(&spec, -1.0));
    }

    #[test]
    fn two_vector_product() {
        let spec = AlgebraSpec::<C>::euclidean(2);
        let a = Multivector::vector(&spec, &[C::symbol("a1"), C::symbol("a2")]);
        let b = Multivector::vector(&spec, &[C::symbol("b1"), C::symbol("b2")]);
        let ab = &a * &b;
        let s = &(&C::symbol("a1") * &C::symbol("b1")) + &(&C::symbol("a2") * &C::symbol("b2"));
        let w = &(&C::symbol("a1") * &C::symbol("b2")) - &(&C::symbol("a2") * &C::symbol("b1"));
        assert_eq!(ab, Multivector::from_terms(&spec, [(0, s), (0b11, w)]));
    }

    #[test]
    fn hodge_and_berezin_on_theta() {
        let spec = AlgebraSpec::theta(3);
        let t1 = Multivector::generator(&spec, 0);
        assert_eq!(t1.hodge(), Multivector::blade(&spec, 0b110, C::one()));
        assert_eq!(Multivector::one(&spec).hodge(), Multivector::pseudoscalar(&spec));
        assert_eq!(Multivector::pseudoscalar(&spec).hodge(), Multivector::one(&spec));
        assert_eq!(Multivector::pseudoscalar(&spec).berezin(), hbar().pow(3).unwrap());
        assert!(Multivector::one(&spec).berezin().is_zero());
        assert_eq!(Multivector::one(&spec).trace(), C::from_i64(2));
    }

    #[test]
    fn spacetime_trace_of_one() {
        let spec = AlgebraSpec::<C>::spacetime();
        assert_eq!(Multivector::one(&spec).trace(), C::from_i64(4));
    }

    #[test]
    fn non_diagonal_form_matches_change_of_basis() {
        // B = [[1,1],[1,2]] is the Gram matrix of f1 = e1, f2 = e1 + e2.
        let spec = AlgebraSpec::<f64>::new(vec!["f1", "f2"], vec![vec![1.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let f1 = Multivector::generator(&spec, 0);
        let f2 = Multivector::generator(&spec, 1);
        let ac = f1.anticommutator(&f2).unwrap();
        assert_eq!(ac, Multivector::scalar(&spec, 2.0));
        let sq = &(&f1 * &f2) * &(&f1 * &f2);
        // (e1 (e1+e2))^2 = (1 + e12)^2 = 2 e12, and f1 ∧ f2 = e12
        assert_eq!(sq, Multivector::blade(&spec, 0b11, 2.0));
    }

    #[test]
    fn asymmetric_form_rejected() {
        let err = AlgebraSpec::<f64>::new(vec!["a", "b"], vec![vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap_err();
        assert!(matches!(err, Error::AsymmetricForm(_, _)));
    }

    #[test]
    fn algebra_mismatch() {
        let a = Multivector::one(&AlgebraSpec::<f64>::euclidean(2));
        let b = Multivector::one(&AlgebraSpec::<f64>::euclidean(3));
        assert_eq!(a.star(&b).unwrap_err(), Error::AlgebraMismatch);
    }

    #[test]
    fn display_uses_names() {
        let spec = AlgebraSpec::theta(3);
        let t = &Multivector::generator(&spec, 1) * &Multivector::generator(&spec, 2);
        assert_eq!(t.to_string(), "theta2 theta3");
    }
}
