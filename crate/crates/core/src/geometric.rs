//! Geometric-algebra operations on top of the Clifford star product.
//!
//! The inner product follows the contraction convention: any inner product
//! with a scalar part is zero. The outer product with a scalar is ordinary
//! scalar multiplication.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grassmann::{grade_of, wedge_sign, AlgebraSpec, Multivector};
use crate::scalar::{Field, Scalar};
use crate::scalars::{Coefficient, RelationSet, Symbol};

fn homogeneous_parts<S: Scalar>(a: &Multivector<S>) -> Vec<(usize, Multivector<S>)> {
    a.grades().into_iter().map(|g| (g, a.grade(g))).collect()
}

/// Inner and outer products, distributed over homogeneous parts:
/// `A_r·B_s = ⟨A_r⋆B_s⟩_{|r-s|}` and `A_r∧B_s = ⟨A_r⋆B_s⟩_{r+s}`.
pub fn graded_products<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> Result<(Multivector<S>, Multivector<S>)> {
    let mut inner = Multivector::zero(a.spec());
    let mut outer = Multivector::zero(a.spec());
    for (r, ar) in homogeneous_parts(a) {
        for (s, bs) in homogeneous_parts(b) {
            let p = ar.star(&bs)?;
            if r > 0 && s > 0 {
                inner = &inner + &p.grade(r.abs_diff(s));
            }
            outer = &outer + &p.grade(r + s);
        }
    }
    Ok((inner, outer))
}

pub fn inner<S: Scalar>(a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>> {
    Ok(graded_products(a, b)?.0)
}

pub fn outer<S: Scalar>(a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>> {
    Ok(graded_products(a, b)?.1)
}

/// `I_d ⋆ A`.
pub fn dual<S: Scalar>(a: &Multivector<S>) -> Multivector<S> {
    &Multivector::pseudoscalar(a.spec()) * a
}

/// Star inverse of a versor or invertible blade: `rev(A) / (A ⋆ rev(A))`.
pub fn inverse<S: Field>(a: &Multivector<S>) -> Result<Multivector<S>> {
    let rev = a.reverse();
    let norm = (a * &rev).as_scalar().ok_or(Error::NotInvertible)?;
    if norm.is_zero() {
        return Err(Error::NotInvertible);
    }
    let inv = S::one() / norm;
    Ok(rev.scale(&inv))
}

/// Reciprocal frame `e^j = (-1)^{j-1} e_1…ě_j…e_d ⋆ I_d^{-1}` with `e_i·e^j = δ_i^j`.
pub fn dual_basis<S: Field>(spec: &Arc<AlgebraSpec<S>>) -> Result<Vec<Multivector<S>>> {
    let d = spec.dim();
    let ps = Multivector::pseudoscalar(spec);
    let ps_inv = inverse(&ps)?;
    let full = spec.pseudoscalar_blade();
    (0..d)
        .map(|j| {
            let blade = full & !(1 << j);
            let sign = if j % 2 == 0 { S::one() } else { -S::one() };
            Ok(&Multivector::blade(spec, blade, sign) * &ps_inv)
        })
        .collect()
}

fn require_grade<S: Scalar>(x: &Multivector<S>, g: usize) -> Result<()> {
    if x.is_zero() || x.homogeneous_grade() == Some(g) {
        Ok(())
    } else {
        Err(Error::GradeMismatch { expected: g })
    }
}

fn require_unit<S: Scalar>(u: &Multivector<S>) -> Result<()> {
    require_grade(u, 1)?;
    let sq = u * u;
    if sq == Multivector::one(u.spec()) {
        Ok(())
    } else {
        Err(Error::NonUnitVector(sq.to_string()))
    }
}

/// Reflection `-u ⋆ x ⋆ u` in the hyperplane with unit normal `u`.
pub fn reflect<S: Scalar>(x: &Multivector<S>, u: &Multivector<S>) -> Result<Multivector<S>> {
    require_grade(x, 1)?;
    require_unit(u)?;
    Ok(-&(&(u * x) * u))
}

/// Even element `U` with `U ⋆ Ū = 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct Rotor<S: Scalar> {
    value: Multivector<S>,
}

impl<S: Scalar> Rotor<S> {
    /// Checks that `u` is even and `u ⋆ ū = 1` exactly.
    pub fn new(u: Multivector<S>) -> Result<Self> {
        if u.grades().iter().any(|g| g % 2 == 1) {
            return Err(Error::NotARotor(u.to_string()));
        }
        let n = &u * &u.involution();
        if n != Multivector::one(u.spec()) {
            return Err(Error::NotARotor(n.to_string()));
        }
        Ok(Self { value: u })
    }

    pub(crate) fn unchecked(value: Multivector<S>) -> Self {
        Self { value }
    }

    pub fn identity(spec: &Arc<AlgebraSpec<S>>) -> Self {
        Self::unchecked(Multivector::one(spec))
    }

    pub fn value(&self) -> &Multivector<S> {
        &self.value
    }

    pub fn into_inner(self) -> Multivector<S> {
        self.value
    }

    /// `U ⋆ x ⋆ Ū`.
    pub fn sandwich(&self, x: &Multivector<S>) -> Result<Multivector<S>> {
        self.value.star(x)?.star(&self.value.involution())
    }

    /// Composition `self ⋆ other`.
    pub fn then(&self, other: &Self) -> Result<Self> {
        Ok(Self::unchecked(self.value.star(&other.value)?))
    }
}

impl Rotor<Coefficient> {
    /// Like [`Rotor::new`], comparing `u ⋆ ū` with one after reduction.
    pub fn new_reduced(u: Multivector<Coefficient>, rels: &RelationSet) -> Result<Self> {
        if u.grades().iter().any(|g| g % 2 == 1) {
            return Err(Error::NotARotor(u.to_string()));
        }
        let n = (&u * &u.involution()).reduce(rels);
        if n != Multivector::one(u.spec()) {
            return Err(Error::NotARotor(n.to_string()));
        }
        Ok(Self { value: u })
    }
}

/// `U = v ⋆ u` for unit vectors `u, v`; sandwiching by `U` reflects in `u`, then `v`.
pub fn rotor_from<S: Scalar>(v: &Multivector<S>, u: &Multivector<S>) -> Result<Rotor<S>> {
    require_unit(u)?;
    require_unit(v)?;
    Ok(Rotor::unchecked(v.star(u)?))
}

/// `U ⋆ x ⋆ Ū`.
pub fn sandwich<S: Scalar>(u: &Rotor<S>, x: &Multivector<S>) -> Result<Multivector<S>> {
    u.sandwich(x)
}

/// Matrix `R` with `U ⋆ e_i ⋆ Ū = Σ_j R_ij e_j`, reduced by `rels`.
pub fn rotation_matrix(u: &Rotor<Coefficient>, rels: &RelationSet) -> Result<Vec<Vec<Coefficient>>> {
    let spec = u.value().spec();
    let d = spec.dim();
    (0..d)
        .map(|i| {
            let image = u.sandwich(&Multivector::generator(spec, i))?.reduce(rels);
            if image.homogeneous_grade().is_some_and(|g| g != 1) {
                return Err(Error::GradeMismatch { expected: 1 });
            }
            Ok((0..d).map(|j| image.coefficient(1 << j)).collect())
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row, reduced.
pub fn determinant(m: &[Vec<Coefficient>], rels: &RelationSet) -> Coefficient {
    let n = m.len();
    if n == 0 {
        return Coefficient::from(1);
    }
    if n == 1 {
        return m[0][0].reduce(rels);
    }
    let mut acc = Coefficient::zero();
    for (col, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Coefficient>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, c)| c.clone()).collect())
            .collect();
        let term = a * &determinant(&minor, rels);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc.reduce(rels)
}

/// `R Rᵀ = 1` after reduction.
pub fn is_orthogonal(m: &[Vec<Coefficient>], rels: &RelationSet) -> bool {
    let n = m.len();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let dot = (0..n).fold(Coefficient::zero(), |acc, k| &acc + &(&m[i][k] * &m[j][k]));
            dot.reduce(rels) == Coefficient::from((i == j) as i64)
        })
    })
}

/// Sign class of a bivector square `A ⋆ A = κ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BivectorKind {
    /// `κ < 0`: cosine and sine.
    Circular,
    /// `κ > 0`: hyperbolic cosine and sine.
    Hyperbolic,
    /// `κ = 0`: the series stops after the linear term.
    Null,
}

/// Closed-form star exponential of a bivector.
///
/// For `κ ≠ 0` the value is `c + (A/λ) s` with `λ² = |κ|` and
/// `c = cos λ, s = sin λ` (or `cosh, sinh`), so `relations` carries the
/// matching identity between `c` and `s`. If `|κ|` is not an exact square, `λ`
/// is the symbol `norm` and `relations` also contains `norm² = |κ|`.
#[derive(Clone, Debug)]
pub struct BivectorExp {
    pub rotor: Rotor<Coefficient>,
    pub kind: BivectorKind,
    pub angle: Coefficient,
    pub relations: RelationSet,
}

/// `e⋆^A` with the default symbols `c` and `s`.
pub fn exp_bivector(a: &Multivector<Coefficient>) -> Result<BivectorExp> {
    exp_bivector_with(a, Symbol::new("c"), Symbol::new("s"))
}

/// `e⋆^A`, naming the cosine-like and sine-like symbols explicitly.
pub fn exp_bivector_with(a: &Multivector<Coefficient>, c: Symbol, s: Symbol) -> Result<BivectorExp> {
    require_grade(a, 2)?;
    let spec = a.spec();
    if a.is_zero() {
        return Ok(BivectorExp {
            rotor: Rotor::identity(spec),
            kind: BivectorKind::Null,
            angle: Coefficient::from_i64(0),
            relations: RelationSet::new(),
        });
    }
    let kappa = (a * a).as_scalar().ok_or(Error::NotDecomposable)?;
    if kappa.is_zero() {
        return Ok(BivectorExp {
            rotor: Rotor::unchecked(&Multivector::one(spec) + a),
            kind: BivectorKind::Null,
            angle: Coefficient::from_i64(0),
            relations: RelationSet::new(),
        });
    }
    let (kind, base) = match kappa.definite_sign() {
        Some(Ordering::Less) => (BivectorKind::Circular, RelationSet::circular(c, s)),
        Some(Ordering::Greater) => (BivectorKind::Hyperbolic, RelationSet::hyperbolic(c, s)),
        _ => return Err(Error::NotDecomposable),
    };
    let abs = if kind == BivectorKind::Circular { -kappa.clone() } else { kappa.clone() };
    let (angle, relations) = match abs.sqrt_exact() {
        Some(l) if l.definite_sign() == Some(Ordering::Greater) => (l, base),
        Some(l) => (-l, base),
        None => {
            let norm = Symbol::new("norm");
            if !abs.is_polynomial() || abs.contains(c) || abs.contains(s) {
                return Err(Error::NotDecomposable);
            }
            let rule = &crate::scalars::Poly::var(norm).pow(2) - abs.numerator();
            let rel = crate::scalars::Relation::eliminate(&rule, norm)?;
            (Coefficient::var(norm), base.with_rule(rel)?)
        }
    };
    let unit = a.scale(&angle.inv()?);
    let value = &Multivector::scalar(spec, Coefficient::var(c)) + &unit.scale(&Coefficient::var(s));
    Ok(BivectorExp {
        rotor: Rotor::unchecked(value),
        kind,
        angle,
        relations,
    })
}

/// Splits a vector into the part in the plane of `A` and the part orthogonal to it:
/// `x∥ = (x·A) ⋆ A⁻¹`, `x⊥ = (x∧A) ⋆ A⁻¹`.
pub fn plane_split<S: Field>(
    x: &Multivector<S>,
    a: &Multivector<S>,
) -> Result<(Multivector<S>, Multivector<S>)> {
    require_grade(x, 1)?;
    require_grade(a, 2)?;
    let a_inv = inverse(a)?;
    let (i, o) = graded_products(x, a)?;
    Ok((&i * &a_inv, &o * &a_inv))
}

/// `∇ ⋆ f = Σ e_i ⋆ ∂f/∂x_i` with the coordinate symbols `x1..xd`.
pub fn vector_derivative(f: &Multivector<Coefficient>) -> Multivector<Coefficient> {
    let coords: Vec<Symbol> = (1..=f.spec().dim())
        .map(|i| Symbol::new(&format!("x{i}")))
        .collect();
    vector_derivative_in(f, &coords)
}

/// `Σ e_i ⋆ ∂f/∂coords[i]`.
pub fn vector_derivative_in(f: &Multivector<Coefficient>, coords: &[Symbol]) -> Multivector<Coefficient> {
    let spec = f.spec();
    let mut out = Multivector::zero(spec);
    for (i, &x) in coords.iter().enumerate().take(spec.dim()) {
        out = &out + &(&Multivector::generator(spec, i) * &f.derivative(x));
    }
    out
}

/// Wick expansion of `e_{i1} ⋆ … ⋆ e_{in}`: a sum over all partial pairings,
/// each contracted pair contributing its form entry and each term signed by
/// the parity of moving the pairs to the front.
pub fn wick_expand<S: Scalar>(spec: &Arc<AlgebraSpec<S>>, indices: &[usize]) -> Result<Multivector<S>> {
    if let Some(&bad) = indices.iter().find(|&&i| i >= spec.dim()) {
        return Err(Error::IndexOutOfRange(bad));
    }
    let mut out = Multivector::zero(spec);
    let mut pairs = Vec::new();
    wick_rec(spec, indices, 0, &mut vec![false; indices.len()], &mut pairs, &mut out);
    Ok(out)
}

fn wick_rec<S: Scalar>(
    spec: &Arc<AlgebraSpec<S>>,
    idx: &[usize],
    from: usize,
    used: &mut Vec<bool>,
    pairs: &mut Vec<(usize, usize)>,
    out: &mut Multivector<S>,
) {
    // emit the term for the current pairing
    let mut order: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let rest: Vec<usize> = (0..idx.len()).filter(|k| !used[*k]).collect();
    order.extend(&rest);
    let mut weight = if permutation_parity(&order) { -S::one() } else { S::one() };
    for &(a, b) in pairs.iter() {
        weight = weight * spec.form(idx[a], idx[b]).clone();
    }
    if !weight.is_zero() {
        let mut blade = 0;
        let mut ok = true;
        for &k in &rest {
            match wedge_sign(blade, 1 << idx[k]) {
                Some(sg) => {
                    if sg < 0 {
                        weight = -weight;
                    }
                    blade |= 1 << idx[k];
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.add_term(blade, weight);
        }
    }
    // extend with a new pair whose first element is the smallest free slot >= from
    for a in from..idx.len() {
        if used[a] {
            continue;
        }
        used[a] = true;
        for b in a + 1..idx.len() {
            if used[b] {
                continue;
            }
            used[b] = true;
            pairs.push((a, b));
            wick_rec(spec, idx, a + 1, used, pairs, out);
            pairs.pop();
            used[b] = false;
        }
        used[a] = false;
    }
}

fn permutation_parity(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// Iterated star product of generators, the reference for [`wick_expand`].
pub fn star_of_generators<S: Scalar>(spec: &Arc<AlgebraSpec<S>>, indices: &[usize]) -> Multivector<S> {
    indices
        .iter()
        .fold(Multivector::one(spec), |acc, &i| &acc * &Multivector::generator(spec, i))
}

/// Grades `|r-s|, |r-s|+2, …, r+s` allowed in a product of grade-`r` and grade-`s` blades.
pub fn allowed_product_grades(r: usize, s: usize, d: usize) -> Vec<usize> {
    (r.abs_diff(s)..=(r + s).min(d)).step_by(2).collect()
}

/// Grade of every blade present, as a sorted list with repetitions removed.
pub fn blade_grades<S: Scalar>(a: &Multivector<S>) -> Vec<usize> {
    let mut g: Vec<usize> = a.terms().map(|(b, _)| grade_of(b)).collect();
    g.sort_unstable();
    g.dedup();
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Coefficient as C;
    use num_traits::{One, Zero};

    fn sigma() -> Arc<AlgebraSpec<C>> {
        AlgebraSpec::euclidean(3)
    }

    fn e(spec: &Arc<AlgebraSpec<C>>, i: usize) -> Multivector<C> {
        Multivector::generator(spec, i)
    }

    #[test]
    fn products_of_basis_vectors() {
        let sp = sigma();
        let (i, o) = graded_products(&e(&sp, 0), &e(&sp, 1)).unwrap();
        assert!(i.is_zero());
        assert_eq!(o, &e(&sp, 0) * &e(&sp, 1));
        let a2 = &e(&sp, 0) * &e(&sp, 1);
        let (i, o) = graded_products(&a2, &a2).unwrap();
        assert_eq!(i, Multivector::scalar(&sp, C::from_i64(-1)));
        assert!(o.is_zero());
    }

    #[test]
    fn scalar_inner_is_zero() {
        let sp = sigma();
        let two = Multivector::scalar(&sp, C::from_i64(2));
        let (i, o) = graded_products(&two, &e(&sp, 0)).unwrap();
        assert!(i.is_zero());
        assert_eq!(o, e(&sp, 0).scale(&C::from_i64(2)));
    }

    #[test]
    fn duals() {
        let sp = sigma();
        assert_eq!(dual(&e(&sp, 2)), &e(&sp, 0) * &e(&sp, 1));
        assert_eq!(dual(&Multivector::one(&sp)), Multivector::pseudoscalar(&sp));
        let st = AlgebraSpec::<C>::spacetime();
        let up = dual_basis(&st).unwrap();
        assert_eq!(up[0], e(&st, 0));
        for k in 1..4 {
            assert_eq!(up[k], -&e(&st, k));
        }
    }

    #[test]
    fn reflections() {
        let sp = sigma();
        assert_eq!(reflect(&e(&sp, 1), &e(&sp, 1)).unwrap(), -&e(&sp, 1));
        assert_eq!(reflect(&e(&sp, 0), &e(&sp, 1)).unwrap(), e(&sp, 0));
        let x = &e(&sp, 0) + &e(&sp, 1);
        assert_eq!(reflect(&x, &e(&sp, 0)).unwrap(), &e(&sp, 1) - &e(&sp, 0));
        let not_unit = e(&sp, 0).scale(&C::from_i64(2));
        assert!(matches!(reflect(&x, &not_unit), Err(Error::NonUnitVector(_))));
    }

    #[test]
    fn rotors_from_vectors() {
        let sp = sigma();
        assert_eq!(rotor_from(&e(&sp, 0), &e(&sp, 0)).unwrap().value(), &Multivector::one(&sp));
        let u = rotor_from(&e(&sp, 1), &e(&sp, 0)).unwrap();
        assert_eq!(u.value(), &(&e(&sp, 1) * &e(&sp, 0)));
        assert!(Rotor::new(u.value().clone()).is_ok());
    }

    #[test]
    fn rotation_about_z() {
        let sp = sigma();
        let phi = C::symbol("phi");
        let a = (&e(&sp, 0) * &e(&sp, 1)).scale(&(-&(&phi * &C::rational(1, 2))));
        let ex = exp_bivector(&a).unwrap();
        assert_eq!(ex.kind, BivectorKind::Circular);
        assert_eq!(ex.angle, &phi * &C::rational(1, 2));
        let c = C::symbol("c");
        let s = C::symbol("s");
        let expect_u = Multivector::from_terms(&sp, [(0, c.clone()), (0b011, -&s)]);
        assert_eq!(ex.rotor.value(), &expect_u);
        let x = ex.rotor.sandwich(&e(&sp, 0)).unwrap().reduce(&ex.relations);
        // cos φ = c² - s², sin φ = 2cs
        let cos = (&(&c * &c) - &(&s * &s)).reduce(&ex.relations);
        let sin = &C::from_i64(2) * &(&c * &s);
        assert_eq!(x, Multivector::from_terms(&sp, [(0b001, cos.clone()), (0b010, sin.clone())]));
        let perp = ex.rotor.sandwich(&e(&sp, 2)).unwrap().reduce(&ex.relations);
        assert_eq!(perp, e(&sp, 2));
        let r = rotation_matrix(&ex.rotor, &ex.relations).unwrap();
        let z = C::zero();
        let one = C::from_i64(1);
        assert_eq!(r, vec![vec![cos.clone(), sin.clone(), z.clone()], vec![-&sin, cos, z.clone()], vec![z.clone(), z, one.clone()]]);
        assert_eq!(determinant(&r, &ex.relations), one);
        assert!(is_orthogonal(&r, &ex.relations));
    }

    #[test]
    fn hyperbolic_exponential() {
        let st = AlgebraSpec::<C>::spacetime();
        let alpha = C::symbol("alpha");
        let g10 = &e(&st, 1) * &e(&st, 0);
        let ex = exp_bivector(&g10.scale(&(&alpha * &C::rational(1, 2)))).unwrap();
        assert_eq!(ex.kind, BivectorKind::Hyperbolic);
        let expect = &Multivector::scalar(&st, C::symbol("c")) + &g10.scale(&C::symbol("s"));
        assert_eq!(ex.rotor.value(), &expect);
        assert!(exp_bivector(&Multivector::zero(&st)).unwrap().rotor.value() == &Multivector::one(&st));
    }

    #[test]
    fn non_square_norm_gets_symbol() {
        let sp = sigma();
        let a = Multivector::from_terms(&sp, [(0b011, C::symbol("a1")), (0b110, C::symbol("a2"))]);
        let ex = exp_bivector(&a).unwrap();
        assert_eq!(ex.angle, C::symbol("norm"));
        let r = Rotor::new_reduced(ex.rotor.value().clone(), &ex.relations);
        assert!(r.is_ok());
    }

    #[test]
    fn not_decomposable() {
        let sp = AlgebraSpec::<C>::euclidean(4);
        let a = Multivector::from_terms(&sp, [(0b0011, C::one()), (0b1100, C::one())]);
        assert_eq!(exp_bivector(&a).unwrap_err(), Error::NotDecomposable);
    }

    #[test]
    fn plane_splits() {
        let sp = sigma();
        let a = &e(&sp, 0) * &e(&sp, 1);
        assert_eq!(plane_split(&e(&sp, 0), &a).unwrap(), (e(&sp, 0), Multivector::zero(&sp)));
        assert_eq!(plane_split(&e(&sp, 2), &a).unwrap(), (Multivector::zero(&sp), e(&sp, 2)));
        let x = &e(&sp, 0) + &e(&sp, 2);
        let (par, perp) = plane_split(&x, &a).unwrap();
        assert_eq!(par, e(&sp, 0));
        assert_eq!(perp, e(&sp, 2));
        assert_eq!(&par * &a, -&(&a * &par));
        assert_eq!(&perp * &a, &a * &perp);
        assert_eq!(plane_split(&x, &Multivector::zero(&sp)).unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn nabla() {
        let sp = sigma();
        let x: Vec<C> = (1..=3).map(|i| C::symbol(&format!("x{i}"))).collect();
        let radial = Multivector::vector(&sp, &x);
        assert_eq!(vector_derivative(&radial), Multivector::scalar(&sp, C::from_i64(3)));
        let swirl = Multivector::vector(&sp, &[-&x[1], x[0].clone(), C::zero()]);
        let expect = (&e(&sp, 0) * &e(&sp, 1)).scale(&C::from_i64(2));
        assert_eq!(vector_derivative(&swirl), expect);
        assert!(vector_derivative(&e(&sp, 0)).is_zero());
    }

    #[test]
    fn wick_small_cases() {
        let sp = sigma();
        assert_eq!(wick_expand(&sp, &[0, 0, 1, 1]).unwrap(), Multivector::one(&sp));
        assert_eq!(wick_expand(&sp, &[0]).unwrap(), e(&sp, 0));
        assert_eq!(wick_expand(&sp, &[3]).unwrap_err(), Error::IndexOutOfRange(3));
    }

    #[test]
    fn ten_term_display() {
        // symbolic metric so that every pairing stays visible
        let names: Vec<String> = (1..=4).map(|i| format!("f{i}")).collect();
        let b = |i: usize, j: usize| C::symbol(&format!("b{}{}", i.min(j) + 1, i.max(j) + 1));
        let form: Vec<Vec<C>> = (0..4).map(|i| (0..4).map(|j| b(i, j)).collect()).collect();
        let sp = AlgebraSpec::new(names, form).unwrap();
        let f = |i: usize| e(&sp, i);
        let w = |i: usize, j: usize| f(i).wedge(&f(j)).unwrap();
        let s = |c: C, m: Multivector<C>| m.scale(&c);
        let one = Multivector::one(&sp);
        let expect = f(0).wedge(&f(1)).unwrap().wedge(&f(2)).unwrap().wedge(&f(3)).unwrap()
            + s(b(2, 3), w(0, 1))
            - s(b(1, 3), w(0, 2))
            + s(b(1, 2), w(0, 3))
            + s(b(0, 3), w(1, 2))
            - s(b(0, 2), w(1, 3))
            + s(b(0, 1), w(2, 3))
            + s(&b(0, 1) * &b(2, 3), one.clone())
            - s(&b(0, 2) * &b(1, 3), one.clone())
            + s(&b(0, 3) * &b(1, 2), one);
        assert_eq!(wick_expand(&sp, &[0, 1, 2, 3]).unwrap(), expect);
        assert_eq!(star_of_generators(&sp, &[0, 1, 2, 3]), expect);
    }

    #[test]
    fn allowed_grades() {
        assert_eq!(allowed_product_grades(1, 2, 3), vec![1, 3]);
        assert_eq!(allowed_product_grades(2, 2, 3), vec![0, 2]);
    }
}
