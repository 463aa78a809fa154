//! Exact rational functions in formal symbols over ℚ(i).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::poly::{gcd, Poly};
use super::relations::RelationSet;
use super::symbol::Symbol;
use crate::error::{Error, Result};

/// Canonical fraction `num / den`.
///
/// `gcd(num, den) = 1` and `den` has leading coefficient one in graded
/// lexicographic order, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coefficient {
    num: Poly,
    den: Poly,
}

impl Coefficient {
    /// Builds and normalizes `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.as_constant() {
            let inv = c.inv().expect("nonzero constant denominator");
            return Self {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if let Some(c) = den.as_constant() {
            let inv = c.inv().unwrap();
            return Self {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let lc = den.leading_coefficient();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.inv().unwrap();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn integer(n: i64) -> Self {
        Self::from_poly(Poly::integer(n))
    }

    /// `n / d`; panics if `d == 0`.
    pub fn rational(n: i64, d: i64) -> Self {
        Self::constant(GaussianRational::from_ratio(n, d))
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn symbol(name: &str) -> Self {
        Self::from_poly(Poly::var(Symbol::new(name)))
    }

    pub fn var(s: Symbol) -> Self {
        Self::from_poly(Poly::var(s))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.num.contains(s) || self.den.contains(s)
    }

    pub fn conj(&self) -> Self {
        Self::normalized(self.num.conj(), self.den.conj())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, n: i32) -> Result<Self> {
        let p = n.unsigned_abs();
        let out = Self::normalized(self.num.pow(p), self.den.pow(p));
        if n < 0 {
            out.inv()
        } else {
            Ok(out)
        }
    }

    /// Partial derivative by the quotient rule.
    pub fn derivative(&self, s: Symbol) -> Self {
        if !self.contains(s) {
            return Self::zero();
        }
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative(s));
        }
        let top = &(&self.num.derivative(s) * &self.den) - &(&self.num * &self.den.derivative(s));
        Self::normalized(top, self.den.pow(2))
    }

    /// Simultaneous substitution of symbols by coefficients.
    pub fn substitute(&self, bindings: &HashMap<Symbol, Coefficient>) -> Result<Self> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let num = substitute_poly(&self.num, bindings);
        let den = substitute_poly(&self.den, bindings);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        num.checked_div(&den)
    }

    /// Same as [`substitute`](Self::substitute) with bindings keyed by name.
    pub fn substitute_named(&self, bindings: &[(&str, Coefficient)]) -> Result<Self> {
        let map: HashMap<Symbol, Coefficient> = bindings
            .iter()
            .map(|(n, c)| (Symbol::new(n), c.clone()))
            .collect();
        self.substitute(&map)
    }

    /// Coefficient of `s^order` in an expression polynomial in `s`.
    pub fn series_coefficient(&self, s: Symbol, order: u32) -> Result<Self> {
        if self.den.contains(s) {
            return Err(Error::NotPolynomialInSymbol(s.name()));
        }
        Ok(Self::normalized(self.num.coefficient_of(s, order), self.den.clone()))
    }

    /// Reduces numerator and denominator modulo the relation set.
    pub fn reduce(&self, rels: &RelationSet) -> Self {
        if rels.is_empty() {
            return self.clone();
        }
        let num = rels.reduce_poly(&self.num);
        let den = rels.reduce_poly(&self.den);
        Self::normalized(num, den)
    }

    /// Exact square root up to sign, when numerator and denominator are squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        let n = self.num.sqrt_exact()?;
        let d = self.den.sqrt_exact()?;
        Some(Self::normalized(n, d))
    }

    pub fn eval_complex(&self, values: &HashMap<Symbol, f64>) -> Option<Complex64> {
        Some(self.num.eval_complex(values)? / self.den.eval_complex(values)?)
    }

    /// Real value with the given symbol values; `None` if symbols are unbound
    /// or the result has an imaginary part.
    pub fn eval_f64(&self, values: &HashMap<Symbol, f64>) -> Option<f64> {
        let z = self.eval_complex(values)?;
        (z.im == 0.0).then_some(z.re)
    }

    /// Sign that holds for every positive assignment of the symbols, when the
    /// numerator and denominator are each single-signed.
    pub fn definite_sign(&self) -> Option<Ordering> {
        if self.is_zero() {
            return Some(Ordering::Equal);
        }
        let a = self.num.definite_sign()?;
        let b = self.den.definite_sign()?;
        Some(if a == b { Ordering::Greater } else { Ordering::Less })
    }

    pub fn is_negative_constant(&self) -> bool {
        self.as_constant()
            .is_some_and(|c| c.is_real() && c.re < num_rational::BigRational::zero())
    }
}

fn substitute_poly(p: &Poly, bindings: &HashMap<Symbol, Coefficient>) -> Coefficient {
    let mut acc = Coefficient::zero();
    for (m, c) in p.terms() {
        let mut term = Coefficient::constant(c.clone());
        let mut kept = Vec::new();
        for &(s, e) in m.factors() {
            match bindings.get(&s) {
                Some(v) => term = &term * &v.pow(e as i32).expect("positive power"),
                None => kept.push((s, e)),
            }
        }
        let mono = super::poly::Monomial::from_pairs(kept);
        let term = &term * &Coefficient::from_poly(Poly::term(mono, GaussianRational::one()));
        acc = &acc + &term;
    }
    acc
}

impl Zero for Coefficient {
    fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Coefficient {
    fn one() -> Self {
        Self::integer(1)
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return Coefficient::from_poly(num);
            }
            return Coefficient::normalized(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Coefficient::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Coefficient::from_poly(&self.num * &rhs.num);
        }
        Coefficient::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        &self - &rhs
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl Div for Coefficient {
    type Output = Coefficient;
    /// Panics on division by zero; use [`Coefficient::checked_div`] otherwise.
    fn div(self, rhs: Coefficient) -> Coefficient {
        self.checked_div(&rhs).expect("division by zero coefficient")
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<GaussianRational> for Coefficient {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl From<Poly> for Coefficient {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl From<Symbol> for Coefficient {
    fn from(s: Symbol) -> Self {
        Self::var(s)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.len() > 1 || self.den.leading_term().is_some_and(|(m, _)| m.degree() > 1 && false) {
            write!(f, "/({})", self.den)
        } else {
            let (m, _) = self.den.leading_term().unwrap();
            if m.factors().len() > 1 {
                write!(f, "/({})", self.den)
            } else {
                write!(f, "/{}", self.den)
            }
        }
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
