//! Single-symbol elimination rules used to reduce coefficients.

use std::fmt;

use num_traits::Zero;

use super::gaussian::GaussianRational;
use super::poly::{Monomial, Poly};
use super::symbol::Symbol;
use crate::error::{Error, Result};

/// Rewrite rule `symbol^power -> replacement`, where the replacement has
/// lower degree in `symbol`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    symbol: Symbol,
    power: u32,
    replacement: Poly,
}

impl Relation {
    /// Turns the polynomial relation `poly = 0` into a rule eliminating the
    /// highest power of `symbol`.
    pub fn eliminate(poly: &Poly, symbol: Symbol) -> Result<Relation> {
        let power = poly.degree_in(symbol);
        if power == 0 {
            return Err(Error::InvalidRelation(format!(
                "relation does not contain `{symbol}`"
            )));
        }
        let lead = poly.coefficient_of(symbol, power);
        let lc = lead.as_constant().ok_or_else(|| {
            Error::InvalidRelation(format!(
                "leading coefficient in `{symbol}` must be a constant"
            ))
        })?;
        let top = Poly::term(Monomial::var(symbol, power), lc.clone());
        let rest = poly - &top;
        let inv = lc.inv().expect("nonzero leading coefficient");
        let replacement = (-&rest).scale(&inv);
        Ok(Relation {
            symbol,
            power,
            replacement,
        })
    }

    pub fn symbol(&self) -> Symbol {
        self.symbol
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn replacement(&self) -> &Poly {
        &self.replacement
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{} -> {}", self.symbol, self.power, self.replacement)
    }
}

/// A set of independent elimination rules.
///
/// No rule's replacement may mention a symbol eliminated by another rule,
/// which makes reduction terminating and confluent.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RelationSet {
    rules: Vec<Relation>,
}

impl RelationSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rules(&self) -> &[Relation] {
        &self.rules
    }

    /// `c^2 + s^2 = 1`, eliminating `c^2`.
    pub fn circular(c: Symbol, s: Symbol) -> Self {
        let rel = &(&Poly::var(c).pow(2) + &Poly::var(s).pow(2)) - &Poly::one();
        Self::new().with_rule(Relation::eliminate(&rel, c).unwrap()).unwrap()
    }

    /// `c^2 - s^2 = 1`, eliminating `c^2`.
    pub fn hyperbolic(c: Symbol, s: Symbol) -> Self {
        let rel = &(&Poly::var(c).pow(2) - &Poly::var(s).pow(2)) - &Poly::one();
        Self::new().with_rule(Relation::eliminate(&rel, c).unwrap()).unwrap()
    }

    /// Mass shell `p0^2 = m^2 + Σ p_i^2`, eliminating `p0^2`.
    pub fn on_shell(energy: Symbol, mass: Symbol, spatial: &[Symbol]) -> Self {
        let mut rel = &Poly::var(energy).pow(2) - &Poly::var(mass).pow(2);
        for &p in spatial {
            rel = &rel - &Poly::var(p).pow(2);
        }
        Self::new()
            .with_rule(Relation::eliminate(&rel, energy).unwrap())
            .unwrap()
    }

    /// Adds a rule, rejecting it if it would interact with an existing one.
    pub fn with_rule(mut self, rule: Relation) -> Result<Self> {
        for r in &self.rules {
            if r.symbol == rule.symbol {
                return Err(Error::InvalidRelation(format!(
                    "`{}` is already eliminated",
                    rule.symbol
                )));
            }
            if r.replacement.contains(rule.symbol) || rule.replacement.contains(r.symbol) {
                return Err(Error::InvalidRelation(format!(
                    "rules for `{}` and `{}` are not independent",
                    r.symbol, rule.symbol
                )));
            }
        }
        self.rules.push(rule);
        Ok(self)
    }

    pub fn merge(mut self, other: &RelationSet) -> Result<Self> {
        for r in &other.rules {
            self = self.with_rule(r.clone())?;
        }
        Ok(self)
    }

    /// Normal form of `p` modulo the rules.
    pub fn reduce_poly(&self, p: &Poly) -> Poly {
        if self.rules.is_empty() || !self.rules.iter().any(|r| p.degree_in(r.symbol) >= r.power) {
            return p.clone();
        }
        let mut done: Vec<(Monomial, GaussianRational)> = Vec::new();
        let mut work: Vec<(Monomial, GaussianRational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        while let Some((m, c)) = work.pop() {
            let hit = self.rules.iter().find(|r| m.exp(r.symbol) >= r.power);
            match hit {
                None => done.push((m, c)),
                Some(r) => {
                    let (rest, e) = m.split(r.symbol);
                    let keep = rest.mul(&Monomial::var(r.symbol, e - r.power));
                    for (rm, rc) in r.replacement.terms() {
                        let coeff = &c * rc;
                        if !coeff.is_zero() {
                            work.push((rm.mul(&keep), coeff));
                        }
                    }
                }
            }
        }
        Poly::from_terms(done)
    }
}

impl fmt::Display for RelationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.rules.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circular_reduces_high_powers() {
        let c = Symbol::new("c");
        let s = Symbol::new("s");
        let rels = RelationSet::circular(c, s);
        // c^4 = (1 - s^2)^2
        let out = rels.reduce_poly(&Poly::var(c).pow(4));
        let expect = (&Poly::one() - &Poly::var(s).pow(2)).pow(2);
        assert_eq!(out, expect);
        assert_eq!(rels.reduce_poly(&out), out);
    }

    #[test]
    fn dependent_rules_rejected() {
        let c = Symbol::new("c");
        let s = Symbol::new("s");
        let circ = RelationSet::circular(c, s);
        let other = Relation::eliminate(&(&Poly::var(s).pow(2) - &Poly::var(c)), s).unwrap();
        assert!(circ.with_rule(other).is_err());
    }

    #[test]
    fn non_monic_leading_coefficient() {
        let x = Symbol::new("x1");
        let rel = &Poly::var(x).pow(2).scale(&GaussianRational::from_integer(2)) - &Poly::one();
        let r = Relation::eliminate(&rel, x).unwrap();
        assert_eq!(r.replacement(), &Poly::constant(GaussianRational::from_ratio(1, 2)));
    }
}
