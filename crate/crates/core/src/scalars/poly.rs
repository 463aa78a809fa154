//! Sparse multivariate polynomials over ℚ(i) in graded lexicographic order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::symbol::Symbol;

/// Power product of symbols, stored sparse and sorted by symbol id.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(s, exp)])
        }
    }

    pub fn from_pairs(mut pairs: Vec<(Symbol, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(s, _)| s);
        let mut out: Vec<(Symbol, u32)> = Vec::with_capacity(pairs.len());
        for (s, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == s => last.1 += e,
                _ => out.push((s, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exp(&self, s: Symbol) -> u32 {
        self.0
            .binary_search_by_key(&s, |&(t, _)| t)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(s, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < s {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == s {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((s, e - f)),
                }
            } else {
                out.push((s, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for &(s, e) in &self.0 {
            let f = other.exp(s);
            if f > 0 {
                out.push((s, e.min(f)));
            }
        }
        Monomial(out)
    }

    /// Splits off the power of `s`.
    pub fn split(&self, s: Symbol) -> (Monomial, u32) {
        let mut rest = self.0.clone();
        match rest.binary_search_by_key(&s, |&(t, _)| t) {
            Ok(i) => {
                let e = rest.remove(i).1;
                (Monomial(rest), e)
            }
            Err(_) => (Monomial(rest), 0),
        }
    }

    /// Square root if every exponent is even.
    pub fn sqrt(&self) -> Option<Monomial> {
        if self.0.iter().all(|&(_, e)| e % 2 == 0) {
            Some(Monomial(self.0.iter().map(|&(s, e)| (s, e / 2)).collect()))
        } else {
            None
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // lex with smaller symbol id as the most significant variable
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(a), Some(b)) => match a.0.cmp(&b.0) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match a.1.cmp(&b.1) {
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                            }
                            o => return o,
                        },
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Polynomial with no stored zero coefficients; the last key is the leading term.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn integer(n: i64) -> Self {
        Poly::constant(GaussianRational::from_integer(n))
    }

    pub fn var(s: Symbol) -> Self {
        Poly::term(Monomial::var(s, 1), GaussianRational::one())
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, GaussianRational)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
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

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The constant value, if the polynomial has no symbols (zero included).
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> GaussianRational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.leading_term().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.keys().map(|m| m.exp(s)).max().unwrap_or(0)
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.terms.keys().any(|m| m.exp(s) > 0)
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(s, _)| s))
            .collect()
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a.clone()))
                .collect(),
        }
    }

    pub fn conj(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.conj())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self, s: Symbol) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.split(s);
            if e == 0 {
                continue;
            }
            let mono = rest.mul(&Monomial::var(s, e - 1));
            out.add_term(mono, &(c * &GaussianRational::from_integer(e as i64)));
        }
        out
    }

    /// Coefficient of `s^k`, as a polynomial in the remaining symbols.
    pub fn coefficient_of(&self, s: Symbol, k: u32) -> Poly {
        Poly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (rest, e) = m.split(s);
            (e == k).then(|| (rest, c.clone()))
        }))
    }

    /// Dense coefficient list in `s`; entry `k` multiplies `s^k`.
    pub fn to_univariate(&self, s: Symbol) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(s) as usize + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.split(s);
            out[e as usize].add_term(rest, c);
        }
        out
    }

    pub fn from_univariate(s: Symbol, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let mono = Monomial::var(s, k as u32);
            for (m, a) in &c.terms {
                out.add_term(m.mul(&mono), a);
            }
        }
        out
    }

    /// Simultaneous substitution of symbols by polynomials.
    pub fn substitute(&self, map: &HashMap<Symbol, Poly>) -> Poly {
        let mut out = Poly::zero();
        let mut cache: HashMap<(Symbol, u32), Poly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            let mut kept = Vec::new();
            for &(s, e) in m.factors() {
                match map.get(&s) {
                    Some(val) => {
                        let pw = cache.entry((s, e)).or_insert_with(|| val.pow(e));
                        term = &term * pw;
                    }
                    None => kept.push((s, e)),
                }
            }
            let term = term.mul_monomial(&Monomial::from_pairs(kept));
            out = &out + &term;
        }
        out
    }

    /// Monomial dividing every term (the largest such).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for m in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.inv()?));
        }
        if d.len() == 1 {
            let (dm, dc) = d.leading_term().unwrap();
            let inv = dc.inv()?;
            let mut q = BTreeMap::new();
            for (m, c) in &self.terms {
                q.insert(m.div(dm)?, c * &inv);
            }
            return Some(Poly { terms: q });
        }
        let (dm, dc) = d.leading_term().unwrap();
        let dc_inv = dc.inv()?;
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = r.leading_term() {
            let m = rm.div(dm)?;
            let c = rc * &dc_inv;
            let t = Poly::term(m, c);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Exact square root up to sign, if `self` is a perfect square.
    pub fn sqrt_exact(&self) -> Option<Poly> {
        let Some((lm, lc)) = self.leading_term() else {
            return Some(Poly::zero());
        };
        let root_m = lm.sqrt()?;
        let root_c = lc.sqrt_exact()?;
        let lead = Poly::term(root_m.clone(), root_c);
        let twice_lead = lead.scale(&GaussianRational::from_integer(2));
        let mut root = lead;
        let mut last = root_m;
        loop {
            let rem = self - &(&root * &root);
            let Some((rm, _)) = rem.leading_term() else {
                return Some(root);
            };
            let t = Poly::term(rm.clone(), rem.leading_coefficient()).div_exact(&twice_lead)?;
            let (tm, _) = t.leading_term()?;
            if tm >= &last {
                return None;
            }
            last = tm.clone();
            root = &root + &t;
        }
    }

    pub fn eval_complex(&self, values: &HashMap<Symbol, f64>) -> Option<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let (re, im) = c.to_f64_pair();
            let mut v = Complex64::new(re, im);
            for &(s, e) in m.factors() {
                v *= values.get(&s)?.powi(e as i32);
            }
            acc += v;
        }
        Some(acc)
    }

    /// Sign of the polynomial if it is a sum of real terms of one sign, i.e.
    /// definite whenever every symbol is positive.
    pub fn definite_sign(&self) -> Option<Ordering> {
        let mut sign = None;
        for c in self.terms.values() {
            if !c.is_real() {
                return None;
            }
            let s = c.re.cmp(&num_rational::BigRational::zero());
            match sign {
                None => sign = Some(s),
                Some(t) if t == s => {}
                Some(_) => return None,
            }
        }
        sign
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (mut out, other) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Greatest common divisor, normalized to leading coefficient one.
///
/// Recursive primitive polynomial remainder sequence over ℚ(i)[x₁…xₙ]:
/// content and primitive part are taken with respect to one main variable,
/// contents recurse on fewer variables.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    // pull out the monomial content first; it is exact and cheap
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = ma.gcd(&mb);
    let (a, b) = if ma.is_one() && mb.is_one() {
        (a.clone(), b.clone())
    } else {
        (
            a.div_exact(&Poly::term(ma, GaussianRational::one())).unwrap(),
            b.div_exact(&Poly::term(mb, GaussianRational::one())).unwrap(),
        )
    };
    let rest = if a.len() == 1 || b.len() == 1 {
        // a monomial-free single term is a constant here
        Poly::one()
    } else if a.div_exact(&b).is_some() {
        b.monic()
    } else if b.div_exact(&a).is_some() {
        a.monic()
    } else {
        gcd_primitive(&a, &b)
    };
    rest.mul_monomial(&mono).monic()
}

fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    let sa = a.symbols();
    let sb = b.symbols();
    let shared: Vec<Symbol> = sa.intersection(&sb).copied().collect();
    if shared.is_empty() {
        // no shared variable: any common factor would have to be constant
        return Poly::one();
    }
    let symbols: Vec<Symbol> = sa.union(&sb).copied().collect();
    let bounds: Vec<(Symbol, Option<usize>)> = shared
        .iter()
        .map(|&x| (x, image_degree_bound(&a.to_univariate(x), &b.to_univariate(x), &symbols)))
        .collect();
    if bounds.iter().all(|(_, d)| *d == Some(0)) {
        return Poly::one();
    }
    if let Some(&(x, _)) = bounds.iter().find(|(_, d)| *d == Some(0)) {
        // the gcd is free of x, so it divides every coefficient in x
        let mut coeffs = a.to_univariate(x);
        coeffs.extend(b.to_univariate(x));
        return content(&coeffs).monic();
    }
    let &(x, _) = bounds
        .iter()
        .min_by_key(|(s, d)| (d.unwrap_or(usize::MAX), a.degree_in(*s).max(b.degree_in(*s))))
        .expect("shared is non-empty");
    let ua = a.to_univariate(x);
    let ub = b.to_univariate(x);
    let ca = content(&ua);
    let cb = content(&ub);
    let g_content = gcd(&ca, &cb);
    let mut pa = primitive(&ua, &ca);
    let mut pb = primitive(&ub, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let r = pseudo_remainder(&pa, &pb);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            pb = vec![Poly::one()];
            break;
        }
        let cr = content(&r);
        pa = pb;
        pb = primitive(&r, &cr);
    }
    let g = Poly::from_univariate(x, &pb);
    (&g * &g_content).monic()
}

/// Upper bound on `deg_x gcd(a, b)` from `a` and `b` given as coefficient
/// lists in `x`. The other variables are fixed at integers keeping both
/// leading coefficients nonzero, so the image of the gcd keeps its degree
/// and divides the univariate image gcd. `None` when no tried point works.
fn image_degree_bound(ua: &[Poly], ub: &[Poly], symbols: &[Symbol]) -> Option<usize> {
    (0..3i64).find_map(|attempt| {
        let point: HashMap<Symbol, GaussianRational> = symbols
            .iter()
            .enumerate()
            .map(|(k, &s)| (s, GaussianRational::from_integer(2 + 3 * k as i64 + 7 * attempt)))
            .collect();
        let ia: Vec<GaussianRational> = ua.iter().map(|c| eval_at(c, &point)).collect();
        let ib: Vec<GaussianRational> = ub.iter().map(|c| eval_at(c, &point)).collect();
        let lucky = ia.last().is_some_and(|c| !c.is_zero()) && ib.last().is_some_and(|c| !c.is_zero());
        lucky.then(|| univariate_gcd_degree(ia, ib))
    })
}

fn eval_at(p: &Poly, point: &HashMap<Symbol, GaussianRational>) -> GaussianRational {
    let mut total = GaussianRational::zero();
    for (m, c) in &p.terms {
        let mut term = c.clone();
        for &(s, e) in m.factors() {
            for _ in 0..e {
                term *= &point[&s];
            }
        }
        total += &term;
    }
    total
}

fn univariate_gcd_degree(mut a: Vec<GaussianRational>, mut b: Vec<GaussianRational>) -> usize {
    let trim = |v: &mut Vec<GaussianRational>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = b.last().and_then(GaussianRational::inv).expect("trimmed leading coefficient");
        while a.len() >= b.len() {
            let q = &a[a.len() - 1] * &inv;
            let shift = a.len() - b.len();
            for (j, bj) in b.iter().enumerate() {
                a[j + shift] -= &(&q * bj);
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn content(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(coeffs: &[Poly], content: &Poly) -> Vec<Poly> {
    let out: Vec<Poly> = coeffs
        .iter()
        .map(|c| c.div_exact(content).expect("content divides every coefficient"))
        .collect();
    // normalize the numeric scale to keep rationals small
    let lc = out.last().map(|p| p.leading_coefficient()).unwrap_or_else(GaussianRational::one);
    match lc.inv() {
        Some(inv) if !lc.is_one() => out.iter().map(|p| p.scale(&inv)).collect(),
        _ => out,
    }
}

/// Sparse pseudo-remainder of dense univariate polynomials; trailing zeros trimmed.
fn pseudo_remainder(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lcb = &b[db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        for (j, bj) in b.iter().enumerate() {
            let k = j + dr - db;
            r[k] = &r[k] - &(&lcr * bj);
        }
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(|p| p.is_zero()) {
        v.pop();
    }
}

fn fmt_coeff_term(
    f: &mut fmt::Formatter<'_>,
    m: &Monomial,
    c: &GaussianRational,
    first: bool,
) -> fmt::Result {
    let neg = c.is_real() && c.re < num_rational::BigRational::zero();
    let mag = if neg { -c } else { c.clone() };
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else if neg {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if m.is_one() {
        return write!(f, "{mag}");
    }
    if mag.is_one() {
        write!(f, "{m}")
    } else if mag.is_compound() {
        write!(f, "({mag})*{m}")
    } else {
        write!(f, "{mag}*{m}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            fmt_coeff_term(f, m, c, k == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Poly {
        Poly::var(Symbol::new(name))
    }

    fn n(k: i64) -> Poly {
        Poly::integer(k)
    }

    #[test]
    fn grlex_leading_term() {
        let (x, y) = (v("x1"), v("x2"));
        let p = &(&x * &y) + &(&(&x * &x) + &(&y * &(&y * &y)));
        let (m, _) = p.leading_term().unwrap();
        assert_eq!(m.to_string(), "x2^3");
        // degree tie: x1^2 > x1*x2 > x2^2
        let q = &(&x * &x) + &(&y * &y);
        assert_eq!(q.leading_term().unwrap().0.to_string(), "x1^2");
    }

    #[test]
    fn exact_division_and_failure() {
        let (x, y) = (v("x1"), v("x2"));
        let a = &x + &y;
        let b = &x - &y;
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!((&prod + &n(1)).div_exact(&a), None);
    }

    #[test]
    fn gcd_of_products() {
        let (x, y, z) = (v("x1"), v("x2"), v("x3"));
        let f = &(&x * &x) + &(&y * &z);
        let g1 = &(&x - &y) + &n(3);
        let g2 = &(&z * &z) + &x;
        let a = &f * &g1;
        let b = &f * &g2;
        assert_eq!(gcd(&a, &b), f.monic());
        assert!(gcd(&g1, &g2).is_one());
    }

    #[test]
    fn gcd_free_of_a_variable() {
        let (x, y, z) = (v("x1"), v("x2"), v("x3"));
        let f = &y + &(&n(2) * &z);
        let a = &f * &(&(&x * &x) + &y);
        let b = &f * &(&(&x + &(&z * &z)) + &n(1));
        assert_eq!(gcd(&a, &b), f.monic());
        assert!(gcd(&(&(&x * &x) + &y), &(&(&x + &(&z * &z)) + &n(1))).is_one());
    }

    #[test]
    fn univariate_image_degree() {
        let q = |c: &[i64]| c.iter().map(|&k| GaussianRational::from_integer(k)).collect::<Vec<_>>();
        // (t - 1)(t + 2) and (t - 1)(t - 3)
        assert_eq!(univariate_gcd_degree(q(&[-2, 1, 1]), q(&[3, -4, 1])), 1);
        assert_eq!(univariate_gcd_degree(q(&[-2, 1, 1]), q(&[1, 1])), 0);
    }

    #[test]
    fn gcd_with_monomial_content() {
        let (x, y) = (v("x1"), v("x2"));
        let a = &(&x * &x) * &(&y + &n(1));
        let b = &(&x * &y) * &(&y + &n(1));
        assert_eq!(gcd(&a, &b), (&x * &(&y + &n(1))).monic());
    }

    #[test]
    fn substitution_is_simultaneous() {
        let (x, y) = (Symbol::new("x1"), Symbol::new("x2"));
        let p = &Poly::var(x) - &Poly::var(y);
        let mut map = HashMap::new();
        map.insert(x, Poly::var(y));
        map.insert(y, Poly::var(x));
        assert_eq!(p.substitute(&map), -&p);
    }

    #[test]
    fn square_roots() {
        let (x, y) = (v("x1"), v("x2"));
        let r = &(&x * &n(2)) - &(&y * &y);
        let sq = &r * &r;
        let s = sq.sqrt_exact().unwrap();
        assert!(s == r || s == -&r);
        assert!((&sq + &n(1)).sqrt_exact().is_none());
    }

    #[test]
    fn derivative_and_univariate() {
        let x = Symbol::new("x1");
        let p = &Poly::var(x).pow(3) + &n(5);
        assert_eq!(p.derivative(x), Poly::var(x).pow(2).scale(&GaussianRational::from_integer(3)));
        let u = p.to_univariate(x);
        assert_eq!(u.len(), 4);
        assert_eq!(Poly::from_univariate(x, &u), p);
    }
}
