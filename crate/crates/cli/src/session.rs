//! Session algebras and evaluation of parsed expressions.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};
use stargeo::geometric::{dual, exp_bivector, inner, outer};
use stargeo::moyal::{moyal_clifford_star, StarProduct};
use stargeo::{AlgebraSpec, Coefficient, GaussianRational, Multivector, RelationSet, Symbol};
use thiserror::Error;

use crate::expr::{parse, BinOp, Expr, ExprKind, Func, SyntaxError};

type Mv = Multivector<Coefficient>;

/// Algebra selected for a session.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// Euclidean `sigma1..sigma3`, Clifford star.
    Sigma3,
    /// Pseudoclassical `theta1..theta3`, Clifford star with form `(ħ/2)δ`.
    Theta3,
    /// Spacetime algebra `gamma0..gamma3`.
    Sta,
    /// Phase-space algebra `eta1..etad, rho1..rhod`.
    Phase(usize),
    /// `sigma1..sigmad` with the Moyal-Clifford star over `(q, p), (q1, p1) … (qd, pd)`.
    Moyal(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown algebra `{0}` (expected sigma3, theta3, sta, phase:d or moyal:d)")]
pub struct UnknownAlgebra(pub String);

impl FromStr for AlgebraKind {
    type Err = UnknownAlgebra;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let dim = |d: &str| d.parse::<usize>().ok().filter(|&d| (1..=6).contains(&d));
        match s {
            "sigma3" => Ok(AlgebraKind::Sigma3),
            "theta3" => Ok(AlgebraKind::Theta3),
            "sta" => Ok(AlgebraKind::Sta),
            _ => match s.split_once(':') {
                Some(("phase", d)) => dim(d).map(AlgebraKind::Phase),
                Some(("moyal", d)) => dim(d).map(AlgebraKind::Moyal),
                _ => None,
            }
            .ok_or_else(|| UnknownAlgebra(s.to_string())),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Sigma3 => f.write_str("sigma3"),
            AlgebraKind::Theta3 => f.write_str("theta3"),
            AlgebraKind::Sta => f.write_str("sta"),
            AlgebraKind::Phase(d) => write!(f, "phase:{d}"),
            AlgebraKind::Moyal(d) => write!(f, "moyal:{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationsError {
    #[error("malformed relation `{0}` (expected circular:c:s, hyperbolic:c:s or on_shell:p:m)")]
    Malformed(String),
    #[error("conflicting relations: {0}")]
    Conflict(String),
}

/// Parses a comma-separated list such as `circular:c:s,on_shell:p:m`.
pub fn parse_relations(text: &str) -> Result<RelationSet, RelationsError> {
    let mut out = RelationSet::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let parts: Vec<&str> = item.split(':').collect();
        let valid = |s: &str| !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if parts.len() != 3 || !valid(parts[1]) || !valid(parts[2]) {
            return Err(RelationsError::Malformed(item.to_string()));
        }
        let (a, b) = (Symbol::new(parts[1]), Symbol::new(parts[2]));
        let set = match parts[0] {
            "circular" => RelationSet::circular(a, b),
            "hyperbolic" => RelationSet::hyperbolic(a, b),
            "on_shell" => {
                let spatial: Vec<Symbol> = (1..4).map(|i| Symbol::new(&format!("{}{i}", parts[1]))).collect();
                RelationSet::on_shell(Symbol::new(&format!("{}0", parts[1])), b, &spatial)
            }
            _ => return Err(RelationsError::Malformed(item.to_string())),
        };
        out = out
            .merge(&set)
            .map_err(|e| RelationsError::Conflict(e.to_string()))?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("unknown symbol `{name}` at bytes {}..{}; this session knows: {table}", span.start, span.end)]
    UnknownSymbol {
        name: String,
        span: Range<usize>,
        table: String,
    },
    #[error("{message} at bytes {}..{}", span.start, span.end)]
    Invalid { message: String, span: Range<usize> },
    #[error("{source} at bytes {}..{}", span.start, span.end)]
    Engine {
        source: stargeo::Error,
        span: Range<usize>,
    },
}

/// Families of generator-like names reserved for algebra elements.
const FAMILIES: [&str; 5] = ["sigma", "theta", "gamma", "eta", "rho"];

fn family_index(name: &str, families: &[&str]) -> bool {
    families.iter().any(|f| {
        name.strip_prefix(f)
            .is_some_and(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
    })
}

/// An algebra, its active product and preloaded relations.
#[derive(Clone, Debug)]
pub struct Session {
    pub kind: AlgebraKind,
    pub spec: Arc<AlgebraSpec<Coefficient>>,
    pub relations: RelationSet,
    moyal: Option<StarProduct>,
}

impl Session {
    pub fn new(kind: AlgebraKind, relations: RelationSet) -> Self {
        let (spec, moyal) = match kind {
            AlgebraKind::Sigma3 => (AlgebraSpec::euclidean(3), None),
            AlgebraKind::Theta3 => (AlgebraSpec::theta(3), None),
            AlgebraKind::Sta => (AlgebraSpec::spacetime(), None),
            AlgebraKind::Phase(d) => (AlgebraSpec::phase_space(d), None),
            AlgebraKind::Moyal(d) => {
                let mut pairs = vec![(Symbol::new("q"), Symbol::new("p"))];
                pairs.extend((1..=d).map(|i| (Symbol::new(&format!("q{i}")), Symbol::new(&format!("p{i}")))));
                (AlgebraSpec::euclidean(d), Some(StarProduct::moyal(pairs)))
            }
        };
        Self {
            kind,
            spec,
            relations,
            moyal,
        }
    }

    fn pseudoscalar_name(&self) -> String {
        format!("I{}", self.spec.dim())
    }

    /// Generators, the pseudoscalar, `i`, `hbar` and (for Moyal sessions) the
    /// canonical pairs.
    pub fn generator_table(&self) -> Vec<String> {
        let mut out: Vec<String> = self.spec.names().to_vec();
        out.push(self.pseudoscalar_name());
        if let Some(m) = &self.moyal {
            for (q, p) in m.pairs() {
                out.push(q.to_string());
                out.push(p.to_string());
            }
        }
        out.push("i".into());
        out.push("hbar".into());
        out
    }

    fn resolve(&self, name: &str, span: &Range<usize>) -> Result<Mv, EvalError> {
        if name == "i" {
            return Ok(Multivector::scalar(&self.spec, Coefficient::i()));
        }
        if let Some(k) = self.spec.index_of(name) {
            return Ok(Multivector::generator(&self.spec, k));
        }
        if name == self.pseudoscalar_name() {
            return Ok(Multivector::pseudoscalar(&self.spec));
        }
        let reserved = family_index(name, &FAMILIES)
            || family_index(name, &["I"])
            || (self.moyal.is_some() && family_index(name, &["q", "p"]) && !self.is_pair_symbol(name));
        if reserved {
            return Err(EvalError::UnknownSymbol {
                name: name.to_string(),
                span: span.clone(),
                table: self.generator_table().join(", "),
            });
        }
        Ok(Multivector::scalar(&self.spec, Coefficient::symbol(name)))
    }

    fn is_pair_symbol(&self, name: &str) -> bool {
        self.moyal
            .as_ref()
            .is_some_and(|m| m.pairs().iter().any(|(q, p)| q.to_string() == name || p.to_string() == name))
    }

    fn star(&self, a: &Mv, b: &Mv, span: &Range<usize>) -> Result<Mv, EvalError> {
        let out = match &self.moyal {
            Some(m) => moyal_clifford_star(m, a, b),
            None => a.star(b),
        };
        out.map_err(|source| EvalError::Engine {
            source,
            span: span.clone(),
        })
    }

    /// Parses and evaluates, reducing the result by the session relations.
    pub fn eval_str(&self, src: &str) -> Result<Mv, EvalError> {
        let e = parse(src)?;
        self.eval(&e)
    }

    pub fn eval(&self, e: &Expr) -> Result<Mv, EvalError> {
        Ok(self.eval_node(e)?.reduce(&self.relations))
    }

    fn eval_node(&self, e: &Expr) -> Result<Mv, EvalError> {
        let span = &e.span;
        let engine = |source| EvalError::Engine {
            source,
            span: span.clone(),
        };
        Ok(match &e.kind {
            ExprKind::Num(n) => {
                let g = GaussianRational::real(n.clone());
                Multivector::scalar(&self.spec, Coefficient::constant(g))
            }
            ExprKind::Ident(name) => self.resolve(name, span)?,
            ExprKind::Neg(x) => -&self.eval_node(x)?,
            ExprKind::Binary(op, a, b) => {
                let (a, b) = (self.eval_node(a)?, self.eval_node(b)?);
                let out = match op {
                    BinOp::Add => &a + &b,
                    BinOp::Sub => &a - &b,
                    BinOp::Star => self.star(&a, &b, span)?,
                    BinOp::Outer => outer(&a, &b).map_err(engine)?,
                    BinOp::Inner | BinOp::Dot => inner(&a, &b).map_err(engine)?,
                };
                out.reduce(&self.relations)
            }
            ExprKind::Pow(x, n) => {
                let base = self.eval_node(x)?;
                let mut acc = Multivector::one(&self.spec);
                for _ in 0..*n {
                    acc = self.star(&acc, &base, span)?.reduce(&self.relations);
                }
                acc
            }
            ExprKind::Call(func, args) => {
                let x = self.eval_node(&args[0])?;
                match func {
                    Func::Grade => {
                        let n = self.eval_node(&args[1])?;
                        let k = n
                            .as_scalar()
                            .and_then(|c| c.as_constant())
                            .filter(|g| g.im.is_zero() && g.re.is_integer())
                            .and_then(|g| g.re.to_integer().to_usize())
                            .ok_or_else(|| EvalError::Invalid {
                                message: "grade index must be a non-negative integer".into(),
                                span: args[1].span.clone(),
                            })?;
                        x.grade_project(k).map_err(engine)?
                    }
                    Func::Rev => x.reverse(),
                    Func::Hodge => x.hodge(),
                    Func::Tr => Multivector::scalar(&self.spec, x.trace()),
                    Func::Berezin => Multivector::scalar(&self.spec, x.berezin()),
                    Func::Expb => exp_bivector(&x).map_err(engine)?.rotor.into_inner(),
                    Func::Dual => dual(&x),
                }
            }
        })
    }
}
