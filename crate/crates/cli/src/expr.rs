//! Expression language: tokenizer, recursive-descent parser and canonical
//! formatter.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/\' | '|' | '.') factor)*
//! factor := '-' factor | primary ('^' int)?
//! primary:= number | ident | func '(' args ')' | '(' expr ')'
//! ```
//!
//! Numbers are non-negative integers or fractions `n/d`.

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

fn syntax<T>(offset: usize, message: impl Into<String>) -> Result<T, SyntaxError> {
    Err(SyntaxError {
        offset,
        message: message.into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Star,
    Outer,
    Inner,
    Dot,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Star => "*",
            BinOp::Outer => "/\\",
            BinOp::Inner => "|",
            BinOp::Dot => ".",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Grade,
    Rev,
    Hodge,
    Tr,
    Berezin,
    Expb,
    Dual,
}

impl Func {
    pub const ALL: [Func; 7] = [
        Func::Grade,
        Func::Rev,
        Func::Hodge,
        Func::Tr,
        Func::Berezin,
        Func::Expb,
        Func::Dual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Grade => "grade",
            Func::Rev => "rev",
            Func::Hodge => "hodge",
            Func::Tr => "tr",
            Func::Berezin => "berezin",
            Func::Expb => "expb",
            Func::Dual => "dual",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Grade => 2,
            _ => 1,
        }
    }

    fn lookup(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Num(BigRational),
    Ident(String),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(Func, Vec<Expr>),
}

/// A node with the byte range it was parsed from. Equality ignores spans.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Range<usize>,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    pub fn new(kind: ExprKind) -> Self {
        Self { kind, span: 0..0 }
    }

    pub fn num(n: i64, d: i64) -> Self {
        Self::new(ExprKind::Num(BigRational::new(n.into(), d.into())))
    }

    pub fn ident(name: &str) -> Self {
        Self::new(ExprKind::Ident(name.to_string()))
    }

    pub fn neg(e: Expr) -> Self {
        Self::new(ExprKind::Neg(Box::new(e)))
    }

    pub fn binary(op: BinOp, a: Expr, b: Expr) -> Self {
        Self::new(ExprKind::Binary(op, Box::new(a), Box::new(b)))
    }

    pub fn pow(e: Expr, n: u32) -> Self {
        Self::new(ExprKind::Pow(Box::new(e), n))
    }

    pub fn call(f: Func, args: Vec<Expr>) -> Self {
        Self::new(ExprKind::Call(f, args))
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Binary(op, ..) => op.precedence(),
            ExprKind::Neg(_) => 3,
            ExprKind::Pow(..) => 4,
            ExprKind::Num(n) if n.is_negative() => 3,
            _ => 5,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Num(n) => {
                if n.denom().is_one() {
                    write!(f, "{}", n.numer())
                } else {
                    write!(f, "{}/{}", n.numer(), n.denom())
                }
            }
            ExprKind::Ident(s) => f.write_str(s),
            ExprKind::Neg(e) => {
                f.write_str("-")?;
                write_operand(f, e, e.precedence() < 3)
            }
            ExprKind::Binary(op, a, b) => {
                let p = op.precedence();
                write_operand(f, a, a.precedence() < p)?;
                write!(f, " {} ", op.symbol())?;
                write_operand(f, b, b.precedence() <= p)
            }
            ExprKind::Pow(e, n) => {
                write_operand(f, e, e.precedence() < 5)?;
                write!(f, "^{n}")
            }
            ExprKind::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Op(BinOp),
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number `{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Op(op) => write!(f, "`{}`", op.symbol()),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, Range<usize>)>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = src[start..i].parse().expect("digits");
                let mut denom = BigInt::one();
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    let d0 = i + 1;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    denom = src[d0..i].parse().expect("digits");
                    if denom.is_zero() {
                        return syntax(d0, "zero denominator");
                    }
                }
                Tok::Num(BigRational::new(numer, denom))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                Tok::Ident(src[start..i].to_string())
            }
            b'/' if bytes.get(i + 1) == Some(&b'\\') => {
                i += 2;
                Tok::Op(BinOp::Outer)
            }
            _ => {
                i += 1;
                match c {
                    b'+' => Tok::Op(BinOp::Add),
                    b'-' => Tok::Op(BinOp::Sub),
                    b'*' => Tok::Op(BinOp::Star),
                    b'|' => Tok::Op(BinOp::Inner),
                    b'.' => Tok::Op(BinOp::Dot),
                    b'^' => Tok::Caret,
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    b',' => Tok::Comma,
                    _ => {
                        let ch = src[start..].chars().next().expect("non-empty");
                        return syntax(start, format!("unexpected character `{ch}`"));
                    }
                }
            }
        };
        out.push((tok, start..i));
    }
    out.push((Tok::End, src.len()..src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Range<usize>)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Range<usize> {
        self.toks[self.pos].1.clone()
    }

    fn bump(&mut self) -> (Tok, Range<usize>) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, SyntaxError> {
        syntax(self.span().start, format!("expected {wanted}, found {}", self.peek()))
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<Range<usize>, SyntaxError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            self.unexpected(wanted)
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        while let Tok::Op(op @ (BinOp::Add | BinOp::Sub)) = *self.peek() {
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.start..rhs.span.end;
            lhs = Expr {
                kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.factor()?;
        while let Tok::Op(op @ (BinOp::Star | BinOp::Outer | BinOp::Inner | BinOp::Dot)) = *self.peek() {
            self.bump();
            let rhs = self.factor()?;
            let span = lhs.span.start..rhs.span.end;
            lhs = Expr {
                kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, SyntaxError> {
        if *self.peek() == Tok::Op(BinOp::Sub) {
            let start = self.bump().1.start;
            let inner = self.factor()?;
            let span = start..inner.span.end;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                span,
            });
        }
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Num(n), sp) => {
                let exp = n
                    .is_integer()
                    .then(|| u32::try_from(n.to_integer()).ok())
                    .flatten();
                match exp {
                    Some(k) => Ok(Expr {
                        span: base.span.start..sp.end,
                        kind: ExprKind::Pow(Box::new(base), k),
                    }),
                    None => syntax(sp.start, "exponent must be a non-negative integer"),
                }
            }
            (t, sp) => syntax(sp.start, format!("expected integer exponent, found {t}")),
        }
    }

    fn primary(&mut self) -> Result<Expr, SyntaxError> {
        let (tok, span) = self.bump();
        match tok {
            Tok::Num(n) => Ok(Expr {
                kind: ExprKind::Num(n),
                span,
            }),
            Tok::Ident(name) => {
                if *self.peek() != Tok::LParen {
                    return Ok(Expr {
                        kind: ExprKind::Ident(name),
                        span,
                    });
                }
                let Some(func) = Func::lookup(&name) else {
                    return syntax(span.start, format!("unknown function `{name}`"));
                };
                self.bump();
                let mut args = vec![self.expr()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    args.push(self.expr()?);
                }
                let close = self.expect(Tok::RParen, "`,` or `)`")?;
                if args.len() != func.arity() {
                    return syntax(
                        span.start,
                        format!("`{}` takes {} argument(s), got {}", func.name(), func.arity(), args.len()),
                    );
                }
                Ok(Expr {
                    kind: ExprKind::Call(func, args),
                    span: span.start..close.end,
                })
            }
            Tok::LParen => {
                let mut inner = self.expr()?;
                let close = self.expect(Tok::RParen, "`)`")?;
                inner.span = span.start..close.end;
                Ok(inner)
            }
            other => syntax(span.start, format!("expected an operand, found {other}")),
        }
    }
}

/// Parses a complete expression.
pub fn parse(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.unexpected("an operator or end of input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        let e = parse("a + b * c^2 - d").unwrap();
        let expect = Expr::binary(
            BinOp::Sub,
            Expr::binary(
                BinOp::Add,
                Expr::ident("a"),
                Expr::binary(BinOp::Star, Expr::ident("b"), Expr::pow(Expr::ident("c"), 2)),
            ),
            Expr::ident("d"),
        );
        assert_eq!(e, expect);
        assert_eq!(e.to_string(), "a + b * c^2 - d");
    }

    #[test]
    fn star_node() {
        let e = parse("sigma1 * sigma2").unwrap();
        assert_eq!(e, Expr::binary(BinOp::Star, Expr::ident("sigma1"), Expr::ident("sigma2")));
    }

    #[test]
    fn grade_call() {
        let e = parse("grade(sigma1*sigma2, 2)").unwrap();
        let ExprKind::Call(Func::Grade, args) = &e.kind else {
            panic!("not a call: {e:?}")
        };
        assert_eq!(args[1], Expr::num(2, 1));
        assert_eq!(e.span, 0..23);
    }

    #[test]
    fn outer_and_fractions() {
        let e = parse("3/4 /\\ x").unwrap();
        assert_eq!(e, Expr::binary(BinOp::Outer, Expr::num(3, 4), Expr::ident("x")));
        assert_eq!(e.to_string(), "3/4 /\\ x");
    }

    #[test]
    fn parentheses_kept_where_needed() {
        for src in ["a - (b - c)", "(a + b) * c", "-(a + b)", "(-a)^2", "(a^2)^3", "a * -b", "--a"] {
            let e = parse(src).unwrap();
            assert_eq!(e.to_string(), src);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
        assert_eq!(parse("((a))").unwrap().to_string(), "a");
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let err = parse("a + * b").unwrap_err();
        assert_eq!(err.offset, 4);
        assert_eq!(parse("a $ b").unwrap_err().offset, 2);
        assert_eq!(parse("(a + b").unwrap_err().offset, 6);
        assert_eq!(parse("x^y").unwrap_err().offset, 2);
        assert_eq!(parse("foo(x)").unwrap_err().offset, 0);
        assert_eq!(parse("grade(x)").unwrap_err().offset, 0);
        assert_eq!(parse("1/0").unwrap_err().offset, 2);
        assert_eq!(parse("a b").unwrap_err().offset, 2);
    }
}
