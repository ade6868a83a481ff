//! Expression syntax shared by the twisted, Ore and base algebras.
//!
//! ```text
//! expr   := [+|-] term { (+|-) term }
//! term   := factor { [*] factor }          juxtaposition multiplies
//! factor := atom [ ^ [-] INT ]
//! atom   := INT [ / INT ] | i | IDENT | ( expr )
//! ```
//!
//! Identifiers are `x1`, `x2` (twisted), `t` (Ore) and the base variables
//! (`z`, or `g1, g2, …`). Products are noncommutative, left to right.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::base::BaseAlgebra;
use crate::error::{Error, Result};
use crate::ore::{LaurentOrePoly, OreAlgebra};
use crate::scalar::{self, Scalar};
use crate::twisted::{TwistedAlgebra, TwistedSeries};
use crate::word::Word;

/// Largest accepted exponent; anything bigger overflows every cap anyway.
pub const MAX_EXPONENT: i64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Plus => f.write_str("+"),
            Tok::Minus => f.write_str("-"),
            Tok::Star => f.write_str("*"),
            Tok::Slash => f.write_str("/"),
            Tok::Caret => f.write_str("^"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn parse_error(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let tok = match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    bump(&mut chars);
                }
                out.push((Tok::Int(digits.parse().expect("ascii digits")), pos));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    name.push(d);
                    bump(&mut chars);
                }
                out.push((Tok::Ident(name), pos));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(parse_error(pos, format!("unexpected character {other:?}"))),
        };
        bump(&mut chars);
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

/// A parsed expression, not yet interpreted in any algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(BigRational),
    ImaginaryUnit,
    Ident(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64, Pos),
}

impl Expr {
    /// Whether identifier `name` occurs anywhere.
    pub fn mentions(&self, name: &str) -> bool {
        match self {
            Expr::Number(_) | Expr::ImaginaryUnit => false,
            Expr::Ident(s, _) => s == name,
            Expr::Neg(a) | Expr::Pow(a, _, _) => a.mentions(name),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.mentions(name) || b.mentions(name),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        parse_error(self.pos(), format!("expected {wanted}, found {}", self.peek()))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = match self.peek() {
            Tok::Minus => {
                self.next();
                Expr::Neg(Box::new(self.term()?))
            }
            Tok::Plus => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.next();
                }
                Tok::Int(_) | Tok::Ident(_) | Tok::LParen => {}
                _ => return Ok(acc),
            }
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(atom);
        }
        let pos = self.next().1;
        let negative = if *self.peek() == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        match self.next() {
            (Tok::Int(n), p) => {
                let n = n
                    .to_i64()
                    .filter(|n| *n <= MAX_EXPONENT)
                    .ok_or_else(|| parse_error(p, format!("exponent exceeds {MAX_EXPONENT}")))?;
                Ok(Expr::Pow(Box::new(atom), if negative { -n } else { n }, pos))
            }
            (tok, p) => Err(parse_error(p, format!("expected an integer exponent, found {tok}"))),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            (Tok::Int(n), _) => {
                if *self.peek() == Tok::Slash {
                    self.next();
                    match self.next() {
                        (Tok::Int(d), p) if d.is_zero() => Err(parse_error(p, "zero denominator")),
                        (Tok::Int(d), _) => Ok(Expr::Number(BigRational::new(n, d))),
                        (tok, p) => Err(parse_error(p, format!("expected a denominator, found {tok}"))),
                    }
                } else {
                    Ok(Expr::Number(BigRational::from_integer(n)))
                }
            }
            (Tok::Ident(s), _) if s == "i" => Ok(Expr::ImaginaryUnit),
            (Tok::Ident(s), p) => Ok(Expr::Ident(s, p)),
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.next() {
                    (Tok::RParen, _) => Ok(inner),
                    (tok, p) => Err(parse_error(p, format!("expected ')', found {tok}"))),
                }
            }
            (tok, p) => Err(parse_error(p, format!("expected a term, found {tok}"))),
        }
    }
}

/// Parses `src` into an expression tree.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut parser = Parser { toks: lex(src)?, at: 0 };
    let e = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(e)
}

/// A ring in which expression trees are evaluated.
trait Target {
    type V: Clone;
    fn scalar(&self, c: &Scalar) -> Result<Self::V>;
    fn ident(&self, name: &str, pos: Pos) -> Result<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    fn one(&self) -> Self::V;
    /// Multiplicative inverse where one is available syntactically.
    fn inverse(&self, e: &Expr, pos: Pos) -> Result<Self::V>;
}

fn eval<T: Target>(t: &T, e: &Expr) -> Result<T::V> {
    match e {
        Expr::Number(r) => t.scalar(&scalar::from_rational(r.clone())),
        Expr::ImaginaryUnit => t.scalar(&scalar::imag_unit()),
        Expr::Ident(s, p) => t.ident(s, *p),
        Expr::Neg(a) => Ok(t.neg(&eval(t, a)?)),
        Expr::Add(a, b) => Ok(t.add(&eval(t, a)?, &eval(t, b)?)),
        Expr::Sub(a, b) => Ok(t.add(&eval(t, a)?, &t.neg(&eval(t, b)?))),
        Expr::Mul(a, b) => t.mul(&eval(t, a)?, &eval(t, b)?),
        Expr::Pow(a, n, p) => {
            let unit = if *n < 0 { t.inverse(a, *p)? } else { eval(t, a)? };
            let mut acc = t.one();
            for _ in 0..n.unsigned_abs() {
                acc = t.mul(&acc, &unit)?;
            }
            Ok(acc)
        }
    }
}

/// A constant subexpression, if `e` is built from numbers and `i` only.
fn constant_value(e: &Expr) -> Option<Scalar> {
    Some(match e {
        Expr::Number(r) => scalar::from_rational(r.clone()),
        Expr::ImaginaryUnit => scalar::imag_unit(),
        Expr::Ident(..) => return None,
        Expr::Neg(a) => -constant_value(a)?,
        Expr::Add(a, b) => constant_value(a)? + constant_value(b)?,
        Expr::Sub(a, b) => constant_value(a)? - constant_value(b)?,
        Expr::Mul(a, b) => constant_value(a)? * constant_value(b)?,
        Expr::Pow(a, n, _) => scalar::powi(&constant_value(a)?, *n).ok()?,
    })
}

fn constant_inverse(e: &Expr, pos: Pos) -> Result<Scalar> {
    match constant_value(e) {
        Some(c) if !c.is_zero() => Ok(Scalar::one() / c),
        _ => Err(parse_error(
            pos,
            "negative exponents apply only to t and nonzero constants",
        )),
    }
}

struct BaseTarget<'a, A>(&'a A);

impl<A: BaseAlgebra> Target for BaseTarget<'_, A> {
    type V = A::Elem;
    fn scalar(&self, c: &Scalar) -> Result<A::Elem> {
        self.0.embed_scalar(c)
    }
    fn ident(&self, name: &str, _pos: Pos) -> Result<A::Elem> {
        self.0
            .variable(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
    fn add(&self, a: &A::Elem, b: &A::Elem) -> A::Elem {
        self.0.add(a, b)
    }
    fn neg(&self, a: &A::Elem) -> A::Elem {
        self.0.neg(a)
    }
    fn mul(&self, a: &A::Elem, b: &A::Elem) -> Result<A::Elem> {
        Ok(self.0.mul(a, b))
    }
    fn one(&self) -> A::Elem {
        self.0.one()
    }
    fn inverse(&self, e: &Expr, pos: Pos) -> Result<A::Elem> {
        self.0.embed_scalar(&constant_inverse(e, pos)?)
    }
}

struct TwistedTarget<'a, A>(&'a TwistedAlgebra<A>);

impl<A: BaseAlgebra> Target for TwistedTarget<'_, A> {
    type V = TwistedSeries<A::Elem>;
    fn scalar(&self, c: &Scalar) -> Result<Self::V> {
        Ok(self.0.constant(self.0.base().embed_scalar(c)?))
    }
    fn ident(&self, name: &str, pos: Pos) -> Result<Self::V> {
        match name {
            "x1" => Ok(self.0.x1()),
            "x2" => Ok(self.0.x2()),
            _ => Ok(self.0.constant(BaseTarget(self.0.base()).ident(name, pos)?)),
        }
    }
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V {
        self.0.add(a, b)
    }
    fn neg(&self, a: &Self::V) -> Self::V {
        self.0.neg(a)
    }
    fn mul(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        Ok(self.0.mul(a, b))
    }
    fn one(&self) -> Self::V {
        self.0.one()
    }
    fn inverse(&self, e: &Expr, pos: Pos) -> Result<Self::V> {
        self.scalar(&constant_inverse(e, pos)?)
    }
}

struct OreTarget<'a, A>(&'a OreAlgebra<A>);

impl<A: BaseAlgebra> Target for OreTarget<'_, A> {
    type V = LaurentOrePoly<A::Elem>;
    fn scalar(&self, c: &Scalar) -> Result<Self::V> {
        Ok(self.0.constant(self.0.base().embed_scalar(c)?))
    }
    fn ident(&self, name: &str, pos: Pos) -> Result<Self::V> {
        match name {
            "t" => Ok(self.0.t()),
            _ => Ok(self.0.constant(BaseTarget(self.0.base()).ident(name, pos)?)),
        }
    }
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V {
        self.0.add(a, b)
    }
    fn neg(&self, a: &Self::V) -> Self::V {
        self.0.neg(a)
    }
    fn mul(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        self.0.mul(a, b)
    }
    fn one(&self) -> Self::V {
        self.0.one()
    }
    fn inverse(&self, e: &Expr, pos: Pos) -> Result<Self::V> {
        if matches!(e, Expr::Ident(s, _) if s == "t") {
            return Ok(self.0.term(self.0.base().one(), -1));
        }
        self.scalar(&constant_inverse(e, pos)?)
    }
}

/// Parses an element of the base algebra.
pub fn parse_base<A: BaseAlgebra>(base: &A, src: &str) -> Result<A::Elem> {
    eval(&BaseTarget(base), &parse_expr(src)?)
}

/// Parses an element of the twisted algebra; fails if the result does not
/// fit the caps.
pub fn parse_twisted<A: BaseAlgebra>(alg: &TwistedAlgebra<A>, src: &str) -> Result<TwistedSeries<A::Elem>> {
    let e = parse_expr(src)?;
    if e.mentions("t") {
        return Err(Error::UnknownGenerator("t".into()));
    }
    let f = eval(&TwistedTarget(alg), &e)?;
    if f.truncated() {
        return Err(Error::CapOverflow(format!(
            "{src:?} exceeds word length {} or base degree {}",
            alg.caps().max_word_len,
            alg.caps().max_degree
        )));
    }
    Ok(f)
}

/// Parses an element of the Ore extension.
pub fn parse_ore<A: BaseAlgebra>(alg: &OreAlgebra<A>, src: &str) -> Result<LaurentOrePoly<A::Elem>> {
    let e = parse_expr(src)?;
    for x in ["x1", "x2"] {
        if e.mentions(x) {
            return Err(Error::UnknownGenerator(x.into()));
        }
    }
    eval(&OreTarget(alg), &e)
}

/// An element of either algebra, chosen by the generators it mentions.
#[derive(Debug, Clone, PartialEq)]
pub enum Parsed<E> {
    Twisted(TwistedSeries<E>),
    Ore(LaurentOrePoly<E>),
}

/// Parses `src` as an Ore element if it mentions `t`, otherwise as a
/// twisted series. Mixing `t` with `x1`/`x2` is an error.
pub fn parse_element<A: BaseAlgebra>(
    twisted: &TwistedAlgebra<A>,
    ore: &OreAlgebra<A>,
    src: &str,
) -> Result<Parsed<A::Elem>> {
    let e = parse_expr(src)?;
    let has_x = e.mentions("x1") || e.mentions("x2");
    if e.mentions("t") {
        if has_x {
            return Err(Error::InvalidArgument(
                "an expression cannot mix t with x1 or x2".into(),
            ));
        }
        return Ok(Parsed::Ore(eval(&OreTarget(ore), &e)?));
    }
    parse_twisted(twisted, src).map(Parsed::Twisted)
}

/// Parses a word written with letters `1`, `2`, or `e` for the empty word.
pub fn parse_word(src: &str) -> Result<Word> {
    src.trim().parse()
}
