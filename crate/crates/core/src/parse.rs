//! Text syntax for field elements and polynomials.
//!
//! One small expression grammar serves all three: sums of products of
//! integers, variables and parenthesised subexpressions, with `^` for
//! non-negative integer powers. `*` may be omitted between factors.

use crate::bpoly::{BiPoly, Var};
use crate::error::{Error, Result};
use crate::gf::{Elt, FieldCtx};
use crate::upoly::UniPoly;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(u128),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s.parse().map_err(|_| Error::Parse(format!("number too large: {s}")))?;
                out.push(Token::Num(n));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}' in \"{text}\""))),
        }
    }
    Ok(out)
}

/// A ring the expression grammar can be evaluated in.
pub(crate) trait Algebra {
    type Value: Clone;
    fn integer(&self, n: u128) -> Self::Value;
    fn variable(&self, name: &str) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
}

struct Parser<'a, A: Algebra> {
    tokens: Vec<Token>,
    pos: usize,
    alg: &'a A,
}

impl<A: Algebra> Parser<'_, A> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<A::Value> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { self.alg.neg(&first) } else { first };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.alg.add(&acc, &t);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.alg.add(&acc, &self.alg.neg(&t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<A::Value> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = self.alg.mul(&acc, &f);
                }
                Some(Token::Num(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    let f = self.power()?;
                    acc = self.alg.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<A::Value> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let exp = match self.next() {
                Some(Token::Num(n)) => n,
                Some(Token::LParen) => match (self.next(), self.next()) {
                    (Some(Token::Num(n)), Some(Token::RParen)) => n,
                    _ => return Err(Error::Parse("expected integer exponent".into())),
                },
                _ => return Err(Error::Parse("expected integer exponent".into())),
            };
            return Ok(self.pow(base, exp));
        }
        Ok(base)
    }

    fn pow(&self, base: A::Value, mut exp: u128) -> A::Value {
        let mut acc = self.alg.integer(1);
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.alg.mul(&acc, &b);
            }
            exp >>= 1;
            if exp > 0 {
                b = self.alg.mul(&b, &b);
            }
        }
        acc
    }

    fn atom(&mut self) -> Result<A::Value> {
        match self.next() {
            Some(Token::Num(n)) => Ok(self.alg.integer(n)),
            Some(Token::Ident(name)) => self.alg.variable(&name),
            Some(Token::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(v),
                    _ => Err(Error::Parse("unbalanced parentheses".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn evaluate<A: Algebra>(alg: &A, text: &str) -> Result<A::Value> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0, alg };
    let v = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input in \"{text}\"")));
    }
    Ok(v)
}

fn reduce_int(ctx: &FieldCtx, n: u128) -> Elt {
    ctx.from_int((n % ctx.characteristic() as u128) as i128)
}

fn generator_of(ctx: &FieldCtx, name: &str) -> Result<Elt> {
    match ctx.generator() {
        Some(g) if name == ctx.symbol() => Ok(g),
        _ => Err(Error::Parse(format!("unknown symbol '{name}' for {}", ctx.describe()))),
    }
}

struct EltAlgebra<'a>(&'a FieldCtx);

impl Algebra for EltAlgebra<'_> {
    type Value = Elt;
    fn integer(&self, n: u128) -> Elt {
        reduce_int(self.0, n)
    }
    fn variable(&self, name: &str) -> Result<Elt> {
        generator_of(self.0, name)
    }
    fn add(&self, a: &Elt, b: &Elt) -> Elt {
        self.0.add(*a, *b)
    }
    fn neg(&self, a: &Elt) -> Elt {
        self.0.neg(*a)
    }
    fn mul(&self, a: &Elt, b: &Elt) -> Elt {
        self.0.mul(*a, *b)
    }
}

struct UniAlgebra<'a>(&'a FieldCtx);

impl Algebra for UniAlgebra<'_> {
    type Value = UniPoly;
    fn integer(&self, n: u128) -> UniPoly {
        UniPoly::constant(self.0, reduce_int(self.0, n))
    }
    fn variable(&self, name: &str) -> Result<UniPoly> {
        match name {
            "x" | "X" => Ok(UniPoly::x(self.0)),
            other => Ok(UniPoly::constant(self.0, generator_of(self.0, other)?)),
        }
    }
    fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a + b
    }
    fn neg(&self, a: &UniPoly) -> UniPoly {
        -a
    }
    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a * b
    }
}

struct BiAlgebra<'a>(&'a FieldCtx);

impl Algebra for BiAlgebra<'_> {
    type Value = BiPoly;
    fn integer(&self, n: u128) -> BiPoly {
        BiPoly::constant(self.0, reduce_int(self.0, n))
    }
    fn variable(&self, name: &str) -> Result<BiPoly> {
        match name {
            "x" => Ok(BiPoly::var(self.0, Var::X)),
            "z" => Ok(BiPoly::var(self.0, Var::Z)),
            other => Ok(BiPoly::constant(self.0, generator_of(self.0, other)?)),
        }
    }
    fn add(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        a + b
    }
    fn neg(&self, a: &BiPoly) -> BiPoly {
        -a
    }
    fn mul(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        a * b
    }
}

pub fn parse_elt(ctx: &FieldCtx, text: &str) -> Result<Elt> {
    evaluate(&EltAlgebra(ctx), text)
}

/// Univariate polynomial in `x` (or `X`).
pub fn parse_uni(ctx: &FieldCtx, text: &str) -> Result<UniPoly> {
    evaluate(&UniAlgebra(ctx), text)
}

/// Bivariate polynomial in `x` and `z`.
pub fn parse_bi(ctx: &FieldCtx, text: &str) -> Result<BiPoly> {
    evaluate(&BiAlgebra(ctx), text)
}
