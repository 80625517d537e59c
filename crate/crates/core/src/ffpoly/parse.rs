//! Text syntax for elements of `F_q(t)`.
//!
//! Integers are read mod p, `t` is the function-field variable, and `w` is
//! the polynomial-basis generator of `F_{p^k}` (only when `k > 1`). The
//! grammar accepts `+ - * / ^`, parentheses and implicit products such as
//! `2t^3` or `(w+1)t`.

use super::field::FqField;
use super::poly::FqPoly;
use super::ratfunc::RatFunc;
use super::FqElem;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
enum Tok {
    Num(u64),
    T,
    W,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(v as u64))
                            .ok_or_else(|| Error::parse(s, "integer literal too large"))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(n));
            }
            _ => {
                chars.next();
                out.push(match c {
                    't' | 'x' => Tok::T,
                    'w' => Tok::W,
                    '+' => Tok::Plus,
                    '-' | '\u{2212}' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    other => return Err(Error::parse(s, format!("unexpected character `{other}`"))),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    field: &'a FqField,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn err(&self, reason: &str) -> Error {
        Error::parse(self.src, reason)
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(op @ (Tok::Plus | Tok::Minus)) = self.peek() {
            self.bump();
            let rhs = self.term()?;
            acc = if op == Tok::Plus { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    acc = acc.div(&self.unary()?)?;
                }
                // implicit product: 2t, 3(t+1), (t+1)(t+2)
                Some(Tok::T | Tok::W | Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.peek() == Some(Tok::Minus) {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        if self.peek() == Some(Tok::Plus) {
            self.bump();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Num(e)) => Ok(base.pow(e)),
                _ => Err(self.err("exponent must be a non-negative integer")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatFunc> {
        let f = self.field;
        match self.bump() {
            Some(Tok::Num(n)) => Ok(RatFunc::from_poly(FqPoly::constant(
                f,
                f.from_int((n % f.characteristic() as u64) as i64),
            ))),
            Some(Tok::T) => Ok(RatFunc::from_poly(FqPoly::t(f))),
            Some(Tok::W) => {
                if f.degree() == 1 {
                    return Err(self.err("`w` is only available over F_{p^k} with k > 1"));
                }
                Ok(RatFunc::from_poly(FqPoly::constant(f, f.generator())))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(self.err("missing `)`"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected a number, `t`, `w` or `(`")),
        }
    }
}

/// Parses a rational function of `t` over `field`.
pub fn parse_ratfunc(field: &FqField, s: &str) -> Result<RatFunc> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::parse(s, "empty expression"));
    }
    let mut p = Parser {
        src: s,
        toks,
        pos: 0,
        field,
    };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(s, "trailing input"));
    }
    Ok(r)
}

/// Parses a polynomial in `t`.
pub fn parse_poly(field: &FqField, s: &str) -> Result<FqPoly> {
    parse_ratfunc(field, s)?
        .as_poly()
        .cloned()
        .ok_or_else(|| Error::parse(s, "expected a polynomial"))
}

/// Parses a constant of `F_q`.
pub fn parse_elem(field: &FqField, s: &str) -> Result<FqElem> {
    let p = parse_poly(field, s)?;
    match p.degree() {
        None => Ok(FqElem::ZERO),
        Some(0) => Ok(p.coeff(0)),
        _ => Err(Error::parse(s, "expected a constant")),
    }
}
