//! The polynomial text grammar.
//!
//! Variables `x1..x9`, `y`, `t`; integer or `a/b` rational coefficients;
//! operators `+ - * ^`.  Implicit multiplication is rejected: `2y` is an
//! error, `2*y` is not.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;

use super::{MultiPoly, Ring};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigRational),
    Var(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn lex(s: &str) -> Result<Vec<Token>> {
    let mut out = vec![];
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' => i += 1,
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
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = bytes[start..i].iter().collect::<String>().parse().unwrap();
                // Optional /denominator directly after the integer.
                if i < bytes.len() && bytes[i] == '/' {
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(Error::Parse(format!("expected denominator in `{s}`")));
                    }
                    let den: BigInt = bytes[dstart..i].iter().collect::<String>().parse().unwrap();
                    if den == BigInt::from(0) {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    out.push(Token::Num(BigRational::new(num, den)));
                } else {
                    out.push(Token::Num(BigRational::from_integer(num)));
                }
            }
            'a'..='z' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token::Var(bytes[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}` in `{s}`"))),
        }
    }
    Ok(out)
}

/// Parse a polynomial over the given ring.  Every variable must name a ring
/// variable; rational coefficients are mapped through the ring's field.
pub fn parse_poly(s: &str, ring: &Ring) -> Result<MultiPoly> {
    let tokens = lex(s)?;
    let mut pos = 0;
    let poly = parse_sum(&tokens, &mut pos, ring, s)?;
    if pos != tokens.len() {
        return Err(Error::Parse(format!("trailing tokens in `{s}`")));
    }
    Ok(poly)
}

fn parse_sum(tokens: &[Token], pos: &mut usize, ring: &Ring, src: &str) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero(ring);
    let mut first = true;
    loop {
        // Sign prefix (possibly several, e.g. `- -3` is rejected by needing
        // exactly one sign between terms; a single leading sign is fine).
        let mut negate = false;
        match tokens.get(*pos) {
            Some(Token::Plus) => {
                *pos += 1;
            }
            Some(Token::Minus) => {
                negate = true;
                *pos += 1;
            }
            None if !first => break,
            None => return Err(Error::Parse(format!("empty polynomial in `{src}`"))),
            _ if first => {}
            Some(t) => return Err(Error::Parse(format!("expected + or - before {t:?} in `{src}`"))),
        }
        let term = parse_term(tokens, pos, ring, src)?;
        acc = if negate { acc.sub(&term) } else { acc.add(&term) };
        first = false;
        if *pos == tokens.len() {
            break;
        }
    }
    Ok(acc)
}

fn parse_term(tokens: &[Token], pos: &mut usize, ring: &Ring, src: &str) -> Result<MultiPoly> {
    let mut acc = parse_factor(tokens, pos, ring, src)?;
    while let Some(Token::Star) = tokens.get(*pos) {
        *pos += 1;
        let f = parse_factor(tokens, pos, ring, src)?;
        acc = acc.mul(&f);
    }
    Ok(acc)
}

fn parse_factor(tokens: &[Token], pos: &mut usize, ring: &Ring, src: &str) -> Result<MultiPoly> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| Error::Parse(format!("unexpected end of input in `{src}`")))?
        .clone();
    *pos += 1;
    let base = match tok {
        Token::Num(r) => {
            let c = ring.ctx.from_rational(&r)?;
            return match tokens.get(*pos) {
                Some(Token::Caret) => {
                    *pos += 1;
                    let e = parse_exponent(tokens, pos, src)?;
                    let mut v = r.clone();
                    let mut acc = BigRational::one();
                    let mut k = e;
                    while k > 0 {
                        if k & 1 == 1 {
                            acc *= &v;
                        }
                        v = &v * &v;
                        k >>= 1;
                    }
                    Ok(MultiPoly::constant(ring, ring.ctx.from_rational(&acc)?))
                }
                _ => Ok(MultiPoly::constant(ring, c)),
            };
        }
        Token::Var(name) => {
            let idx = ring.var_index(&name).ok_or_else(|| {
                Error::Parse(format!("unknown variable `{name}` in `{src}` (ring has {:?})", ring.names))
            })?;
            MultiPoly::var(ring, idx)
        }
        other => return Err(Error::Parse(format!("expected coefficient or variable, got {other:?} in `{src}`"))),
    };
    match tokens.get(*pos) {
        Some(Token::Caret) => {
            *pos += 1;
            let e = parse_exponent(tokens, pos, src)?;
            Ok(base.pow(e))
        }
        _ => Ok(base),
    }
}

fn parse_exponent(tokens: &[Token], pos: &mut usize, src: &str) -> Result<u32> {
    match tokens.get(*pos) {
        Some(Token::Num(r)) if r.is_integer() => {
            *pos += 1;
            use num::ToPrimitive;
            r.to_integer()
                .to_u32()
                .ok_or_else(|| Error::Parse(format!("exponent out of range in `{src}`")))
        }
        _ => Err(Error::Parse(format!("expected integer exponent in `{src}`"))),
    }
}
