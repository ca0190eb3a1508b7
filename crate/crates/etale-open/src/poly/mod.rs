//! Multivariate polynomials over a [`FieldCtx`], with graded-lex term order.
//!
//! Rings fix a variable list; by convention the *last* named variable is the
//! fiber variable `y` of an etale pair and is the most significant in the
//! term order (grlex breaks degree ties by comparing exponents from the last
//! variable down).  Auxiliary variables appended later (the Rabinowitsch `t`)
//! sort above `y`, which changes nothing about ideal membership answers.

pub mod algnum;
pub mod groebner;
pub mod parse;
pub mod resultant;
pub mod uni;

use std::collections::BTreeMap;
use std::fmt;

use num::rational::BigRational;

use crate::algebra::{FieldCtx, K};
use crate::{Error, Result};

/// Exponent vector; one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Self) -> Self {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial ring: coefficient field plus named variables.
#[derive(Clone, Debug, Eq)]
pub struct Ring {
    pub ctx: FieldCtx,
    pub names: Vec<String>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.names.len() == other.names.len()
    }
}

impl Ring {
    /// The ring of an n-base-variable etale pair: x1..xn, then y.
    pub fn pair_ring(ctx: FieldCtx, n: usize) -> Self {
        let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        names.push("y".into());
        Ring { ctx, names }
    }

    pub fn with_names(ctx: FieldCtx, names: &[&str]) -> Self {
        Ring { ctx, names: names.iter().map(|s| s.to_string()).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Same ring with one fresh variable appended.
    pub fn extended(&self, name: &str) -> Self {
        let mut names = self.names.clone();
        names.push(name.to_string());
        Ring { ctx: self.ctx.clone(), names }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Multivariate polynomial: term map in graded-lex order, no zero
/// coefficients stored.  Structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    pub ring: Ring,
    terms: BTreeMap<Monomial, K>,
}

impl MultiPoly {
    pub fn zero(ring: &Ring) -> Self {
        MultiPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !ring.ctx.is_zero(&c) {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        MultiPoly { ring: ring.clone(), terms }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.ctx.one())
    }

    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, ring.ctx.from_int(n))
    }

    pub fn var(ring: &Ring, idx: usize) -> Self {
        let mut exps = vec![0u32; ring.nvars()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), ring.ctx.one());
        MultiPoly { ring: ring.clone(), terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: K) {
        let ctx = self.ring.ctx.clone();
        if ctx.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = ctx.add(&old, &c);
                if !ctx.is_zero(&s) {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let ctx = &self.ring.ctx;
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), ctx.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        let ctx = self.ring.ctx.clone();
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ctx.mul(ca, cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        let ctx = &self.ring.ctx;
        if ctx.is_zero(c) {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), ctx.mul(a, c))).collect(),
        }
    }

    /// Multiply by coefficient*monomial.
    pub fn mul_term(&self, m: &Monomial, c: &K) -> Self {
        let ctx = &self.ring.ctx;
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), ctx.mul(a, c)))
                .filter(|(_, a)| !ctx.is_zero(a))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term under grlex.
    pub fn leading(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let ctx = self.ring.ctx.clone();
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] = e - 1;
            let factor = ctx.from_int(e as i64);
            out.add_term(Monomial(exps), ctx.mul(c, &factor));
        }
        out
    }

    /// Coefficients of powers of `var`, as polynomials with that exponent
    /// zeroed; index = power.  Empty for the zero polynomial.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        if self.is_zero() {
            return vec![];
        }
        let d = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(&self.ring); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut exps = m.0.clone();
            exps[var] = 0;
            out[e].add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Monic in `var`: the coefficient of the top power is the constant 1,
    /// and the degree in `var` is at least 1.
    pub fn is_monic_in(&self, var: usize) -> bool {
        if self.is_zero() || self.degree_in(var) == 0 {
            return false;
        }
        let coeffs = self.coeffs_in(var);
        coeffs.last().unwrap() == &Self::one(&self.ring)
    }

    pub fn evaluate(&self, point: &[K]) -> K {
        assert_eq!(point.len(), self.ring.nvars());
        let ctx = &self.ring.ctx;
        let mut acc = ctx.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (var, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = ctx.mul(&t, &ctx.pow(&point[var], e as u128));
                }
            }
            acc = ctx.add(&acc, &t);
        }
        acc
    }

    /// Replace `var` by a polynomial of the same ring.
    pub fn substitute(&self, var: usize, replacement: &Self) -> Self {
        debug_assert_eq!(self.ring, replacement.ring);
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut exps = m.0.clone();
            exps[var] = 0;
            let base =
                Self::constant(&self.ring, c.clone()).mul_term(&Monomial(exps), &self.ring.ctx.one());
            out = out.add(&base.mul(&replacement.pow(e)));
        }
        out
    }

    /// Substitute a constant for `var`.
    pub fn eval_var(&self, var: usize, value: &K) -> Self {
        let ctx = self.ring.ctx.clone();
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut exps = m.0.clone();
            exps[var] = 0;
            let coeff = if e == 0 { c.clone() } else { ctx.mul(c, &ctx.pow(value, e as u128)) };
            out.add_term(Monomial(exps), coeff);
        }
        out
    }

    /// Reinterpret in an extended ring (extra variables appended).
    pub fn into_ring(&self, bigger: &Ring) -> Self {
        assert!(bigger.nvars() >= self.ring.nvars());
        assert_eq!(bigger.ctx, self.ring.ctx);
        let extra = bigger.nvars() - self.ring.nvars();
        MultiPoly {
            ring: bigger.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.0.clone();
                    exps.extend(std::iter::repeat(0).take(extra));
                    (Monomial(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Map coefficients into another field context: Q -> F_p by residue,
    /// F_p -> F_{p^m} by inclusion, identity otherwise.
    pub fn map_ctx(&self, target: &FieldCtx) -> Result<Self> {
        if &self.ring.ctx == target {
            return Ok(self.clone());
        }
        let ring = Ring { ctx: target.clone(), names: self.ring.names.clone() };
        let mut out = Self::zero(&ring);
        for (m, c) in &self.terms {
            let mapped = map_element(c, &self.ring.ctx, target)?;
            out.add_term(m.clone(), mapped);
        }
        Ok(out)
    }

    /// Extract a rational univariate polynomial when only `var` occurs.
    pub fn to_unipoly(&self, var: usize) -> Result<uni::UniPoly> {
        if self.ring.ctx != FieldCtx::Rationals {
            return Err(Error::WrongContext { expected: "Q", got: self.ring.ctx.to_string() });
        }
        if self.is_zero() {
            return Ok(uni::UniPoly::zero());
        }
        let mut coeffs =
            vec![BigRational::from_integer(0.into()); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if i != var && e != 0 {
                    return Err(Error::Parse(format!(
                        "polynomial is not univariate in {}",
                        self.ring.names[var]
                    )));
                }
            }
            let K::Q(r) = c else { unreachable!() };
            coeffs[m.0[var] as usize] = r.clone();
        }
        Ok(uni::UniPoly::new(coeffs))
    }
}

fn map_element(c: &K, src: &FieldCtx, dst: &FieldCtx) -> Result<K> {
    match (src, dst) {
        (FieldCtx::Rationals, _) => {
            let K::Q(r) = c else { unreachable!() };
            dst.from_rational(r)
        }
        _ => crate::algebra::embed(c, src, dst),
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest terms first reads naturally.
        for (m, c) in self.terms.iter().rev() {
            let coeff_str = render_coeff(c);
            let (sign, mag) = match coeff_str.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", coeff_str),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let mut factors: Vec<String> = vec![];
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.names[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

fn render_coeff(c: &K) -> String {
    match c {
        K::Q(r) => r.to_string(),
        K::Fp(v) => v.to_string(),
        K::Fq(coords) => {
            let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qring(n: usize) -> Ring {
        Ring::pair_ring(FieldCtx::Rationals, n)
    }

    #[test]
    fn grlex_order_y_greatest() {
        // In the ring Q[x1, y]: degree first, then y beats x1.
        let x = Monomial(vec![1, 0]);
        let y = Monomial(vec![0, 1]);
        let x2 = Monomial(vec![2, 0]);
        assert!(y > x);
        assert!(x2 > y);
        assert!(x2 > x);
    }

    #[test]
    fn grlex_is_multiplicative() {
        let ms = [
            Monomial(vec![0, 0]),
            Monomial(vec![1, 0]),
            Monomial(vec![0, 1]),
            Monomial(vec![2, 1]),
            Monomial(vec![1, 3]),
        ];
        for a in &ms {
            for b in &ms {
                if a < b {
                    for m in &ms {
                        assert!(a.mul(m) < b.mul(m));
                    }
                }
            }
        }
    }

    #[test]
    fn derivative_examples() {
        let r = qring(1);
        // y^2 - x1
        let f = MultiPoly::var(&r, 1).pow(2).sub(&MultiPoly::var(&r, 0));
        let fy = f.partial_derivative(1);
        let expect = MultiPoly::var(&r, 1).scale(&r.ctx.from_int(2));
        assert_eq!(fy, expect);
        // d/dx1 (y^2) = 0
        let g = MultiPoly::var(&r, 1).pow(2);
        assert!(g.partial_derivative(0).is_zero());
    }

    #[test]
    fn derivative_drops_char_p_multiples() {
        let r = Ring::pair_ring(FieldCtx::prime_field(3).unwrap(), 1);
        // y^3 - y - x1 over F_3: derivative in y is -1.
        let f = MultiPoly::var(&r, 1)
            .pow(3)
            .sub(&MultiPoly::var(&r, 1))
            .sub(&MultiPoly::var(&r, 0));
        let fy = f.partial_derivative(1);
        assert_eq!(fy, MultiPoly::from_int(&r, -1));
    }

    #[test]
    fn substitute_and_evaluate() {
        let r = qring(1);
        let f = MultiPoly::var(&r, 1).pow(2).sub(&MultiPoly::var(&r, 0)); // y^2 - x1
        // x1 -> 2 x1 + 1
        let rep = MultiPoly::var(&r, 0).scale(&r.ctx.from_int(2)).add(&MultiPoly::one(&r));
        let g = f.substitute(0, &rep);
        let expect = MultiPoly::var(&r, 1)
            .pow(2)
            .sub(&MultiPoly::var(&r, 0).scale(&r.ctx.from_int(2)))
            .sub(&MultiPoly::one(&r));
        assert_eq!(g, expect);
        assert_eq!(f.evaluate(&[r.ctx.from_int(4), r.ctx.from_int(2)]), r.ctx.zero());
        // Artin-Schreier value over F_3 at (0, 2): 2^3 - 2 - 0 = 0.
        let r3 = Ring::pair_ring(FieldCtx::prime_field(3).unwrap(), 1);
        let h = MultiPoly::var(&r3, 1)
            .pow(3)
            .sub(&MultiPoly::var(&r3, 1))
            .sub(&MultiPoly::var(&r3, 0));
        assert_eq!(h.evaluate(&[K::Fp(0), K::Fp(2)]), K::Fp(0));
    }

    #[test]
    fn monic_in_y_detection() {
        let r = qring(1);
        let f = MultiPoly::var(&r, 1).pow(2).sub(&MultiPoly::var(&r, 0));
        assert!(f.is_monic_in(1));
        assert!(!f.is_monic_in(0));
        let g = f.scale(&r.ctx.from_int(2));
        assert!(!g.is_monic_in(1));
    }

    #[test]
    fn display_reads_naturally() {
        let r = qring(1);
        let f = MultiPoly::var(&r, 1).pow(2).sub(&MultiPoly::var(&r, 0));
        assert_eq!(f.to_string(), "y^2 - x1");
    }
}
