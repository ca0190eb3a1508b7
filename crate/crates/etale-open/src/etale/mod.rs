//! Standard etale pairs and their validation.
//!
//! A pair `(f, g)` over `K[x1..xn, y]` with `f` monic in `y` presents the
//! basic open set `{ a : exists b, f(a,b) = 0 and g(a,b) != 0 }`.  The pair
//! is *valid* when `df/dy` vanishes at no point of the closure where
//! `f = 0 != g`; equivalently, `g` lies in the radical of `(f, df/dy)`.
//! Validation is decided exactly by Groebner bases; invalid pairs over
//! finite fields come with an explicit bad point found by brute force.

use std::fmt;
use std::sync::OnceLock;

use crate::algebra::{FieldCtx, K};
use crate::poly::groebner::{radical_member, IdealBasis};
use crate::poly::parse::parse_poly;
use crate::poly::{MultiPoly, Ring};
use crate::{Error, Result};

/// A standard etale basic open: `f` monic in `y`, together with `g`.
#[derive(Clone, Debug)]
pub struct EtalePair {
    pub n: usize,
    pub f: MultiPoly,
    pub g: MultiPoly,
    validation: OnceLock<ValidationResult>,
}

impl PartialEq for EtalePair {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.f == other.f && self.g == other.g
    }
}
impl Eq for EtalePair {}

/// A finite union of pairs over one ring; its image is the union of the
/// member images.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaleCover {
    pub pairs: Vec<EtalePair>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid,
}

/// A point where `f = 0 != g` but `df/dy = 0`, certifying invalidity.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub ctx: FieldCtx,
    pub alpha: Vec<K>,
    pub beta: K,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationResult {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl EtalePair {
    /// Build a pair, checking that `f` is monic in the fiber variable.
    pub fn new(f: MultiPoly, g: MultiPoly) -> Result<Self> {
        if f.ring != g.ring {
            return Err(Error::RingMismatch);
        }
        let n = f.ring.nvars() - 1;
        if !f.is_monic_in(n) {
            return Err(Error::NotMonic);
        }
        Ok(EtalePair { n, f, g, validation: OnceLock::new() })
    }

    pub fn ring(&self) -> &Ring {
        &self.f.ring
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.f.ring.ctx
    }

    /// Index of the fiber variable.
    pub fn yvar(&self) -> usize {
        self.n
    }

    pub fn fiber_degree(&self) -> u32 {
        self.f.degree_in(self.yvar())
    }

    /// Reinterpret the pair over another coefficient field (rationals reduce
    /// mod p, prime fields embed into extensions).
    pub fn map_ctx(&self, target: &FieldCtx) -> Result<EtalePair> {
        EtalePair::new(self.f.map_ctx(target)?, self.g.map_ctx(target)?)
    }

    /// Decide whether the pair is standard etale; the result is cached.
    pub fn validate(&self) -> Result<&ValidationResult> {
        if let FieldCtx::Padic { .. } = self.ctx() {
            return Err(Error::UnsupportedCoefficientField(self.ctx().to_string()));
        }
        Ok(self.validation.get_or_init(|| {
            let fy = self.f.partial_derivative(self.yvar());
            // The canonical pair (f, df/dy) is vacuously valid: no point can
            // have g != 0 and df/dy = 0 at once.
            if self.g == fy {
                return ValidationResult { verdict: Verdict::Valid, witness: None };
            }
            let ideal = IdealBasis::new(vec![self.f.clone(), fy.clone()]);
            if radical_member(&self.g, &ideal) {
                ValidationResult { verdict: Verdict::Valid, witness: None }
            } else {
                ValidationResult { verdict: Verdict::Invalid, witness: self.search_witness(&fy) }
            }
        }))
    }

    /// Deterministic bad-point search: ascending extension degree, then
    /// points in code order.  Over Q, a small integer grid.
    fn search_witness(&self, fy: &MultiPoly) -> Option<Witness> {
        match self.ctx() {
            FieldCtx::Rationals => {
                let grid: Vec<i64> =
                    (0..=10).map(|k| if k % 2 == 0 { k / 2 } else { -(k / 2 + 1) }).collect();
                let ctx = FieldCtx::Rationals;
                let mut point = vec![0usize; self.n + 1];
                loop {
                    let vals: Vec<K> = point.iter().map(|&i| ctx.from_int(grid[i])).collect();
                    if ctx.is_zero(&self.f.evaluate(&vals))
                        && ctx.is_zero(&fy.evaluate(&vals))
                        && !ctx.is_zero(&self.g.evaluate(&vals))
                    {
                        let beta = vals[self.n].clone();
                        return Some(Witness { ctx, alpha: vals[..self.n].to_vec(), beta });
                    }
                    let mut i = 0;
                    loop {
                        point[i] += 1;
                        if point[i] < grid.len() {
                            break;
                        }
                        point[i] = 0;
                        i += 1;
                        if i > self.n {
                            return None;
                        }
                    }
                }
            }
            FieldCtx::PrimeField(p) => self.search_witness_finite(*p, 1, fy),
            FieldCtx::ExtField { p, m, .. } => self.search_witness_finite(*p, *m, fy),
            FieldCtx::Padic { .. } => None,
        }
    }

    fn search_witness_finite(&self, p: u64, m0: u32, fy: &MultiPoly) -> Option<Witness> {
        for j in 1..=4u32 {
            let m = m0 * j;
            let Ok(ctx) = FieldCtx::ext_field(p, m) else { continue };
            let q = ctx.order().unwrap();
            let points = q.checked_pow(self.n as u32 + 1)?;
            if points > 50_000_000 {
                break;
            }
            let Ok(f) = self.f.map_ctx(&ctx) else { continue };
            let Ok(g) = self.g.map_ctx(&ctx) else { continue };
            let Ok(fy) = fy.map_ctx(&ctx) else { continue };
            let mut idx = vec![0u128; self.n + 1];
            loop {
                let vals: Vec<K> = idx.iter().map(|&i| ctx.decode(i)).collect();
                if ctx.is_zero(&f.evaluate(&vals))
                    && ctx.is_zero(&fy.evaluate(&vals))
                    && !ctx.is_zero(&g.evaluate(&vals))
                {
                    let beta = vals[self.n].clone();
                    return Some(Witness { ctx, alpha: vals[..self.n].to_vec(), beta });
                }
                // Lexicographic odometer: last coordinate fastest.
                let mut i = self.n as i64;
                while i >= 0 {
                    idx[i as usize] += 1;
                    if idx[i as usize] < q {
                        break;
                    }
                    idx[i as usize] = 0;
                    i -= 1;
                }
                if i < 0 {
                    break;
                }
            }
        }
        None
    }
}

impl fmt::Display for EtalePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pair{{n={}; f={}; g={}}}", self.n, self.f, self.g)
    }
}

impl EtaleCover {
    pub fn single(pair: EtalePair) -> Self {
        EtaleCover { pairs: vec![pair] }
    }

    pub fn ring(&self) -> &Ring {
        self.pairs[0].ring()
    }

    pub fn map_ctx(&self, target: &FieldCtx) -> Result<EtaleCover> {
        let pairs: Result<Vec<_>> = self.pairs.iter().map(|p| p.map_ctx(target)).collect();
        Ok(EtaleCover { pairs: pairs? })
    }
}

/// Union of covers: concatenation over a shared ring.
pub fn union(covers: &[EtaleCover]) -> Result<EtaleCover> {
    let first = covers.first().ok_or(Error::RingMismatch)?;
    let ring = first.ring().clone();
    let mut pairs = vec![];
    for c in covers {
        if c.ring() != &ring {
            return Err(Error::RingMismatch);
        }
        pairs.extend(c.pairs.iter().cloned());
    }
    Ok(EtaleCover { pairs })
}

/// The canonical pair `(f, df/dy)`; always valid.
pub fn generic_pair(f: MultiPoly) -> Result<EtalePair> {
    let yvar = f.ring.nvars() - 1;
    let fy = f.partial_derivative(yvar);
    EtalePair::new(f, fy)
}

/// `(y^k - x1, y)`: its image is the set of nonzero k-th powers.
pub fn power_pair(ctx: &FieldCtx, k: u32) -> EtalePair {
    let ring = Ring::pair_ring(ctx.clone(), 1);
    let y = MultiPoly::var(&ring, 1);
    let f = y.pow(k).sub(&MultiPoly::var(&ring, 0));
    EtalePair::new(f, y).expect("y^k - x1 is monic in y")
}

/// `(y^p - y - x1, 1)` over F_p: the Artin-Schreier image.
pub fn artin_schreier_pair(p: u64) -> Result<EtalePair> {
    let ctx = FieldCtx::prime_field(p)?;
    let ring = Ring::pair_ring(ctx, 1);
    let y = MultiPoly::var(&ring, 1);
    let f = y.pow(p as u32).sub(&y).sub(&MultiPoly::var(&ring, 0));
    EtalePair::new(f, MultiPoly::one(&ring))
}

/// A pair whose image is `a * image(pair) + b`, by substituting
/// `x1 -> (x1 - b)/a`.  Only for one base variable.
pub fn affine_image(pair: &EtalePair, a: &K, b: &K) -> Result<EtalePair> {
    if pair.n != 1 {
        return Err(Error::WrongContext { expected: "n = 1 pair", got: format!("n = {}", pair.n) });
    }
    let ctx = pair.ctx().clone();
    if ctx.is_zero(a) {
        return Err(Error::ZeroScale);
    }
    let ring = pair.ring().clone();
    let a_inv = ctx.inv(a)?;
    let rep = MultiPoly::var(&ring, 0)
        .sub(&MultiPoly::constant(&ring, b.clone()))
        .scale(&a_inv);
    let f = pair.f.substitute(0, &rep);
    let g = pair.g.substitute(0, &rep);
    EtalePair::new(f, g)
}

/// The perturbed-root family: `f = y^{n+2} + y^{n+1} + x_{n+1} y^n + ... +
/// x_2 y + x_1` with `g = df/dy`, over n+1 base variables.  Its image
/// contains the origin, with fiber point -1 and unit tangent value there.
pub fn hensel_family_pair(ctx: &FieldCtx, n: u32) -> Result<EtalePair> {
    if n < 2 {
        return Err(Error::Parse("the perturbed-root family needs n >= 2".into()));
    }
    let base = n as usize + 1;
    let ring = Ring::pair_ring(ctx.clone(), base);
    let y = MultiPoly::var(&ring, base);
    let mut f = y.pow(n + 2).add(&y.pow(n + 1));
    for i in 0..=n {
        f = f.add(&MultiPoly::var(&ring, i as usize).mul(&y.pow(i)));
    }
    generic_pair(f)
}

/// Parse `pair{n=<k>; f=<poly>; g=<poly>}` over the given field.
pub fn parse_pair(s: &str, ctx: &FieldCtx) -> Result<EtalePair> {
    let s = s.trim();
    let inner = s
        .strip_prefix("pair{")
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("expected pair{{...}}, got `{s}`")))?;
    let mut n: Option<usize> = None;
    let mut f_src: Option<&str> = None;
    let mut g_src: Option<&str> = None;
    for part in inner.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value in `{part}`")))?;
        match key.trim() {
            "n" => {
                n = Some(value.trim().parse().map_err(|_| Error::Parse(format!("bad n in `{part}`")))?)
            }
            "f" => f_src = Some(value),
            "g" => g_src = Some(value),
            other => return Err(Error::Parse(format!("unknown pair field `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("pair is missing n".into()))?;
    if n == 0 || n > 9 {
        return Err(Error::Parse("n must be between 1 and 9".into()));
    }
    let ring = Ring::pair_ring(ctx.clone(), n);
    let f = parse_poly(f_src.ok_or_else(|| Error::Parse("pair is missing f".into()))?, &ring)?;
    let g = parse_poly(g_src.ok_or_else(|| Error::Parse("pair is missing g".into()))?, &ring)?;
    EtalePair::new(f, g)
}

/// Parse a corpus file: one pair per line, `#` comments, blank lines
/// ignored.  Returns (1-based line number, pair).
pub fn parse_corpus(text: &str, ctx: &FieldCtx) -> Result<Vec<(usize, EtalePair)>> {
    let mut out = vec![];
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let pair =
            parse_pair(line, ctx).map_err(|e| Error::Parse(format!("corpus line {}: {e}", i + 1)))?;
        out.push((i + 1, pair));
    }
    Ok(out)
}

/// The corpus shipped with the crate.
pub const CORPUS: &str = include_str!("../../data/pairs.corpus");

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldCtx {
        FieldCtx::Rationals
    }

    #[test]
    fn squares_pair_is_valid_over_q() {
        let pair = power_pair(&q(), 2);
        let v = pair.validate().unwrap();
        assert_eq!(v.verdict, Verdict::Valid);
    }

    #[test]
    fn unit_g_with_double_root_is_invalid_with_origin_witness() {
        let ring = Ring::pair_ring(q(), 1);
        let f = parse_poly("y^2 - x1", &ring).unwrap();
        let pair = EtalePair::new(f, MultiPoly::one(&ring)).unwrap();
        let v = pair.validate().unwrap();
        assert_eq!(v.verdict, Verdict::Invalid);
        let w = v.witness.as_ref().expect("invalid pairs over Q get a grid witness here");
        assert_eq!(w.alpha, vec![q().from_int(0)]);
        assert_eq!(w.beta, q().from_int(0));
    }

    #[test]
    fn artin_schreier_is_valid_in_its_characteristic() {
        let pair = artin_schreier_pair(3).unwrap();
        assert_eq!(pair.validate().unwrap().verdict, Verdict::Valid);
        // The same polynomial over F_5 is not etale: df/dy = 3y^2 - 1
        // vanishes together with f at points over an extension.
        let ctx5 = FieldCtx::prime_field(5).unwrap();
        let ring = Ring::pair_ring(ctx5.clone(), 1);
        let f = parse_poly("y^3 - y - x1", &ring).unwrap();
        let pair5 = EtalePair::new(f, MultiPoly::one(&ring)).unwrap();
        let v = pair5.validate().unwrap();
        assert_eq!(v.verdict, Verdict::Invalid);
        let w = v.witness.as_ref().expect("finite-field invalid verdicts carry witnesses");
        let wctx = &w.ctx;
        let f = pair5.f.map_ctx(wctx).unwrap();
        let g = pair5.g.map_ctx(wctx).unwrap();
        let fy = pair5.f.partial_derivative(1).map_ctx(wctx).unwrap();
        let mut pt = w.alpha.clone();
        pt.push(w.beta.clone());
        assert!(wctx.is_zero(&f.evaluate(&pt)));
        assert!(wctx.is_zero(&fy.evaluate(&pt)));
        assert!(!wctx.is_zero(&g.evaluate(&pt)));
    }

    #[test]
    fn generic_pair_requires_monic() {
        let ring = Ring::pair_ring(q(), 1);
        let f = parse_poly("2*y^2 - x1", &ring).unwrap();
        assert_eq!(generic_pair(f).err(), Some(Error::NotMonic));
        let f = parse_poly("x1", &ring).unwrap();
        assert_eq!(generic_pair(f).err(), Some(Error::NotMonic));
    }

    #[test]
    fn generic_pair_always_validates() {
        for src in ["y^2 - x1", "y^3 - y - x1", "y^5 + x1*y + x1^2", "y"] {
            let ring = Ring::pair_ring(q(), 1);
            let f = parse_poly(src, &ring).unwrap();
            let pair = generic_pair(f).unwrap();
            assert_eq!(pair.validate().unwrap().verdict, Verdict::Valid, "f = {src}");
        }
    }

    #[test]
    fn hensel_family_shape() {
        let pair = hensel_family_pair(&q(), 2).unwrap();
        assert_eq!(pair.n, 3);
        assert_eq!(pair.f.to_string(), "y^4 + y^3 + x3*y^2 + x2*y + x1");
        // Root at the origin with fiber -1, where df/dy = -1.
        let ctx = q();
        let pt = vec![ctx.zero(), ctx.zero(), ctx.zero(), ctx.from_int(-1)];
        assert!(ctx.is_zero(&pair.f.evaluate(&pt)));
        assert_eq!(pair.g.evaluate(&pt), ctx.from_int(-1));
    }

    #[test]
    fn pair_text_round_trip() {
        let ctx = q();
        let src = "pair{n=1; f=y^2 - x1; g=y}";
        let pair = parse_pair(src, &ctx).unwrap();
        assert_eq!(pair.to_string(), src);
        assert!(parse_pair("pair{n=1; f=2*y - x1; g=1}", &ctx).is_err(), "non-monic rejected");
    }

    #[test]
    fn corpus_parses_and_is_large_enough() {
        let pairs = parse_corpus(CORPUS, &FieldCtx::Rationals).unwrap();
        assert!(pairs.len() >= 50, "corpus has {} pairs", pairs.len());
    }

    #[test]
    fn union_checks_rings() {
        let c1 = EtaleCover::single(power_pair(&q(), 2));
        let c2 = EtaleCover::single(artin_schreier_pair(3).unwrap());
        assert!(union(&[c1.clone(), c1.clone()]).is_ok());
        assert_eq!(union(&[c1, c2]).err(), Some(Error::RingMismatch));
    }
}
