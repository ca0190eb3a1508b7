//! Discrete-log tables for small finite fields.
//!
//! Elements are represented by their logarithm base a fixed generator
//! (`ZERO` is a sentinel), which makes multiplication an index addition and
//! addition a Zech-logarithm lookup.  Squareness is a parity test on the
//! logarithm.  Tables are built once per field and drive all hot
//! enumeration loops.

use crate::algebra::{FieldCtx, K};
use crate::{Error, Result};

pub type Elt = u32;

/// Sentinel for the zero element.
pub const ZERO: Elt = u32::MAX;

const TABLE_CAP: u128 = 1 << 21;

pub struct SmallField {
    pub q: u64,
    pub p: u64,
    pub m: u32,
    pub ctx: FieldCtx,
    /// exp[i] = element code of g^i.
    exp: Vec<u64>,
    /// log[code] for nonzero codes; log[0] unused.
    log: Vec<u32>,
    /// zech[i] = log(1 + g^i), or ZERO when that sum vanishes.
    zech: Vec<u32>,
    /// sqrt[i] = some j with 2j = i (mod q-1), for even i.
    minus_one: u32,
}

impl SmallField {
    pub fn new(ctx: &FieldCtx) -> Result<SmallField> {
        let q = ctx.order().ok_or_else(|| Error::WrongContext {
            expected: "finite field",
            got: ctx.to_string(),
        })?;
        if q > TABLE_CAP {
            return Err(Error::BudgetExceeded { needed: q, budget: TABLE_CAP });
        }
        let q = q as u64;
        let (p, m) = match ctx {
            FieldCtx::PrimeField(p) => (*p, 1u32),
            FieldCtx::ExtField { p, m, .. } => (*p, *m),
            _ => unreachable!(),
        };
        let gen = find_generator(ctx, q);
        let mut exp = vec![0u64; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut acc = ctx.one();
        for (i, slot) in exp.iter_mut().enumerate() {
            let code = ctx.encode(&acc) as u64;
            *slot = code;
            log[code as usize] = i as u32;
            acc = ctx.mul(&acc, &gen);
        }
        debug_assert_eq!(acc, ctx.one(), "generator order must be q - 1");
        let mut zech = vec![ZERO; (q - 1) as usize];
        for (i, slot) in zech.iter_mut().enumerate() {
            let code = code_add(p, m, exp[i], 1);
            if code != 0 {
                *slot = log[code as usize];
            }
        }
        let minus_one = ((q - 1) / 2) as u32;
        Ok(SmallField { q, p, m, ctx: ctx.clone(), exp, log, zech, minus_one })
    }

    #[inline]
    pub fn from_code(&self, code: u64) -> Elt {
        if code == 0 {
            ZERO
        } else {
            self.log[code as usize]
        }
    }

    #[inline]
    pub fn to_code(&self, e: Elt) -> u64 {
        if e == ZERO {
            0
        } else {
            self.exp[e as usize]
        }
    }

    pub fn to_k(&self, e: Elt) -> K {
        self.ctx.decode(self.to_code(e) as u128)
    }

    pub fn from_k(&self, k: &K) -> Elt {
        self.from_code(self.ctx.encode(k) as u64)
    }

    #[inline]
    pub fn one(&self) -> Elt {
        0
    }

    #[inline]
    pub fn is_zero(&self, e: Elt) -> bool {
        e == ZERO
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if a == ZERO || b == ZERO {
            return ZERO;
        }
        let n = (self.q - 1) as u32;
        let mut s = a + b;
        if s >= n {
            s -= n;
        }
        s
    }

    #[inline]
    pub fn inv(&self, a: Elt) -> Elt {
        debug_assert_ne!(a, ZERO);
        if a == 0 {
            0
        } else {
            (self.q - 1) as u32 - a
        }
    }

    #[inline]
    pub fn neg(&self, a: Elt) -> Elt {
        self.mul(a, self.minus_one)
    }

    #[inline]
    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        if a == ZERO {
            return b;
        }
        if b == ZERO {
            return a;
        }
        let n = (self.q - 1) as u32;
        let diff = if b >= a { b - a } else { b + n - a };
        let z = self.zech[diff as usize];
        if z == ZERO {
            ZERO
        } else {
            let mut s = a + z;
            if s >= n {
                s -= n;
            }
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elt, e: u64) -> Elt {
        if a == ZERO {
            return if e == 0 { 0 } else { ZERO };
        }
        (((a as u64) * (e % (self.q - 1))) % (self.q - 1)) as u32
    }

    /// Squares have even logarithm (and zero is a square).
    #[inline]
    pub fn is_square(&self, a: Elt) -> bool {
        a == ZERO || a % 2 == 0
    }

    /// A square root when one exists.
    pub fn sqrt(&self, a: Elt) -> Option<Elt> {
        if a == ZERO {
            return Some(ZERO);
        }
        if a % 2 != 0 {
            return None;
        }
        Some(a / 2)
    }

    /// Horner evaluation; coeffs low degree first.
    #[inline]
    pub fn eval_poly(&self, coeffs: &[Elt], x: Elt) -> Elt {
        let mut acc = ZERO;
        for &c in coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), c);
        }
        acc
    }
}

/// Digit-wise base-p addition of element codes (no carries between digits).
fn code_add(p: u64, m: u32, a: u64, b: u64) -> u64 {
    if m == 1 {
        return (a + b) % p;
    }
    let mut out = 0u64;
    let mut mult = 1u64;
    let (mut a, mut b) = (a, b);
    for _ in 0..m {
        out += ((a % p + b % p) % p) * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    out
}

fn find_generator(ctx: &FieldCtx, q: u64) -> K {
    let factors = crate::algebra::fp::prime_divisors(q - 1);
    'cand: for code in 2..q {
        let g = ctx.decode(code as u128);
        if ctx.is_zero(&g) {
            continue;
        }
        for &l in &factors {
            if ctx.pow(&g, ((q - 1) / l) as u128) == ctx.one() {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

/// An n = 1 pair compiled to coefficient grids over a small field:
/// `f = sum_i x^i F_i(y)` with F_i stored as log-land y-coefficients.
pub struct CompiledPair {
    pub fx: Vec<Vec<Elt>>,
    pub gx: Vec<Vec<Elt>>,
    pub deg_y: usize,
}

impl CompiledPair {
    pub fn new(field: &SmallField, pair: &crate::etale::EtalePair) -> Result<CompiledPair> {
        assert_eq!(pair.n, 1, "compiled pairs are single-base-variable");
        let f = pair.f.map_ctx(&field.ctx)?;
        let g = pair.g.map_ctx(&field.ctx)?;
        Ok(CompiledPair { fx: compile(field, &f), gx: compile(field, &g), deg_y: pair.fiber_degree() as usize })
    }

    /// g(alpha, beta) where the x-coefficient values G_i(beta) are supplied.
    #[inline]
    fn eval_g_at(&self, field: &SmallField, g_at_beta: &[Elt], alpha: Elt) -> Elt {
        field.eval_poly(g_at_beta, alpha)
    }
}

fn compile(field: &SmallField, poly: &crate::poly::MultiPoly) -> Vec<Vec<Elt>> {
    let dx = poly.degree_in(0) as usize;
    let dy = poly.degree_in(1) as usize;
    let mut out = vec![vec![ZERO; dy + 1]; dx + 1];
    for (mono, c) in poly.terms() {
        out[mono.0[0] as usize][mono.0[1] as usize] = field.from_k(c);
    }
    out
}

/// Membership bitmap of the pair image: entry at element code `a` is true
/// iff some beta has f(a, beta) = 0 and g(a, beta) != 0.
pub fn image_bitmap(field: &SmallField, pair: &CompiledPair) -> Vec<bool> {
    let q = field.q as usize;
    let mut hit = vec![false; q];
    let deg_x = pair.fx.len() - 1;
    if pair.gx.iter().all(|row| row.iter().all(|&c| c == ZERO)) {
        return hit;
    }
    if deg_x <= 2 {
        let two = field.from_k(&field.ctx.from_int(2));
        let four = field.from_k(&field.ctx.from_int(4));
        // Solve for alpha per beta.
        for beta_code in 0..q as u64 {
            let beta = field.from_code(beta_code);
            let coefs: Vec<Elt> =
                pair.fx.iter().map(|row| field.eval_poly(row, beta)).collect();
            let g_at_beta: Vec<Elt> =
                pair.gx.iter().map(|row| field.eval_poly(row, beta)).collect();
            let mut mark = |alpha: Elt, field: &SmallField| {
                if !field.is_zero(pair.eval_g_at(field, &g_at_beta, alpha)) {
                    hit[field.to_code(alpha) as usize] = true;
                }
            };
            match deg_x {
                0 => {
                    if field.is_zero(coefs[0]) {
                        for code in 0..q as u64 {
                            let alpha = field.from_code(code);
                            mark(alpha, field);
                        }
                    }
                }
                1 => {
                    let (b, a) = (coefs[0], coefs[1]);
                    if !field.is_zero(a) {
                        mark(field.mul(field.neg(b), field.inv(a)), field);
                    } else if field.is_zero(b) {
                        // f(., beta) vanishes identically: every alpha with
                        // g != 0 is in the image.
                        for code in 0..q as u64 {
                            let alpha = field.from_code(code);
                            mark(alpha, field);
                        }
                    }
                }
                2 => {
                    let (c, b, a) = (coefs[0], coefs[1], coefs[2]);
                    if !field.is_zero(a) {
                        // alpha = (-b +- sqrt(b^2 - 4ac)) / 2a
                        let disc =
                            field.sub(field.mul(b, b), field.mul(four, field.mul(a, c)));
                        if field.is_zero(disc) {
                            let alpha =
                                field.mul(field.neg(b), field.inv(field.mul(two, a)));
                            mark(alpha, field);
                        } else if let Some(r) = field.sqrt(disc) {
                            let inv2a = field.inv(field.mul(two, a));
                            mark(field.mul(field.add(field.neg(b), r), inv2a), field);
                            mark(field.mul(field.sub(field.neg(b), r), inv2a), field);
                        }
                    } else if !field.is_zero(b) {
                        mark(field.mul(field.neg(c), field.inv(b)), field);
                    } else if field.is_zero(c) {
                        for code in 0..q as u64 {
                            let alpha = field.from_code(code);
                            mark(alpha, field);
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
    } else {
        // Full grid, beta innermost with early exit.
        for code in 0..q as u64 {
            let alpha = field.from_code(code);
            // Coefficients of f(alpha, .) and g(alpha, .).
            let fy: Vec<Elt> = transpose_eval(field, &pair.fx, alpha);
            let gy: Vec<Elt> = transpose_eval(field, &pair.gx, alpha);
            for beta_code in 0..q as u64 {
                let beta = field.from_code(beta_code);
                if field.is_zero(field.eval_poly(&fy, beta))
                    && !field.is_zero(field.eval_poly(&gy, beta))
                {
                    hit[code as usize] = true;
                    break;
                }
            }
        }
    }
    hit
}

/// y-coefficients of poly(alpha, .) from x-major grids.
fn transpose_eval(field: &SmallField, grid: &[Vec<Elt>], alpha: Elt) -> Vec<Elt> {
    let dy = grid.iter().map(|r| r.len()).max().unwrap_or(0);
    (0..dy)
        .map(|j| {
            let col: Vec<Elt> =
                grid.iter().map(|row| row.get(j).copied().unwrap_or(ZERO)).collect();
            field.eval_poly(&col, alpha)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::etale::power_pair;

    #[test]
    fn table_arithmetic_matches_generic() {
        for spec in ["Fp:13", "Fq:3^2", "Fq:5^2"] {
            let ctx = FieldCtx::parse(spec).unwrap();
            let field = SmallField::new(&ctx).unwrap();
            let q = field.q as u128;
            for a in 0..q {
                for b in 0..q {
                    let (ka, kb) = (ctx.decode(a), ctx.decode(b));
                    let (ea, eb) = (field.from_code(a as u64), field.from_code(b as u64));
                    assert_eq!(
                        field.to_code(field.add(ea, eb)) as u128,
                        ctx.encode(&ctx.add(&ka, &kb)),
                        "{spec} add {a} {b}"
                    );
                    assert_eq!(
                        field.to_code(field.mul(ea, eb)) as u128,
                        ctx.encode(&ctx.mul(&ka, &kb)),
                        "{spec} mul {a} {b}"
                    );
                }
                let ka = ctx.decode(a);
                let ea = field.from_code(a as u64);
                assert_eq!(field.is_square(ea), ctx.is_square(&ka).unwrap(), "{spec} sq {a}");
            }
        }
    }

    #[test]
    fn square_image_over_f7() {
        let ctx = FieldCtx::prime_field(7).unwrap();
        let field = SmallField::new(&ctx).unwrap();
        let pair = power_pair(&ctx, 2);
        let compiled = CompiledPair::new(&field, &pair).unwrap();
        let hit = image_bitmap(&field, &compiled);
        let image: Vec<u64> =
            (0..7).filter(|&c| hit[c as usize]).collect();
        assert_eq!(image, vec![1, 2, 4]);
    }

    #[test]
    fn fast_and_grid_paths_agree() {
        let ctx = FieldCtx::prime_field(11).unwrap();
        let field = SmallField::new(&ctx).unwrap();
        // deg_x = 2 pair and its grid evaluation.
        let ring = crate::poly::Ring::pair_ring(ctx.clone(), 1);
        let f = crate::poly::parse::parse_poly("y^2 - x1^2 + 1", &ring).unwrap();
        let g = crate::poly::parse::parse_poly("y", &ring).unwrap();
        let pair = crate::etale::EtalePair::new(f, g).unwrap();
        let compiled = CompiledPair::new(&field, &pair).unwrap();
        let fast = image_bitmap(&field, &compiled);
        let mut grid = vec![false; 11];
        for a in 0..11u128 {
            for b in 0..11u128 {
                let pt = [ctx.decode(a), ctx.decode(b)];
                if ctx.is_zero(&pair.f.evaluate(&pt)) && !ctx.is_zero(&pair.g.evaluate(&pt)) {
                    grid[a as usize] = true;
                }
            }
        }
        assert_eq!(fast, grid);
    }
}
