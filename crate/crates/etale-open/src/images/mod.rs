//! Concrete etale images: enumeration over finite fields, Hensel membership
//! over Q_p, and interval decompositions over the reals.

pub mod padic;
pub mod real;
pub mod smallfield;

use crate::algebra::{FieldCtx, K};
use crate::etale::{EtaleCover, EtalePair};
use crate::{Error, Result};

pub use padic::{member_padic, openness_audit_member, padic_ball_audit, MembershipAnswer, MemberVerdict};
pub use real::{real_intervals, Endpoint, Interval, IntervalUnion};

/// Default evaluation budget.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// A finite, sorted, deduplicated set of n-tuples over a finite field.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    pub ctx: FieldCtx,
    pub n: usize,
    /// Element codes per coordinate, sorted lexicographically.
    pub elements: Vec<Vec<u128>>,
}

impl PointSet {
    pub fn new(ctx: FieldCtx, n: usize, mut elements: Vec<Vec<u128>>) -> Self {
        elements.sort();
        elements.dedup();
        PointSet { ctx, n, elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, point: &[u128]) -> bool {
        self.elements.binary_search_by(|e| e.as_slice().cmp(point)).is_ok()
    }

    pub fn intersect(&self, other: &PointSet) -> PointSet {
        assert_eq!(self.ctx, other.ctx);
        let elements =
            self.elements.iter().filter(|e| other.contains(e)).cloned().collect();
        PointSet { ctx: self.ctx.clone(), n: self.n, elements }
    }

    pub fn union_with(&self, other: &PointSet) -> PointSet {
        assert_eq!(self.ctx, other.ctx);
        let mut elements = self.elements.clone();
        elements.extend(other.elements.iter().cloned());
        PointSet::new(self.ctx.clone(), self.n, elements)
    }

    /// Decode one point back to field elements.
    pub fn decode(&self, point: &[u128]) -> Vec<K> {
        point.iter().map(|&c| self.ctx.decode(c)).collect()
    }
}

/// The exact image of a cover over a finite field:
/// `{ a in F_q^n : exists b, f(a,b) = 0 != g(a,b) for some pair }`.
pub fn enumerate_finite(cover: &EtaleCover, ctx: &FieldCtx, budget: u128) -> Result<PointSet> {
    let q = ctx
        .order()
        .ok_or_else(|| Error::WrongContext { expected: "finite field", got: ctx.to_string() })?;
    let n = cover.ring().nvars() - 1;
    let needed = q
        .checked_pow(n as u32 + 1)
        .and_then(|v| v.checked_mul(cover.pairs.len() as u128))
        .ok_or(Error::BudgetExceeded { needed: u128::MAX, budget })?;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut out = PointSet::new(ctx.clone(), n, vec![]);
    for pair in &cover.pairs {
        out = out.union_with(&enumerate_pair(pair, ctx)?);
    }
    Ok(out)
}

fn enumerate_pair(pair: &EtalePair, ctx: &FieldCtx) -> Result<PointSet> {
    let q = ctx.order().unwrap();
    if pair.n == 1 && q <= (1 << 21) {
        let field = smallfield::SmallField::new(ctx)?;
        let compiled = smallfield::CompiledPair::new(&field, pair)?;
        let hit = smallfield::image_bitmap(&field, &compiled);
        let elements = hit
            .iter()
            .enumerate()
            .filter(|(_, &h)| h)
            .map(|(code, _)| vec![code as u128])
            .collect();
        return Ok(PointSet::new(ctx.clone(), 1, elements));
    }
    // Generic odometer over alpha, fiber variable innermost with early exit.
    let f = pair.f.map_ctx(ctx)?;
    let g = pair.g.map_ctx(ctx)?;
    let n = pair.n;
    let mut elements = vec![];
    let mut idx = vec![0u128; n];
    'alpha: loop {
        let mut point: Vec<K> = idx.iter().map(|&i| ctx.decode(i)).collect();
        point.push(ctx.zero());
        let fa = (0..n).fold(f.clone(), |acc, v| acc.eval_var(v, &point[v]));
        let ga = (0..n).fold(g.clone(), |acc, v| acc.eval_var(v, &point[v]));
        for b in 0..q {
            let beta = ctx.decode(b);
            point[n] = beta.clone();
            if ctx.is_zero(&fa.evaluate(&point)) && !ctx.is_zero(&ga.evaluate(&point)) {
                elements.push(idx.clone());
                break;
            }
        }
        let mut i = n as i64 - 1;
        while i >= 0 {
            idx[i as usize] += 1;
            if idx[i as usize] < q {
                continue 'alpha;
            }
            idx[i as usize] = 0;
            i -= 1;
        }
        break;
    }
    Ok(PointSet::new(ctx.clone(), n, elements))
}

/// Set intersection of two cover images over a finite field.
pub fn intersect_images(
    c1: &EtaleCover,
    c2: &EtaleCover,
    ctx: &FieldCtx,
    budget: u128,
) -> Result<PointSet> {
    let a = enumerate_finite(c1, ctx, budget)?;
    let b = enumerate_finite(c2, ctx, budget)?;
    Ok(a.intersect(&b))
}
