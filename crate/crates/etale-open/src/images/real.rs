//! Exact real images of one-base-variable pairs, as finite unions of
//! intervals with rational or algebraic endpoints.
//!
//! Membership of `a` means: `f(a, y)` has a real root where `g(a, y)` does
//! not vanish.  That predicate is constant on the open cells cut out by the
//! real roots of `Res_y(T, dT/dy)` and `Res_y(T, g)` (with `T` the
//! squarefree part of `f` stripped of its common factor with `g`), so each
//! cell is decided at one rational sample and each boundary point is decided
//! exactly — by direct Sturm counting at rational points, and by dynamic
//! Q(alpha) arithmetic at irrational ones.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::algebra::{FieldCtx, K};
use crate::etale::EtalePair;
use crate::poly::algnum::{
    count_real_roots_over, gcd_over, isolate_real_roots, rational_to_f64, AlgebraicField,
    RealAlgebraic, RealRoot, YCoeffs,
};
use crate::poly::resultant::{gcd_y, resultant, squarefree_in_y};
use crate::poly::uni::{sturm_count, Bound, UniPoly};
use crate::poly::MultiPoly;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub enum Endpoint {
    NegInf,
    Point(RealAlgebraic),
    PosInf,
}

/// One interval; `lo_closed`/`hi_closed` are meaningful only for finite
/// endpoints.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: Endpoint,
    pub lo_closed: bool,
    pub hi: Endpoint,
    pub hi_closed: bool,
}

/// Disjoint, sorted, maximal union of intervals.
#[derive(Clone, Debug, Default)]
pub struct IntervalUnion {
    pub intervals: Vec<Interval>,
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInf => write!(f, "-inf"),
            Endpoint::PosInf => write!(f, "+inf"),
            Endpoint::Point(RealAlgebraic::Rational(r)) => write!(f, "{r}"),
            Endpoint::Point(RealAlgebraic::Root(root)) => {
                let mut r = root.clone();
                write!(f, "~{:.6}", r.approx_f64())
            }
        }
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|iv| {
                let lo_b = if iv.lo_closed { "[" } else { "(" };
                let hi_b = if iv.hi_closed { "]" } else { ")" };
                format!("{}{}, {}{}", lo_b, iv.lo, iv.hi, hi_b)
            })
            .collect();
        write!(f, "{}", parts.join(" u "))
    }
}

impl IntervalUnion {
    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Exact membership of a rational point.
    pub fn contains_rational(&self, a: &BigRational) -> bool {
        let mut probe = RealAlgebraic::Rational(a.clone());
        for iv in &self.intervals {
            let above_lo = match &iv.lo {
                Endpoint::NegInf => true,
                Endpoint::PosInf => false,
                Endpoint::Point(p) => {
                    let mut p = p.clone();
                    match p.cmp_exact(&mut probe) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => iv.lo_closed,
                        std::cmp::Ordering::Greater => false,
                    }
                }
            };
            if !above_lo {
                continue;
            }
            let below_hi = match &iv.hi {
                Endpoint::PosInf => true,
                Endpoint::NegInf => false,
                Endpoint::Point(p) => {
                    let mut p = p.clone();
                    match p.cmp_exact(&mut probe) {
                        std::cmp::Ordering::Greater => true,
                        std::cmp::Ordering::Equal => iv.hi_closed,
                        std::cmp::Ordering::Less => false,
                    }
                }
            };
            if below_hi {
                return true;
            }
        }
        false
    }
}

/// Membership of a single rational point, decided by Sturm counting on the
/// exact fiber polynomials.
pub fn member_real_at(pair: &EtalePair, a: &BigRational) -> Result<bool> {
    let n = pair.n;
    let fiber_f = pair.f.eval_var(0, &K::Q(a.clone())).to_unipoly(n)?;
    let fiber_g = pair.g.eval_var(0, &K::Q(a.clone())).to_unipoly(n)?;
    member_fiber(&fiber_f, &fiber_g)
}

fn member_fiber(fiber_f: &UniPoly, fiber_g: &UniPoly) -> Result<bool> {
    let s = fiber_f.squarefree_part();
    let total = sturm_count(&s, &Bound::NegInf, &Bound::PosInf)?;
    let h = s.gcd(fiber_g);
    let shared = if h.deg().map_or(true, |d| d == 0) {
        0
    } else {
        sturm_count(&h, &Bound::NegInf, &Bound::PosInf)?
    };
    Ok(total > shared)
}

/// Membership at an isolated algebraic point, via Sturm chains over
/// Q(alpha).
fn member_at_algebraic(pair: &EtalePair, root: &RealRoot) -> Result<bool> {
    let coeffs_of = |p: &MultiPoly| -> Result<YCoeffs> {
        p.coeffs_in(1).iter().map(|c| c.to_unipoly(0)).collect()
    };
    let f_coeffs = coeffs_of(&pair.f)?;
    let g_coeffs = coeffs_of(&pair.g)?;
    let mut field = AlgebraicField::new(root);
    let total = count_real_roots_over(&mut field, &f_coeffs);
    let shared_poly = gcd_over(&mut field, &f_coeffs, &g_coeffs);
    let shared = count_real_roots_over(&mut field, &shared_poly);
    Ok(total > shared)
}

/// The exact set `{ a in R : exists b, f(a,b) = 0 and g(a,b) != 0 }` for a
/// one-base-variable pair over Q.
pub fn real_intervals(pair: &EtalePair) -> Result<IntervalUnion> {
    if pair.n != 1 {
        return Err(Error::WrongContext { expected: "n = 1 pair", got: format!("n = {}", pair.n) });
    }
    if pair.ctx() != &FieldCtx::Rationals {
        return Err(Error::WrongContext { expected: "Q", got: pair.ctx().to_string() });
    }
    // Strip multiplicity and the factor shared with g; only T's roots can
    // matter, and on T they are exactly the roots where g survives except
    // over finitely many boundary points.
    let s = squarefree_in_y(&pair.f)?;
    let h = gcd_y(&s, &pair.g)?;
    let t = if h.degree_in(1) >= 1 { s.div_exact(&h) } else { s };
    if t.degree_in(1) == 0 {
        return Ok(IntervalUnion::default());
    }
    let t_y = t.partial_derivative(1);
    let b1 = resultant(&t, &t_y, 1).to_unipoly(0)?;
    let b2 = resultant(&t, &pair.g, 1).to_unipoly(0)?;
    let product = if b2.is_zero() { b1.clone() } else { b1.mul(&b2) };
    let mut boundaries = isolate_real_roots(&product);
    // Separate adjacent isolating intervals so cell samples exist.
    separate(&mut boundaries);

    // Decide each cell and each boundary point.
    let samples = cell_samples(&boundaries);
    let mut segments: Vec<(SegmentKind, bool)> = vec![];
    for (i, sample) in samples.iter().enumerate() {
        segments.push((SegmentKind::Cell, member_real_at(pair, sample)?));
        if i < boundaries.len() {
            let member = match &boundaries[i] {
                RealAlgebraic::Rational(r) => member_real_at(pair, r)?,
                RealAlgebraic::Root(root) => member_at_algebraic(pair, root)?,
            };
            segments.push((SegmentKind::Boundary(i), member));
        }
    }
    Ok(assemble(&boundaries, &segments))
}

enum SegmentKind {
    Cell,
    Boundary(usize),
}

fn separate(boundaries: &mut [RealAlgebraic]) {
    for i in 1..boundaries.len() {
        let (a, b) = boundaries.split_at_mut(i);
        let left = &mut a[i - 1];
        let right = &mut b[0];
        loop {
            let l_hi = upper(left);
            let r_lo = lower(right);
            if l_hi < r_lo {
                break;
            }
            refine(left);
            refine(right);
        }
    }
}

fn lower(x: &RealAlgebraic) -> BigRational {
    match x {
        RealAlgebraic::Rational(r) => r.clone(),
        RealAlgebraic::Root(r) => r.lo.clone(),
    }
}

fn upper(x: &RealAlgebraic) -> BigRational {
    match x {
        RealAlgebraic::Rational(r) => r.clone(),
        RealAlgebraic::Root(r) => r.hi.clone(),
    }
}

fn refine(x: &mut RealAlgebraic) {
    if let RealAlgebraic::Root(r) = x {
        r.refine();
    }
}

/// One rational sample per open cell (k boundaries make k + 1 cells).
fn cell_samples(boundaries: &[RealAlgebraic]) -> Vec<BigRational> {
    let one = BigRational::one();
    if boundaries.is_empty() {
        return vec![BigRational::zero()];
    }
    let mut out = vec![lower(&boundaries[0]).floor() - &one];
    for w in boundaries.windows(2) {
        let mid = (upper(&w[0]) + lower(&w[1])) / BigRational::from_integer(BigInt::from(2));
        out.push(mid);
    }
    out.push(upper(&boundaries[boundaries.len() - 1]).floor() + &one);
    out
}

fn assemble(boundaries: &[RealAlgebraic], segments: &[(SegmentKind, bool)]) -> IntervalUnion {
    let mut intervals = vec![];
    let mut run_start: Option<(Endpoint, bool)> = None;
    for (i, (kind, member)) in segments.iter().enumerate() {
        if *member {
            if run_start.is_none() {
                run_start = Some(match kind {
                    SegmentKind::Cell => {
                        if i == 0 {
                            (Endpoint::NegInf, false)
                        } else {
                            // Open cell after boundary i/2 - 1... the cell at
                            // segment index i follows boundary index (i-1)/2.
                            let b = &boundaries[(i - 1) / 2];
                            (Endpoint::Point(b.clone()), false)
                        }
                    }
                    SegmentKind::Boundary(bi) => (Endpoint::Point(boundaries[*bi].clone()), true),
                });
            }
        } else if let Some((lo, lo_closed)) = run_start.take() {
            let (hi, hi_closed) = match kind {
                SegmentKind::Boundary(bi) => (Endpoint::Point(boundaries[*bi].clone()), false),
                SegmentKind::Cell => {
                    // A non-member cell ends the run at its left boundary.
                    let b = &boundaries[(i - 1) / 2];
                    (Endpoint::Point(b.clone()), true)
                }
            };
            intervals.push(Interval { lo, lo_closed, hi, hi_closed });
        }
    }
    if let Some((lo, lo_closed)) = run_start {
        intervals.push(Interval { lo, lo_closed, hi: Endpoint::PosInf, hi_closed: false });
    }
    IntervalUnion { intervals }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::etale::{parse_pair, power_pair};
    use crate::poly::uni::rat;

    fn intervals_of(src: &str) -> IntervalUnion {
        let pair = parse_pair(src, &FieldCtx::Rationals).unwrap();
        real_intervals(&pair).unwrap()
    }

    fn is_rational_pt(e: &Endpoint, v: i64) -> bool {
        matches!(e, Endpoint::Point(RealAlgebraic::Rational(r)) if *r == rat(v, 1))
    }

    #[test]
    fn squares_image_is_positive_axis() {
        let pair = power_pair(&FieldCtx::Rationals, 2);
        let u = real_intervals(&pair).unwrap();
        assert_eq!(u.intervals.len(), 1);
        let iv = &u.intervals[0];
        assert!(is_rational_pt(&iv.lo, 0) && !iv.lo_closed);
        assert!(matches!(iv.hi, Endpoint::PosInf));
    }

    #[test]
    fn cubes_image_omits_origin() {
        let u = intervals_of("pair{n=1; f=y^3 - x1; g=y}");
        assert_eq!(u.intervals.len(), 2);
        assert!(matches!(u.intervals[0].lo, Endpoint::NegInf));
        assert!(is_rational_pt(&u.intervals[0].hi, 0) && !u.intervals[0].hi_closed);
        assert!(is_rational_pt(&u.intervals[1].lo, 0) && !u.intervals[1].lo_closed);
        assert!(matches!(u.intervals[1].hi, Endpoint::PosInf));
    }

    #[test]
    fn hyperbola_pair_has_two_rays() {
        let u = intervals_of("pair{n=1; f=y^2 - x1^2 + 1; g=y}");
        assert_eq!(u.intervals.len(), 2);
        assert!(is_rational_pt(&u.intervals[0].hi, -1) && !u.intervals[0].hi_closed);
        assert!(is_rational_pt(&u.intervals[1].lo, 1) && !u.intervals[1].lo_closed);
    }

    #[test]
    fn algebraic_endpoints_sqrt2() {
        // y^2 = x^2 - 2 with g = y: members where x^2 > 2.
        let u = intervals_of("pair{n=1; f=y^2 - x1^2 + 2; g=y}");
        assert_eq!(u.intervals.len(), 2);
        match &u.intervals[1].lo {
            Endpoint::Point(RealAlgebraic::Root(r)) => {
                let mut r = r.clone();
                assert!((r.approx_f64() - 2f64.sqrt()).abs() < 1e-6);
            }
            other => panic!("expected algebraic endpoint, got {other:?}"),
        }
        assert!(!u.intervals[1].lo_closed);
        // And the open disk stays out.
        assert!(!u.contains_rational(&rat(0, 1)));
        assert!(!u.contains_rational(&rat(1, 1)));
        assert!(u.contains_rational(&rat(2, 1)));
        assert!(u.contains_rational(&rat(-2, 1)));
    }

    #[test]
    fn whole_line_and_empty() {
        let u = intervals_of("pair{n=1; f=y; g=1}");
        assert_eq!(u.intervals.len(), 1);
        assert!(matches!(u.intervals[0].lo, Endpoint::NegInf));
        assert!(matches!(u.intervals[0].hi, Endpoint::PosInf));
        assert!(intervals_of("pair{n=1; f=y^2 - x1; g=0}").is_empty());
    }

    #[test]
    fn shared_factor_with_g_is_removed() {
        // f = (y - x)(y + x), g = y + x: only the y = x branch counts, and
        // at x = 0 its root collides with the g-zero.
        let u = intervals_of("pair{n=1; f=y^2 - x1^2; g=y + x1}");
        assert_eq!(u.intervals.len(), 2);
        assert!(is_rational_pt(&u.intervals[0].hi, 0) && !u.intervals[0].hi_closed);
        assert!(is_rational_pt(&u.intervals[1].lo, 0) && !u.intervals[1].lo_closed);
    }

    #[test]
    fn circle_gives_bounded_interval() {
        let u = intervals_of("pair{n=1; f=y^2 + x1^2 - 1; g=y}");
        assert_eq!(u.intervals.len(), 1);
        assert!(is_rational_pt(&u.intervals[0].lo, -1) && !u.intervals[0].lo_closed);
        assert!(is_rational_pt(&u.intervals[0].hi, 1) && !u.intervals[0].hi_closed);
    }

    #[test]
    fn closed_endpoint_when_boundary_is_member() {
        // f = y^2 - x1*(x1 - 1): roots exist iff x(x-1) >= 0; with g = 1
        // ... g = 1 makes the pair invalid, but the image is still a set:
        // members iff the fiber has any real root: x <= 0 or x >= 1,
        // endpoints included.
        let u = intervals_of("pair{n=1; f=y^2 - x1^2 + x1; g=1}");
        assert_eq!(u.intervals.len(), 2);
        assert!(is_rational_pt(&u.intervals[0].hi, 0) && u.intervals[0].hi_closed);
        assert!(is_rational_pt(&u.intervals[1].lo, 1) && u.intervals[1].lo_closed);
    }

    #[test]
    fn interval_output_agrees_with_direct_sturm_on_grid() {
        let sources = [
            "pair{n=1; f=y^2 - x1; g=y}",
            "pair{n=1; f=y^3 - x1; g=y}",
            "pair{n=1; f=y^2 - x1^2 + 1; g=y}",
            "pair{n=1; f=y^2 - x1^2 + 2; g=y}",
            "pair{n=1; f=y^2 - x1^4 + 5*x1^2 - 4; g=y}",
            "pair{n=1; f=y^2 - x1^3 + x1; g=y}",
            "pair{n=1; f=y^3 - x1*y - x1; g=3*y^2 - x1}",
            "pair{n=1; f=y^2 - x1^2; g=y + x1}",
            "pair{n=1; f=y^2 + y + x1; g=2*y + 1}",
        ];
        for src in sources {
            let pair = parse_pair(src, &FieldCtx::Rationals).unwrap();
            let u = real_intervals(&pair).unwrap();
            for i in -60..=60i64 {
                let a = rat(i, 7);
                assert_eq!(
                    u.contains_rational(&a),
                    member_real_at(&pair, &a).unwrap(),
                    "{src} at {a}"
                );
            }
        }
    }
}
