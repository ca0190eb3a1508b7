//! Exact real algebraic numbers: isolation, comparison, sign evaluation,
//! and Sturm root-counting for polynomials whose coefficients live in
//! Q(alpha) for an isolated algebraic alpha.
//!
//! Arithmetic in Q(alpha) is done modulo a squarefree polynomial with alpha
//! among its roots.  The modulus need not be irreducible: when an inversion
//! meets a zero divisor the modulus splits and the factor containing alpha
//! (decided by the isolating interval) carries on.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::uni::{sign, Bound, SturmChain, UniPoly};

/// A real root of a squarefree rational polynomial, isolated by a rational
/// interval (lo, hi) with nonzero endpoint values.
#[derive(Clone, Debug)]
pub struct RealRoot {
    pub defining: UniPoly,
    pub lo: BigRational,
    pub hi: BigRational,
}

/// A real algebraic number: rational, or an isolated irrational root.
#[derive(Clone, Debug)]
pub enum RealAlgebraic {
    Rational(BigRational),
    Root(RealRoot),
}

impl RealRoot {
    /// Halve the isolating interval.
    pub fn refine(&mut self) {
        let two = BigRational::from_integer(BigInt::from(2));
        let mut mid = (&self.lo + &self.hi) / &two;
        if self.defining.eval(&mid).is_zero() {
            // The exact root is rational after all; dodge it so the
            // interval endpoints stay off the root.
            let three = BigRational::from_integer(BigInt::from(3));
            mid = (&self.lo + &self.hi + &self.hi) / &three;
            debug_assert!(!self.defining.eval(&mid).is_zero());
        }
        let s_lo = sign(&self.defining.eval(&self.lo));
        let s_mid = sign(&self.defining.eval(&mid));
        if s_lo != s_mid {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn refine_below(&mut self, eps: &BigRational) {
        while &self.width() > eps {
            self.refine();
        }
    }

    /// Exact sign of q at this root.
    pub fn sign_of(&mut self, q: &UniPoly) -> i8 {
        if q.is_zero() {
            return 0;
        }
        let d = self.defining.gcd(q);
        if d.deg().map_or(false, |dd| dd >= 1) && root_in_interval(&d, &self.lo, &self.hi) {
            return 0;
        }
        loop {
            let (lo_val, hi_val) = interval_eval(q, &self.lo, &self.hi);
            if lo_val.is_positive() {
                return 1;
            }
            if hi_val.is_negative() {
                return -1;
            }
            self.refine();
        }
    }

    pub fn approx_f64(&mut self) -> f64 {
        self.refine_below(&BigRational::new(BigInt::one(), BigInt::from(1_000_000_000i64)));
        let two = BigRational::from_integer(BigInt::from(2));
        let mid = (&self.lo + &self.hi) / two;
        rational_to_f64(&mid)
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Does `p` (squarefree or not) have a root strictly inside (lo, hi)?
fn root_in_interval(p: &UniPoly, lo: &BigRational, hi: &BigRational) -> bool {
    let Ok(chain) = SturmChain::new(p) else { return false };
    let n = chain.count_interval(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
    let at_hi = if p.eval(hi).is_zero() { 1 } else { 0 };
    n > at_hi
}

/// Interval evaluation of q over [lo, hi] by Horner on interval endpoints.
fn interval_eval(q: &UniPoly, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut acc_lo = BigRational::zero();
    let mut acc_hi = BigRational::zero();
    for c in q.coeffs.iter().rev() {
        // [acc_lo, acc_hi] * [lo, hi] + c
        let candidates = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
        let mut mn = candidates[0].clone();
        let mut mx = candidates[0].clone();
        for v in &candidates[1..] {
            if v < &mn {
                mn = v.clone();
            }
            if v > &mx {
                mx = v.clone();
            }
        }
        acc_lo = mn + c;
        acc_hi = mx + c;
    }
    (acc_lo, acc_hi)
}

impl RealAlgebraic {
    /// Exact comparison; refines intervals as needed.
    pub fn cmp_exact(&mut self, other: &mut RealAlgebraic) -> std::cmp::Ordering {
        match (self, other) {
            (RealAlgebraic::Rational(a), RealAlgebraic::Rational(b)) => (*a).cmp(b),
            (RealAlgebraic::Rational(a), RealAlgebraic::Root(r)) => {
                root_vs_rational(r, a).reverse()
            }
            (RealAlgebraic::Root(r), RealAlgebraic::Rational(a)) => root_vs_rational(r, a),
            (RealAlgebraic::Root(a), RealAlgebraic::Root(b)) => root_vs_root(a, b),
        }
    }

    pub fn approx_f64(&mut self) -> f64 {
        match self {
            RealAlgebraic::Rational(r) => rational_to_f64(r),
            RealAlgebraic::Root(r) => r.approx_f64(),
        }
    }
}

/// Ordering of the root relative to the rational.
fn root_vs_rational(r: &mut RealRoot, a: &BigRational) -> std::cmp::Ordering {
    if r.defining.eval(a).is_zero() && &r.lo < a && a < &r.hi {
        return std::cmp::Ordering::Equal;
    }
    loop {
        if a <= &r.lo {
            return std::cmp::Ordering::Greater;
        }
        if a >= &r.hi {
            return std::cmp::Ordering::Less;
        }
        r.refine();
    }
}

fn root_vs_root(a: &mut RealRoot, b: &mut RealRoot) -> std::cmp::Ordering {
    // Equality first: a common root inside overlapping intervals is shared.
    let g = a.defining.gcd(&b.defining);
    if g.deg().map_or(false, |d| d >= 1) {
        let lo = if a.lo > b.lo { a.lo.clone() } else { b.lo.clone() };
        let hi = if a.hi < b.hi { a.hi.clone() } else { b.hi.clone() };
        if lo < hi && root_in_interval(&g, &lo, &hi) {
            return std::cmp::Ordering::Equal;
        }
    }
    loop {
        if a.hi <= b.lo {
            return std::cmp::Ordering::Less;
        }
        if b.hi <= a.lo {
            return std::cmp::Ordering::Greater;
        }
        a.refine();
        b.refine();
    }
}

/// All distinct real roots of f, ascending.  Rational roots come out as
/// [`RealAlgebraic::Rational`] whenever trial division finds them.
pub fn isolate_real_roots(f: &UniPoly) -> Vec<RealAlgebraic> {
    if f.is_zero() || f.deg() == Some(0) {
        return vec![];
    }
    let mut s = f.squarefree_part().primitive();
    let mut rationals: Vec<BigRational> = vec![];
    // Strip x^k.
    if s.coeffs[0].is_zero() {
        rationals.push(BigRational::zero());
        while s.coeffs[0].is_zero() {
            s = s.div_exact(&UniPoly::x());
        }
    }
    // Rational roots p/q: p | constant, q | lead (integer coefficients).
    let mut candidates: Vec<BigRational> = vec![];
    if let (Some(c0), Some(cl)) = (s.coeffs.first(), s.coeffs.last()) {
        if s.deg().map_or(false, |d| d >= 1) {
            let nums = small_divisors(c0.numer());
            let dens = small_divisors(cl.numer());
            if let (Some(nums), Some(dens)) = (nums, dens) {
                for n in &nums {
                    for d in &dens {
                        let cand = BigRational::new(n.clone(), d.clone());
                        candidates.push(cand.clone());
                        candidates.push(-cand);
                    }
                }
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    for cand in candidates {
        if s.deg().map_or(true, |d| d == 0) {
            break;
        }
        if s.eval(&cand).is_zero() {
            rationals.push(cand.clone());
            let linear = UniPoly::new(vec![-cand, BigRational::one()]);
            s = s.div_exact(&linear);
        }
    }
    let mut out: Vec<RealAlgebraic> =
        rationals.into_iter().map(RealAlgebraic::Rational).collect();
    // Isolate what remains by Sturm bisection.  Split points are always
    // chosen off the roots of s, so no root ever sits on an interval
    // boundary (the initial Cauchy bound is root-free too).
    if s.deg().map_or(false, |d| d >= 1) {
        let chain = SturmChain::new(&s).unwrap();
        let bound = s.root_bound();
        let mut stack = vec![(-bound.clone(), bound.clone())];
        while let Some((lo, hi)) = stack.pop() {
            let n = chain.count_interval(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(RealAlgebraic::Root(RealRoot { defining: s.clone(), lo, hi }));
                continue;
            }
            let mid = split_point(&s, &lo, &hi);
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    out.sort_by(|x, y| {
        let mut a = x.clone();
        let mut b = y.clone();
        a.cmp_exact(&mut b)
    });
    out
}

/// An interior point of (lo, hi) that is not a root of s.  Tries deg(s)+1
/// distinct points; s cannot vanish on all of them.
fn split_point(s: &UniPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let gap = hi - lo;
    let tries = s.deg().unwrap_or(0) + 2;
    for j in 1..=tries {
        let frac = BigRational::new(BigInt::from(j as i64), BigInt::from(tries as i64 + 1));
        let cand = lo + &gap * frac;
        if !s.eval(&cand).is_zero() {
            return cand;
        }
    }
    unreachable!("a polynomial cannot vanish at deg+2 distinct points")
}

/// Divisors of |n|, or None when |n| is too large to factor quickly.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    use num::ToPrimitive;
    let n = n.abs().to_u64()?;
    if n == 0 {
        return None;
    }
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut divs = vec![];
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            divs.push(BigInt::from(d));
            if d != n / d {
                divs.push(BigInt::from(n / d));
            }
        }
        d += 1;
        if d > 2_000_000 {
            return None;
        }
    }
    Some(divs)
}

// ---------------------------------------------------------------------------
// Q(alpha)[y] with dynamic modulus splitting.

/// Arithmetic context for Q(alpha): polynomials in x modulo a squarefree
/// `modulus` that has alpha as its unique root in the isolating interval.
pub struct AlgebraicField {
    pub modulus: UniPoly,
    pub root: RealRoot,
}

impl AlgebraicField {
    pub fn new(root: &RealRoot) -> Self {
        AlgebraicField { modulus: root.defining.clone(), root: root.clone() }
    }

    fn reduce(&self, q: &UniPoly) -> UniPoly {
        if self.modulus.deg().map_or(true, |d| d == 0) {
            return UniPoly::zero();
        }
        q.rem(&self.modulus)
    }

    /// Exact zero test of a(alpha); may shrink the modulus.
    fn is_zero(&mut self, a: &UniPoly) -> bool {
        let a = self.reduce(a);
        if a.is_zero() {
            return true;
        }
        let d = a.gcd(&self.modulus);
        if d.deg() == Some(0) {
            return false;
        }
        if root_in_interval(&d, &self.root.lo, &self.root.hi) {
            true
        } else {
            // alpha lives in the cofactor; shrink and report nonzero.
            self.modulus = self.modulus.div_exact(&d);
            self.root.defining = self.modulus.clone();
            false
        }
    }

    fn inv(&mut self, a: &UniPoly) -> UniPoly {
        assert!(!self.is_zero(a), "inversion of zero in Q(alpha)");
        let a = self.reduce(a);
        // After is_zero returned false the gcd with the modulus is 1.
        let (g, _, t) = ext_gcd(&self.modulus, &a);
        debug_assert_eq!(g.deg(), Some(0));
        let scale = g.lead().recip();
        self.reduce(&t.scale(&scale))
    }

    fn sign(&mut self, a: &UniPoly) -> i8 {
        if self.is_zero(a) {
            return 0;
        }
        let a = self.reduce(a);
        self.root.sign_of(&a)
    }
}

fn ext_gcd(a: &UniPoly, b: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
    // Returns (g, s, t) with s*a + t*b = g.
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (UniPoly::constant(BigRational::one()), UniPoly::zero());
    let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::constant(BigRational::one()));
    while !r1.is_zero() {
        let (q, r2) = r0.divrem(&r1);
        let s2 = s0.sub(&q.mul(&s1));
        let t2 = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    (r0, s0, t0)
}

/// A polynomial in y with coefficients in Q[x], to be read at x = alpha.
pub type YCoeffs = Vec<UniPoly>;

fn normalize(p: &mut YCoeffs, field: &mut AlgebraicField) {
    while let Some(last) = p.last() {
        if field.is_zero(last) {
            p.pop();
        } else {
            break;
        }
    }
}

fn derivative_y(p: &YCoeffs) -> YCoeffs {
    if p.len() <= 1 {
        return vec![];
    }
    p[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| c.scale(&BigRational::from_integer(BigInt::from(i + 1))))
        .collect()
}

fn rem_y(a: &YCoeffs, b: &YCoeffs, field: &mut AlgebraicField) -> YCoeffs {
    let db = b.len() - 1;
    let lead_inv = field.inv(b.last().unwrap());
    let mut r: YCoeffs = a.iter().map(|c| field.reduce(c)).collect();
    normalize(&mut r, field);
    while r.len() > db {
        let k = r.len() - 1;
        let factor = field.reduce(&r[k].mul(&lead_inv));
        for (i, c) in b.iter().enumerate() {
            let delta = field.reduce(&factor.mul(c));
            r[k - db + i] = field.reduce(&r[k - db + i].sub(&delta));
        }
        r.pop();
        normalize(&mut r, field);
    }
    r
}

/// Number of distinct real roots of the univariate polynomial over Q(alpha)
/// given by `coeffs` (y-coefficients, each a Q[x] polynomial read at alpha).
pub fn count_real_roots_over(field: &mut AlgebraicField, coeffs: &YCoeffs) -> usize {
    let mut f: YCoeffs = coeffs.iter().map(|c| field.reduce(c)).collect();
    normalize(&mut f, field);
    if f.len() <= 1 {
        return 0;
    }
    let mut chain: Vec<YCoeffs> = vec![f.clone()];
    let mut d = derivative_y(&f);
    normalize(&mut d, field);
    if !d.is_empty() {
        chain.push(d);
        loop {
            let k = chain.len();
            let mut r = rem_y(&chain[k - 2], &chain[k - 1], field);
            normalize(&mut r, field);
            if r.is_empty() {
                break;
            }
            for c in &mut r {
                *c = field.reduce(&c.neg());
            }
            chain.push(r);
        }
    }
    let mut v_neg = 0usize;
    let mut v_pos = 0usize;
    let mut prev_neg = 0i8;
    let mut prev_pos = 0i8;
    for p in &chain {
        let deg = p.len() - 1;
        let s = field.sign(p.last().unwrap());
        debug_assert!(s != 0, "chain leads are nonzero after normalize");
        let s_pos = s;
        let s_neg = if deg % 2 == 0 { s } else { -s };
        if prev_pos != 0 && s_pos != prev_pos {
            v_pos += 1;
        }
        if prev_neg != 0 && s_neg != prev_neg {
            v_neg += 1;
        }
        prev_pos = s_pos;
        prev_neg = s_neg;
    }
    v_neg - v_pos
}

/// Gcd in Q(alpha)[y] of two coefficient lists.
pub fn gcd_over(field: &mut AlgebraicField, a: &YCoeffs, b: &YCoeffs) -> YCoeffs {
    let mut x: YCoeffs = a.iter().map(|c| field.reduce(c)).collect();
    let mut y: YCoeffs = b.iter().map(|c| field.reduce(c)).collect();
    normalize(&mut x, field);
    normalize(&mut y, field);
    while !y.is_empty() {
        if y.len() == 1 {
            // Nonzero constant: gcd is 1.
            return vec![UniPoly::constant(BigRational::one())];
        }
        let r = rem_y(&x, &y, field);
        x = y;
        y = r;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::uni::rat;

    #[test]
    fn isolates_mixed_rational_and_irrational_roots() {
        // x^3 - 2x^2 - x + 2 = (x-2)(x-1)(x+1), all rational.
        let f = UniPoly::from_ints(&[2, -1, -2, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        let vals: Vec<BigRational> = roots
            .iter()
            .map(|r| match r {
                RealAlgebraic::Rational(v) => v.clone(),
                _ => panic!("expected rational root"),
            })
            .collect();
        assert_eq!(vals, vec![rat(-1, 1), rat(1, 1), rat(2, 1)]);

        // x^2 - 2: irrational pair.
        let f = UniPoly::from_ints(&[-2, 0, 1]);
        let mut roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        let lo = roots[0].approx_f64();
        let hi = roots[1].approx_f64();
        assert!((lo + 2f64.sqrt()).abs() < 1e-6);
        assert!((hi - 2f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn sign_evaluation_at_sqrt2() {
        let f = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        let RealAlgebraic::Root(mut r) = roots[1].clone() else { panic!() };
        // q = x - 1 is positive at sqrt(2); q = x - 3/2 is negative.
        assert_eq!(r.sign_of(&UniPoly::from_ints(&[-1, 1])), 1);
        assert_eq!(r.sign_of(&UniPoly::new(vec![rat(-3, 2), rat(1, 1)])), -1);
        // x^2 - 2 itself vanishes.
        assert_eq!(r.sign_of(&f), 0);
    }

    #[test]
    fn comparison_of_close_roots() {
        // sqrt(2) vs 1.41 vs 17/12.
        let f = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        let mut sqrt2 = roots[1].clone();
        let mut a = RealAlgebraic::Rational(rat(141, 100));
        let mut b = RealAlgebraic::Rational(rat(17, 12));
        assert_eq!(sqrt2.cmp_exact(&mut a), std::cmp::Ordering::Greater);
        assert_eq!(sqrt2.cmp_exact(&mut b), std::cmp::Ordering::Less);
        let mut same = roots[1].clone();
        assert_eq!(sqrt2.cmp_exact(&mut same), std::cmp::Ordering::Equal);
    }

    #[test]
    fn count_roots_over_algebraic_point() {
        // At alpha = sqrt(2): y^2 - alpha has two real roots; y^2 + alpha none.
        let f = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        let RealAlgebraic::Root(alpha) = roots[1].clone() else { panic!() };
        let mut field = AlgebraicField::new(&alpha);
        // y^2 - x read at alpha.
        let coeffs: YCoeffs =
            vec![UniPoly::from_ints(&[0, -1]), UniPoly::zero(), UniPoly::from_ints(&[1])];
        assert_eq!(count_real_roots_over(&mut field, &coeffs), 2);
        let mut field = AlgebraicField::new(&alpha);
        let coeffs: YCoeffs =
            vec![UniPoly::from_ints(&[0, 1]), UniPoly::zero(), UniPoly::from_ints(&[1])];
        assert_eq!(count_real_roots_over(&mut field, &coeffs), 0);
        // At alpha = -sqrt(2) the answers flip.
        let RealAlgebraic::Root(neg) = roots[0].clone() else { panic!() };
        let mut field = AlgebraicField::new(&neg);
        let coeffs: YCoeffs =
            vec![UniPoly::from_ints(&[0, -1]), UniPoly::zero(), UniPoly::from_ints(&[1])];
        assert_eq!(count_real_roots_over(&mut field, &coeffs), 0);
    }

    #[test]
    fn modulus_splitting_keeps_the_right_root()  {
        // Modulus (x^2 - 2)(x - 3), alpha = sqrt(2).  Inverting (x - 3)
        // forces a split; the sqrt(2) factor must survive.
        let m = UniPoly::from_ints(&[-2, 0, 1]).mul(&UniPoly::from_ints(&[-3, 1]));
        let root = RealRoot { defining: m.clone(), lo: rat(1, 1), hi: rat(3, 2) };
        let mut field = AlgebraicField { modulus: m, root };
        let a = UniPoly::from_ints(&[-3, 1]);
        assert!(!field.is_zero(&a));
        let inv = field.inv(&a);
        // (x - 3) * inv = 1 at alpha.
        let prod = a.mul(&inv);
        assert_eq!(field.sign(&prod.sub(&UniPoly::from_ints(&[1]))), 0);
        assert_eq!(field.modulus, UniPoly::from_ints(&[-2, 0, 1]));
    }
}
