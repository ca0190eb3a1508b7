//! Membership in etale images over Q_p, by Hensel's lemma with finite
//! certificates.
//!
//! For a pair `(f, g)` over Q and a rational point `a`, the fiber polynomial
//! `f(a, y)` is processed exactly: the squarefree part is taken, the factor
//! shared with `g(a, y)` is removed (its roots are exactly where `g`
//! vanishes), and roots are rescaled to be p-integral.  Residues are then
//! refined level by level:
//!
//! * a residue `b` with `v(T(b)) > 2 v(T'(b))` lifts to a root — Yes;
//! * if no residue survives `T(b) = 0 mod p^k`, there is no root — No;
//! * survivors at level `2 v_p(Res(T, T')) + 1` always satisfy the Hensel
//!   criterion, so the search is decisive unless it runs past the context
//!   precision, in which case the answer is Unknown.

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::algebra::padic::{rat_valuation, PadicCtx};
use crate::algebra::{FieldCtx, K};
use crate::etale::{EtaleCover, EtalePair};
use crate::poly::uni::{resultant, UniPoly};
use crate::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MemberVerdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// A Hensel-liftable residue: the (rescaled) root is `residue / p^scale`
    /// mod p^(precision - scale); `derivative_valuation` is the Hensel gap.
    Root { residue: BigUint, scale: u32, derivative_valuation: i64, precision: u32 },
    /// No residue mod p^modulus_exponent can be a root.
    Exhausted { modulus_exponent: u32 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipAnswer {
    pub verdict: MemberVerdict,
    pub certificate: Option<Certificate>,
}

impl MembershipAnswer {
    fn yes(c: Certificate) -> Self {
        MembershipAnswer { verdict: MemberVerdict::Yes, certificate: Some(c) }
    }
    fn no(c: Certificate) -> Self {
        MembershipAnswer { verdict: MemberVerdict::No, certificate: Some(c) }
    }
    fn unknown() -> Self {
        MembershipAnswer { verdict: MemberVerdict::Unknown, certificate: None }
    }
}

fn check_denominators(poly: &crate::poly::MultiPoly, p: u64) -> Result<()> {
    let pb = BigInt::from(p);
    for (_, c) in poly.terms() {
        if let K::Q(r) = c {
            if (r.denom() % &pb).is_zero() {
                return Err(Error::BadDenominator(p));
            }
        }
    }
    Ok(())
}

/// Exact membership of a rational point in the p-adic image of the pair.
pub fn member_padic(
    pair: &EtalePair,
    alpha: &[BigRational],
    ctx: &PadicCtx,
) -> Result<MembershipAnswer> {
    if pair.ctx() != &FieldCtx::Rationals {
        return Err(Error::WrongContext { expected: "Q", got: pair.ctx().to_string() });
    }
    if alpha.len() != pair.n {
        return Err(Error::Parse(format!("expected {} coordinates, got {}", pair.n, alpha.len())));
    }
    check_denominators(&pair.f, ctx.p)?;
    check_denominators(&pair.g, ctx.p)?;
    // Fiber polynomials at alpha, exactly.  Negative-valuation coordinates
    // are fine; they surface as negative-valuation fiber coefficients and
    // are absorbed by the root rescaling below.
    let fiber_f = specialize(&pair.f, alpha, pair.n)?;
    let fiber_g = specialize(&pair.g, alpha, pair.n)?;
    decide_fiber(&fiber_f, &fiber_g, ctx)
}

fn specialize(poly: &crate::poly::MultiPoly, alpha: &[BigRational], n: usize) -> Result<UniPoly> {
    let mut acc = poly.clone();
    for (v, a) in alpha.iter().enumerate() {
        acc = acc.eval_var(v, &K::Q(a.clone()));
    }
    acc.to_unipoly(n)
}

/// Decide whether `F(y) = 0 != G(y)` has a solution in Q_p.
pub fn decide_fiber(big_f: &UniPoly, big_g: &UniPoly, ctx: &PadicCtx) -> Result<MembershipAnswer> {
    debug_assert!(!big_f.is_zero());
    let s = big_f.squarefree_part();
    let h = s.gcd(big_g);
    let t = if h.deg().map_or(false, |d| d >= 1) { s.div_exact(&h).monic() } else { s };
    if t.deg().map_or(true, |d| d == 0) {
        // No candidate roots at all: every root of f has g = 0 there.
        return Ok(MembershipAnswer::no(Certificate::Exhausted { modulus_exponent: 0 }));
    }
    // Rescale y -> y / p^scale so all roots are p-integral.
    let d = t.deg().unwrap();
    let mut scale: i64 = 0;
    for (i, c) in t.coeffs.iter().enumerate() {
        if i == d || c.is_zero() {
            continue;
        }
        let v = rat_valuation(c, ctx.p).unwrap();
        if v < 0 {
            let need = (-v + (d - i) as i64 - 1) / (d - i) as i64;
            scale = scale.max(need);
        }
    }
    let p_big = BigRational::from_integer(BigInt::from(ctx.p));
    let mut scaled_coeffs = t.coeffs.clone();
    if scale > 0 {
        // Coefficient of y^i gains p^{scale*(d-i)}; the result is monic with
        // p-integral coefficients and p-integral roots.
        for (i, c) in scaled_coeffs.iter_mut().enumerate() {
            let e = (scale as u32) * (d - i) as u32;
            *c *= p_big.pow(e as i32);
        }
    }
    let t = UniPoly::new(scaled_coeffs);
    // Discriminant-style bound via the resultant valuation.
    let res = resultant(&t, &t.derivative());
    debug_assert!(!res.is_zero(), "squarefree polynomials have nonzero resultant");
    let dv = rat_valuation(&res, ctx.p).unwrap().max(0) as u32;
    let depth_needed = 2 * dv + 1;
    let t_prime = t.derivative();
    let p_int = BigInt::from(ctx.p);

    let mut survivors: Vec<BigInt> = vec![BigInt::zero()];
    let mut level: u32 = 0;
    loop {
        // Refine to the next level.
        let next_level = level + 1;
        let mut next: Vec<BigInt> = vec![];
        let step = p_int.pow(level);
        for b in &survivors {
            for tval in 0..ctx.p {
                let cand = b + &step * BigInt::from(tval);
                let val_f = eval_valuation(&t, &cand, ctx.p);
                if val_f.map_or(true, |v| v >= next_level as i64) {
                    next.push(cand);
                }
            }
        }
        level = next_level;
        if next.is_empty() {
            return Ok(MembershipAnswer::no(Certificate::Exhausted { modulus_exponent: level }));
        }
        // Hensel test each survivor.
        for b in &next {
            let vf = eval_valuation(&t, b, ctx.p);
            let vd = eval_valuation(&t_prime, b, ctx.p);
            let lifts = match (vf, vd) {
                (None, Some(_)) => true, // exact rational root, simple by squarefreeness
                (Some(vf), Some(vd)) => vf > 2 * vd,
                (_, None) => false,
            };
            if lifts {
                use num::Integer;
                let residue = b.mod_floor(&p_int.pow(level)).to_biguint().unwrap();
                return Ok(MembershipAnswer::yes(Certificate::Root {
                    residue,
                    scale: scale as u32,
                    derivative_valuation: vd.unwrap(),
                    precision: level,
                }));
            }
        }
        if level >= ctx.precision {
            return Ok(MembershipAnswer::unknown());
        }
        if level > depth_needed {
            // Mathematically unreachable for squarefree t; guard anyway.
            return Ok(MembershipAnswer::unknown());
        }
        if next.len() > 200_000 {
            return Ok(MembershipAnswer::unknown());
        }
        survivors = next;
    }
}

/// v_p(q(b)) for integer b; None when q(b) = 0 exactly.
fn eval_valuation(q: &UniPoly, b: &BigInt, p: u64) -> Option<i64> {
    let v = q.eval(&BigRational::from_integer(b.clone()));
    rat_valuation(&v, p)
}

/// Result of auditing one valuation ball around a member.
#[derive(Clone, Debug, PartialEq)]
pub struct BallAudit {
    pub passed: bool,
    pub counterexample: Option<Vec<BigRational>>,
    pub samples: u32,
}

/// Check that the whole ball `alpha + p^M Z_p^n` stays inside the image, on
/// `samples` deterministic sample points.
pub fn padic_ball_audit(
    pair: &EtalePair,
    alpha: &[BigRational],
    ctx: &PadicCtx,
    m_exp: u32,
    samples: u32,
) -> Result<BallAudit> {
    let center = member_padic(pair, alpha, ctx)?;
    if center.verdict != MemberVerdict::Yes {
        return Err(Error::NotAMember);
    }
    let p_pow = BigRational::from_integer(BigInt::from(ctx.p)).pow(m_exp as i32);
    for j in 1..=samples {
        let mut point = alpha.to_vec();
        for (i, coord) in point.iter_mut().enumerate() {
            let k = (j as i64 + 31 * i as i64) % 101;
            *coord += &p_pow * BigRational::from_integer(BigInt::from(k));
        }
        let ans = member_padic(pair, &point, ctx)?;
        if ans.verdict != MemberVerdict::Yes {
            return Ok(BallAudit { passed: false, counterexample: Some(point), samples: j });
        }
    }
    Ok(BallAudit { passed: true, counterexample: None, samples })
}

/// The least ball exponent M <= bound whose audit passes, with sample count.
pub fn openness_audit_member(
    pair: &EtalePair,
    alpha: &[BigRational],
    ctx: &PadicCtx,
    m_bound: u32,
    samples: u32,
) -> Result<Option<u32>> {
    for m_exp in 0..=m_bound {
        if padic_ball_audit(pair, alpha, ctx, m_exp, samples)?.passed {
            return Ok(Some(m_exp));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::etale::power_pair;
    use crate::poly::uni::rat;

    fn squares() -> EtalePair {
        power_pair(&FieldCtx::Rationals, 2)
    }

    fn q5() -> PadicCtx {
        PadicCtx::new(5, 12).unwrap()
    }

    fn member(a: i64) -> MemberVerdict {
        member_padic(&squares(), &[rat(a, 1)], &q5()).unwrap().verdict
    }

    #[test]
    fn squares_over_q5_examples() {
        assert_eq!(member(6), MemberVerdict::Yes);
        assert_eq!(member(2), MemberVerdict::No);
        assert_eq!(member(5), MemberVerdict::No);
        assert_eq!(member(0), MemberVerdict::No);
        assert_eq!(member(-1), MemberVerdict::Yes); // -1 = 2^2 mod 5 lifts
        assert_eq!(member(25), MemberVerdict::Yes);
        assert_eq!(member(50), MemberVerdict::No);
    }

    #[test]
    fn rational_points_and_negative_valuations() {
        let c = q5();
        // 1/25 is a square with root of negative valuation.
        let ans = member_padic(&squares(), &[rat(1, 25)], &c).unwrap();
        assert_eq!(ans.verdict, MemberVerdict::Yes);
        let ans = member_padic(&squares(), &[rat(2, 25)], &c).unwrap();
        assert_eq!(ans.verdict, MemberVerdict::No);
        // Exact rational roots still answer Yes.
        let ans = member_padic(&squares(), &[rat(4, 9)], &c).unwrap();
        assert_eq!(ans.verdict, MemberVerdict::Yes);
    }

    #[test]
    fn denominators_divisible_by_p_are_rejected() {
        let ring = crate::poly::Ring::pair_ring(FieldCtx::Rationals, 1);
        let f = crate::poly::parse::parse_poly("y^2 - 1/5*x1", &ring).unwrap();
        let g = crate::poly::parse::parse_poly("y", &ring).unwrap();
        let pair = EtalePair::new(f, g).unwrap();
        assert_eq!(
            member_padic(&pair, &[rat(1, 1)], &q5()).err(),
            Some(Error::BadDenominator(5))
        );
    }

    #[test]
    fn exhaustive_oracle_agreement_small() {
        // Independent oracle: alpha in [-30, 30] is a nonzero square in Z_5
        // iff some b mod 5^6 has b^2 = alpha mod 5^6.
        let c = q5();
        let modulus = 5i64.pow(6);
        for a in -30..=30i64 {
            let oracle = (0..modulus).any(|b| (b * b - a).rem_euclid(modulus) == 0) && a != 0;
            let got = member(a) == MemberVerdict::Yes;
            assert_eq!(got, oracle, "alpha = {a}");
        }
    }

    #[test]
    fn ball_audit_examples() {
        let c = q5();
        // Units congruent to 1 mod 5 are squares: ball at M = 1 passes.
        let audit = padic_ball_audit(&squares(), &[rat(1, 1)], &c, 1, 25).unwrap();
        assert!(audit.passed);
        // The whole unit ball (M = 0) contains the non-square 2.
        let audit = padic_ball_audit(&squares(), &[rat(1, 1)], &c, 0, 25).unwrap();
        assert!(!audit.passed);
        assert_eq!(audit.counterexample, Some(vec![rat(2, 1)]));
        // Centering at a non-member is an error.
        assert_eq!(
            padic_ball_audit(&squares(), &[rat(2, 1)], &c, 1, 5).err(),
            Some(Error::NotAMember)
        );
        assert_eq!(openness_audit_member(&squares(), &[rat(1, 1)], &c, 10, 25).unwrap(), Some(1));
    }

    #[test]
    fn precision_monotonicity() {
        // Yes/No never flip as precision grows.
        for a in [-10i64, -3, 0, 2, 4, 5, 6, 9, 20, 50] {
            let mut decided: Option<MemberVerdict> = None;
            for n in [4u32, 8, 12, 16] {
                let ctx = PadicCtx::new(5, n).unwrap();
                let v = member_padic(&squares(), &[rat(a, 1)], &ctx).unwrap().verdict;
                if v != MemberVerdict::Unknown {
                    if let Some(prev) = decided {
                        assert_eq!(prev, v, "alpha = {a}, precision {n}");
                    }
                    decided = Some(v);
                }
            }
            assert!(decided.is_some(), "alpha = {a} never decided");
        }
    }

    #[test]
    fn hensel_family_membership() {
        // (5, 5, 5) lies in the image of the n = 2 family over Q_5: the
        // fiber root near -1 lifts.
        let pair = crate::etale::hensel_family_pair(&FieldCtx::Rationals, 2).unwrap();
        let c = q5();
        let ans = member_padic(&pair, &[rat(5, 1), rat(5, 1), rat(5, 1)], &c).unwrap();
        assert_eq!(ans.verdict, MemberVerdict::Yes);
        let ans = member_padic(&pair, &[rat(0, 1), rat(0, 1), rat(0, 1)], &c).unwrap();
        assert_eq!(ans.verdict, MemberVerdict::Yes);
    }
}
