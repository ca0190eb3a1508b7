//! Finite-precision p-adic numbers.
//!
//! A nonzero value is stored as `p^val * unit` with the unit known modulo
//! `p^prec`.  Arithmetic propagates the minimum surviving precision; when an
//! addition cancels every known digit the result degrades to
//! [`PadicNumber::Unresolved`], which records only a lower bound on the
//! valuation.  Downstream decision procedures treat that case as "unknown at
//! this precision" rather than guessing.

use num::bigint::{BigInt, BigUint};
use num::{Integer, One, Signed, Zero};

use crate::{Error, Result};
use num::rational::BigRational;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PadicCtx {
    pub p: u64,
    pub precision: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PadicNumber {
    /// Exact zero (valuation +infinity).
    Zero,
    /// `p^val * unit`, `gcd(unit, p) = 1`, unit known mod `p^prec`, `prec >= 1`.
    Finite { val: i64, unit: BigUint, prec: u32 },
    /// All known digits cancelled; the valuation is at least `min_val`.
    Unresolved { min_val: i64 },
}

/// What is known about a valuation.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Valuation {
    Exact(i64),
    AtLeast(i64),
    Infinite,
}

impl PadicCtx {
    pub fn new(p: u64, precision: u32) -> Result<Self> {
        if p == 2 || !super::fp::is_prime_u64(p) {
            return Err(Error::CompositeModulus(p));
        }
        if precision == 0 {
            return Err(Error::Parse("p-adic precision must be at least 1".into()));
        }
        Ok(PadicCtx { p, precision })
    }

    pub fn from_field_ctx(ctx: &super::FieldCtx) -> Result<Self> {
        match ctx {
            super::FieldCtx::Padic { p, precision } => Ok(PadicCtx { p: *p, precision: *precision }),
            other => Err(Error::WrongContext { expected: "Qp", got: other.to_string() }),
        }
    }

    fn pw(&self, k: u32) -> BigUint {
        BigUint::from(self.p).pow(k)
    }

    pub fn from_int(&self, n: i64) -> PadicNumber {
        self.from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact conversion: the valuation is exact, the unit is truncated to the
    /// context precision.
    pub fn from_rational(&self, r: &BigRational) -> PadicNumber {
        if r.is_zero() {
            return PadicNumber::Zero;
        }
        let val = rat_valuation(r, self.p).unwrap();
        let unit = rat_unit_mod(r, self.p, self.precision);
        PadicNumber::Finite { val, unit, prec: self.precision }
    }

    pub fn valuation(&self, x: &PadicNumber) -> Valuation {
        match x {
            PadicNumber::Zero => Valuation::Infinite,
            PadicNumber::Finite { val, .. } => Valuation::Exact(*val),
            PadicNumber::Unresolved { min_val } => Valuation::AtLeast(*min_val),
        }
    }

    pub fn neg(&self, x: &PadicNumber) -> PadicNumber {
        match x {
            PadicNumber::Finite { val, unit, prec } => {
                let modulus = self.pw(*prec);
                PadicNumber::Finite { val: *val, unit: (&modulus - unit % &modulus) % &modulus, prec: *prec }
            }
            other => other.clone(),
        }
    }

    pub fn add(&self, x: &PadicNumber, y: &PadicNumber) -> PadicNumber {
        use PadicNumber::*;
        match (x, y) {
            (Zero, z) | (z, Zero) => z.clone(),
            (Unresolved { min_val: a }, Unresolved { min_val: b }) => {
                Unresolved { min_val: *a.min(b) }
            }
            (Unresolved { min_val }, Finite { val, unit, prec })
            | (Finite { val, unit, prec }, Unresolved { min_val }) => {
                if *val < *min_val {
                    // The finite part dominates; digits beyond min_val - val
                    // are polluted by the unresolved summand.
                    let known = (*min_val - *val).min(*prec as i64) as u32;
                    if known == 0 {
                        Unresolved { min_val: *val }
                    } else {
                        Finite { val: *val, unit: unit % self.pw(known), prec: known }
                    }
                } else {
                    Unresolved { min_val: *val.min(min_val) }
                }
            }
            (Finite { val: va, unit: ua, prec: ra }, Finite { val: vb, unit: ub, prec: rb }) => {
                let (va, ua, ra, vb, ub, rb) =
                    if va <= vb { (va, ua, ra, vb, ub, rb) } else { (vb, ub, rb, va, ua, ra) };
                let shift = (vb - va) as u32;
                // Bracket = ua + p^shift * ub, known mod p^t.
                let t = (*ra).min(rb.saturating_add(shift));
                if t == 0 {
                    return Unresolved { min_val: *va };
                }
                let modulus = self.pw(t);
                let w = (ua + self.pw(shift) * ub) % &modulus;
                if w.is_zero() {
                    return Unresolved { min_val: va + t as i64 };
                }
                let s = big_valuation(&w, self.p) as u32;
                let unit = &w / self.pw(s);
                Finite { val: va + s as i64, unit, prec: t - s }
            }
        }
    }

    pub fn sub(&self, x: &PadicNumber, y: &PadicNumber) -> PadicNumber {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &PadicNumber, y: &PadicNumber) -> PadicNumber {
        use PadicNumber::*;
        match (x, y) {
            (Zero, _) | (_, Zero) => Zero,
            (Unresolved { min_val: a }, Unresolved { min_val: b }) => {
                Unresolved { min_val: a + b }
            }
            (Unresolved { min_val }, Finite { val, .. })
            | (Finite { val, .. }, Unresolved { min_val }) => Unresolved { min_val: min_val + val },
            (Finite { val: va, unit: ua, prec: ra }, Finite { val: vb, unit: ub, prec: rb }) => {
                let prec = (*ra).min(*rb);
                Finite { val: va + vb, unit: (ua * ub) % self.pw(prec), prec }
            }
        }
    }

    pub fn inv(&self, x: &PadicNumber) -> Result<PadicNumber> {
        match x {
            PadicNumber::Finite { val, unit, prec } => {
                let modulus = self.pw(*prec);
                let inv = mod_inverse_big(unit, &modulus)
                    .expect("unit is coprime to p by construction");
                Ok(PadicNumber::Finite { val: -val, unit: inv, prec: *prec })
            }
            _ => Err(Error::DivisionByZero(format!("Qp:{}", self.p))),
        }
    }

    /// Horner evaluation of a rational-coefficient polynomial at a p-adic
    /// point; coefficients convert exactly.
    pub fn eval_poly(&self, coeffs_low_first: &[BigRational], x: &PadicNumber) -> PadicNumber {
        let mut acc = PadicNumber::Zero;
        for c in coeffs_low_first.iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, &self.from_rational(c));
        }
        acc
    }
}

/// p-adic valuation of a nonzero rational; `None` for zero.
pub fn rat_valuation(r: &BigRational, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let num = big_valuation(&r.numer().abs().to_biguint().unwrap(), p);
    if num > 0 {
        return Some(num);
    }
    let den = big_valuation(&r.denom().abs().to_biguint().unwrap(), p);
    Some(-den)
}

fn big_valuation(n: &BigUint, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut v = 0i64;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// For r with v_p(r) = v, the unit `r / p^v` reduced mod `p^k` as a
/// nonnegative residue.
pub fn rat_unit_mod(r: &BigRational, p: u64, k: u32) -> BigUint {
    let v = rat_valuation(r, p).expect("unit of zero");
    let p_big = BigInt::from(p);
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    if v > 0 {
        num /= p_big.pow(v as u32);
    } else if v < 0 {
        den /= p_big.pow((-v) as u32);
    }
    let modulus = BigInt::from(p).pow(k);
    let num_res = num.mod_floor(&modulus).to_biguint().unwrap();
    let den_res = den.mod_floor(&modulus).to_biguint().unwrap();
    let den_inv = mod_inverse_big(&den_res, &modulus.to_biguint().unwrap()).unwrap();
    (num_res * den_inv) % modulus.to_biguint().unwrap()
}

fn mod_inverse_big(a: &BigUint, modulus: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(modulus.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(&m).to_biguint().unwrap())
}
