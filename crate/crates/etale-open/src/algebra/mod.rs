//! Exact arithmetic for every supported coefficient field.
//!
//! A [`FieldCtx`] describes one concrete field — Q, F_p, F_{p^m}, or Q_p at
//! fixed precision — and owns the arithmetic on [`K`] element values.  All
//! values are immutable; every operation is a pure function of its inputs,
//! so contexts and elements can be shared freely across threads.
//!
//! The library-wide restriction to odd characteristic lives here: prime and
//! extension contexts refuse `p = 2`.

pub mod fp;
pub mod padic;

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::{Error, Result};
use fp::{mod_inv, mod_mul, FpPoly};

pub use padic::{PadicCtx, PadicNumber, Valuation};

/// Field sizes above this are refused at construction.
pub const FIELD_SIZE_BUDGET: u128 = 1 << 40;

/// Brute-force scans (root searches for subfield embeddings) refuse fields
/// larger than this.
const SCAN_BUDGET: u128 = 1 << 26;

/// A concrete computable field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldCtx {
    Rationals,
    PrimeField(u64),
    ExtField {
        p: u64,
        m: u32,
        /// Canonical monic irreducible of degree m, all m+1 coefficients,
        /// low degree first.
        modulus: Vec<u64>,
    },
    Padic {
        p: u64,
        precision: u32,
    },
}

/// An element of some [`FieldCtx`].  Elements do not carry their context;
/// containers (polynomials, point sets) hold one context for all of them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum K {
    Q(BigRational),
    Fp(u64),
    /// Coordinates in the power basis of the modulus root, length m.
    Fq(Vec<u64>),
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !fp::is_prime_u64(p) {
        return Err(Error::CompositeModulus(p));
    }
    Ok(())
}

impl FieldCtx {
    pub fn rationals() -> Self {
        FieldCtx::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        require_odd_prime(p)?;
        Ok(FieldCtx::PrimeField(p))
    }

    /// F_{p^m} with the canonical modulus: the monic irreducible of degree m
    /// over F_p with the smallest base-p coefficient code.  `m = 1` collapses
    /// to the prime field.
    pub fn ext_field(p: u64, m: u32) -> Result<Self> {
        require_odd_prime(p)?;
        if m == 0 {
            return Err(Error::Parse("extension degree must be positive".into()));
        }
        if (p as u128).checked_pow(m).map_or(true, |q| q > FIELD_SIZE_BUDGET) {
            return Err(Error::DegreeTooLarge { p, m });
        }
        if m == 1 {
            return Ok(FieldCtx::PrimeField(p));
        }
        Ok(FieldCtx::ExtField {
            p,
            m,
            modulus: fp::canonical_irreducible(p, m),
        })
    }

    pub fn padic(p: u64, precision: u32) -> Result<Self> {
        require_odd_prime(p)?;
        if precision == 0 {
            return Err(Error::Parse("p-adic precision must be at least 1".into()));
        }
        Ok(FieldCtx::Padic { p, precision })
    }

    /// Parse a field spec string: `Q`, `Fp:<p>`, `Fq:<p>^<m>`, `Qp:<p>@<N>`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldCtx::Rationals);
        }
        let bad = || Error::Parse(format!("bad field spec `{s}`"));
        if let Some(rest) = s.strip_prefix("Fp:") {
            let p: u64 = rest.parse().map_err(|_| bad())?;
            return FieldCtx::prime_field(p);
        }
        if let Some(rest) = s.strip_prefix("Fq:") {
            let (p, m) = rest.split_once('^').ok_or_else(bad)?;
            let p: u64 = p.parse().map_err(|_| bad())?;
            let m: u32 = m.parse().map_err(|_| bad())?;
            return FieldCtx::ext_field(p, m);
        }
        if let Some(rest) = s.strip_prefix("Qp:") {
            let (p, n) = rest.split_once('@').ok_or_else(bad)?;
            let p: u64 = p.parse().map_err(|_| bad())?;
            let n: u32 = n.parse().map_err(|_| bad())?;
            return FieldCtx::padic(p, n);
        }
        Err(bad())
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldCtx::Rationals | FieldCtx::Padic { .. } => 0,
            FieldCtx::PrimeField(p) | FieldCtx::ExtField { p, .. } => *p,
        }
    }

    /// Number of elements, for finite contexts.
    pub fn order(&self) -> Option<u128> {
        match self {
            FieldCtx::PrimeField(p) => Some(*p as u128),
            FieldCtx::ExtField { p, m, .. } => Some((*p as u128).pow(*m)),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// True for contexts whose elements are [`K`] values (everything but Q_p).
    pub fn carries_elements(&self) -> bool {
        !matches!(self, FieldCtx::Padic { .. })
    }

    fn expect_parts(&self) -> (u64, usize) {
        match self {
            FieldCtx::PrimeField(p) => (*p, 1),
            FieldCtx::ExtField { p, m, .. } => (*p, *m as usize),
            other => panic!("finite-field operation on {other}"),
        }
    }

    pub fn zero(&self) -> K {
        match self {
            FieldCtx::Rationals => K::Q(BigRational::zero()),
            FieldCtx::PrimeField(_) => K::Fp(0),
            FieldCtx::ExtField { m, .. } => K::Fq(vec![0; *m as usize]),
            FieldCtx::Padic { .. } => panic!("p-adic numbers are not K elements"),
        }
    }

    pub fn one(&self) -> K {
        match self {
            FieldCtx::Rationals => K::Q(BigRational::one()),
            FieldCtx::PrimeField(_) => K::Fp(1),
            FieldCtx::ExtField { m, .. } => {
                let mut v = vec![0; *m as usize];
                v[0] = 1;
                K::Fq(v)
            }
            FieldCtx::Padic { .. } => panic!("p-adic numbers are not K elements"),
        }
    }

    pub fn from_int(&self, n: i64) -> K {
        match self {
            FieldCtx::Rationals => K::Q(BigRational::from_integer(BigInt::from(n))),
            FieldCtx::PrimeField(p) => K::Fp(n.rem_euclid(*p as i64) as u64),
            FieldCtx::ExtField { p, m, .. } => {
                let mut v = vec![0; *m as usize];
                v[0] = n.rem_euclid(*p as i64) as u64;
                K::Fq(v)
            }
            FieldCtx::Padic { .. } => panic!("p-adic numbers are not K elements"),
        }
    }

    /// Map a rational into the field.  Fails over F_p contexts when the
    /// denominator is divisible by p.
    pub fn from_rational(&self, r: &BigRational) -> Result<K> {
        match self {
            FieldCtx::Rationals => Ok(K::Q(r.clone())),
            FieldCtx::PrimeField(p) | FieldCtx::ExtField { p, .. } => {
                let p_big = BigInt::from(*p);
                let den = r.denom();
                if (den % &p_big).is_zero() {
                    return Err(Error::BadDenominator(*p));
                }
                let num_res = residue_mod(r.numer(), *p);
                let den_res = residue_mod(den, *p);
                let value = mod_mul(num_res, mod_inv(den_res, *p), *p);
                match self {
                    FieldCtx::PrimeField(_) => Ok(K::Fp(value)),
                    FieldCtx::ExtField { m, .. } => {
                        let mut v = vec![0; *m as usize];
                        v[0] = value;
                        Ok(K::Fq(v))
                    }
                    _ => unreachable!(),
                }
            }
            FieldCtx::Padic { .. } => panic!("p-adic numbers are not K elements"),
        }
    }

    pub fn is_zero(&self, a: &K) -> bool {
        match a {
            K::Q(r) => r.is_zero(),
            K::Fp(v) => *v == 0,
            K::Fq(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn add(&self, a: &K, b: &K) -> K {
        match (self, a, b) {
            (FieldCtx::Rationals, K::Q(x), K::Q(y)) => K::Q(x + y),
            (FieldCtx::PrimeField(p), K::Fp(x), K::Fp(y)) => K::Fp((x + y) % p),
            (FieldCtx::ExtField { p, .. }, K::Fq(x), K::Fq(y)) => {
                K::Fq(x.iter().zip(y).map(|(&u, &v)| (u + v) % p).collect())
            }
            _ => panic!("element/context mismatch in add"),
        }
    }

    pub fn neg(&self, a: &K) -> K {
        match (self, a) {
            (FieldCtx::Rationals, K::Q(x)) => K::Q(-x),
            (FieldCtx::PrimeField(p), K::Fp(x)) => K::Fp((p - x) % p),
            (FieldCtx::ExtField { p, .. }, K::Fq(x)) => {
                K::Fq(x.iter().map(|&u| (p - u) % p).collect())
            }
            _ => panic!("element/context mismatch in neg"),
        }
    }

    pub fn sub(&self, a: &K, b: &K) -> K {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &K, b: &K) -> K {
        match (self, a, b) {
            (FieldCtx::Rationals, K::Q(x), K::Q(y)) => K::Q(x * y),
            (FieldCtx::PrimeField(p), K::Fp(x), K::Fp(y)) => K::Fp(mod_mul(*x, *y, *p)),
            (FieldCtx::ExtField { p, modulus, .. }, K::Fq(x), K::Fq(y)) => {
                let fx = FpPoly::new(*p, x.clone());
                let fy = FpPoly::new(*p, y.clone());
                let modp = FpPoly::new(*p, modulus.clone());
                let prod = fx.mul(&fy).rem(&modp);
                K::Fq(self.pad(prod.coeffs))
            }
            _ => panic!("element/context mismatch in mul"),
        }
    }

    fn pad(&self, mut v: Vec<u64>) -> Vec<u64> {
        let (_, m) = self.expect_parts();
        v.resize(m, 0);
        v
    }

    pub fn inv(&self, a: &K) -> Result<K> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero(self.to_string()));
        }
        Ok(match (self, a) {
            (FieldCtx::Rationals, K::Q(x)) => K::Q(x.recip()),
            (FieldCtx::PrimeField(p), K::Fp(x)) => K::Fp(mod_inv(*x, *p)),
            (FieldCtx::ExtField { p, modulus, .. }, K::Fq(x)) => {
                let inv = ext_inverse(*p, modulus, x);
                K::Fq(self.pad(inv))
            }
            _ => panic!("element/context mismatch in inv"),
        })
    }

    pub fn div(&self, a: &K, b: &K) -> Result<K> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &K, mut e: u128) -> K {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Integer code of a finite-field element: coordinates as base-p digits,
    /// constant coordinate least significant.
    pub fn encode(&self, a: &K) -> u128 {
        match (self, a) {
            (FieldCtx::PrimeField(_), K::Fp(v)) => *v as u128,
            (FieldCtx::ExtField { p, .. }, K::Fq(coords)) => {
                let mut acc = 0u128;
                for &c in coords.iter().rev() {
                    acc = acc * *p as u128 + c as u128;
                }
                acc
            }
            _ => panic!("encode needs a finite context"),
        }
    }

    pub fn decode(&self, mut code: u128) -> K {
        let (p, m) = self.expect_parts();
        let mut coords = Vec::with_capacity(m);
        for _ in 0..m {
            coords.push((code % p as u128) as u64);
            code /= p as u128;
        }
        match self {
            FieldCtx::PrimeField(_) => K::Fp(coords[0]),
            FieldCtx::ExtField { .. } => K::Fq(coords),
            _ => unreachable!(),
        }
    }

    /// All field elements in canonical (code) order.
    pub fn elements(&self) -> impl Iterator<Item = K> + '_ {
        let q = self.order().expect("elements() needs a finite context");
        (0..q).map(move |i| self.decode(i))
    }

    /// The Frobenius automorphism x -> x^p.
    pub fn frobenius(&self, a: &K) -> Result<K> {
        match self {
            FieldCtx::PrimeField(_) => Ok(a.clone()),
            FieldCtx::ExtField { p, .. } => Ok(self.pow(a, *p as u128)),
            other => Err(Error::WrongContext { expected: "finite field", got: other.to_string() }),
        }
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(&self, a: &K) -> Result<bool> {
        let q = self.order().ok_or_else(|| Error::WrongContext {
            expected: "finite field",
            got: self.to_string(),
        })?;
        if self.is_zero(a) {
            return Ok(true);
        }
        Ok(self.pow(a, (q - 1) / 2) == self.one())
    }

    /// Norm down to the prime field: the product of all conjugates.
    pub fn norm_to_prime(&self, a: &K) -> Result<u64> {
        match self {
            FieldCtx::PrimeField(_) => match a {
                K::Fp(v) => Ok(*v),
                _ => panic!("element/context mismatch"),
            },
            FieldCtx::ExtField { p, .. } => {
                if self.is_zero(a) {
                    return Ok(0);
                }
                let q = self.order().unwrap();
                let n = self.pow(a, (q - 1) / (*p as u128 - 1));
                match n {
                    K::Fq(coords) => {
                        debug_assert!(coords[1..].iter().all(|&c| c == 0));
                        Ok(coords[0])
                    }
                    _ => unreachable!(),
                }
            }
            other => Err(Error::WrongContext { expected: "finite field", got: other.to_string() }),
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldCtx::Rationals => write!(f, "Q"),
            FieldCtx::PrimeField(p) => write!(f, "Fp:{p}"),
            FieldCtx::ExtField { p, m, .. } => write!(f, "Fq:{p}^{m}"),
            FieldCtx::Padic { p, precision } => write!(f, "Qp:{p}@{precision}"),
        }
    }
}

fn residue_mod(n: &BigInt, p: u64) -> u64 {
    use num::ToPrimitive;
    let p_big = BigInt::from(p);
    let mut r = n % &p_big;
    if r.is_negative() {
        r += &p_big;
    }
    r.to_u64().unwrap()
}

fn ext_inverse(p: u64, modulus: &[u64], coords: &[u64]) -> Vec<u64> {
    // Extended Euclid in F_p[x]: find u with u*a = 1 mod modulus.
    let a = FpPoly::new(p, coords.to_vec());
    let m = FpPoly::new(p, modulus.to_vec());
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut s0, mut s1) = (FpPoly::zero(p), FpPoly::constant(p, 1));
    while !r1.is_zero() {
        // r0 = q*r1 + r2
        let q = poly_quotient(&r0, &r1);
        let r2 = r0.sub(&q.mul(&r1));
        let s2 = s0.sub(&q.mul(&s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    debug_assert_eq!(r0.deg(), Some(0), "element not invertible mod modulus");
    let scale = mod_inv(r0.lead(), p);
    s0.scale(scale).coeffs
}

fn poly_quotient(num: &FpPoly, den: &FpPoly) -> FpPoly {
    let p = num.p;
    let d = den.deg().expect("division by zero polynomial");
    let inv_lead = mod_inv(den.lead(), p);
    let mut rem = num.coeffs.clone();
    let mut quot = vec![0u64; rem.len().saturating_sub(d)];
    while rem.len() > d {
        let k = rem.len() - 1;
        let factor = mod_mul(*rem.last().unwrap(), inv_lead, p);
        quot[k - d] = factor;
        if factor != 0 {
            for (i, &c) in den.coeffs.iter().enumerate() {
                let idx = k - d + i;
                rem[idx] = (rem[idx] + p - mod_mul(factor, c, p)) % p;
            }
        }
        rem.pop();
        while rem.len() > d && rem.last() == Some(&0) {
            rem.pop();
        }
    }
    FpPoly::new(p, quot)
}

/// The inclusion F_{p^r} -> F_{p^m} for r | m.  The modulus root of the
/// source maps to its root in the target with the smallest element code;
/// prime-field elements map to constants.
pub fn embed(a: &K, src: &FieldCtx, dst: &FieldCtx) -> Result<K> {
    if src == dst {
        return Ok(a.clone());
    }
    let (ps, r) = match src {
        FieldCtx::PrimeField(p) => (*p, 1u32),
        FieldCtx::ExtField { p, m, .. } => (*p, *m),
        other => {
            return Err(Error::WrongContext { expected: "finite field", got: other.to_string() })
        }
    };
    let (pd, m) = match dst {
        FieldCtx::PrimeField(p) => (*p, 1u32),
        FieldCtx::ExtField { p, m, .. } => (*p, *m),
        other => {
            return Err(Error::WrongContext { expected: "finite field", got: other.to_string() })
        }
    };
    if ps != pd || m % r != 0 {
        return Err(Error::NotASubfield { p: ps, r, m });
    }
    match a {
        K::Q(_) => unreachable!("rational elements have no finite source context"),
        K::Fp(v) => Ok(dst.from_int(*v as i64)),
        K::Fq(coords) => {
            let FieldCtx::ExtField { modulus, .. } = src else { unreachable!() };
            let root = smallest_root_of(modulus, ps, dst)?;
            // a = sum coords[i] * rho^i maps to sum coords[i] * root^i.
            let mut acc = dst.zero();
            for &c in coords.iter().rev() {
                acc = dst.mul(&acc, &root);
                acc = dst.add(&acc, &dst.from_int(c as i64));
            }
            Ok(acc)
        }
    }
}

fn smallest_root_of(modulus: &[u64], p: u64, dst: &FieldCtx) -> Result<K> {
    let q = dst.order().unwrap();
    if q > SCAN_BUDGET {
        let (_, m) = dst.expect_parts();
        return Err(Error::DegreeTooLarge { p, m: m as u32 });
    }
    let consts: Vec<K> = modulus.iter().map(|&c| dst.from_int(c as i64)).collect();
    for code in 0..q {
        let x = dst.decode(code);
        let mut acc = dst.zero();
        for c in consts.iter().rev() {
            acc = dst.mul(&acc, &x);
            acc = dst.add(&acc, c);
        }
        if dst.is_zero(&acc) {
            return Ok(x);
        }
    }
    unreachable!("modulus of degree r | m always splits in F_p^m")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_ext_field_degree_one_is_prime_field() {
        assert_eq!(FieldCtx::ext_field(3, 1).unwrap(), FieldCtx::PrimeField(3));
    }

    #[test]
    fn make_ext_field_canonical_moduli() {
        match FieldCtx::ext_field(3, 2).unwrap() {
            FieldCtx::ExtField { modulus, .. } => assert_eq!(modulus, vec![1, 0, 1]),
            _ => panic!(),
        }
        match FieldCtx::ext_field(5, 2).unwrap() {
            FieldCtx::ExtField { modulus, .. } => assert_eq!(modulus, vec![2, 0, 1]),
            _ => panic!(),
        }
    }

    #[test]
    fn make_ext_field_rejects_composite_and_even() {
        assert_eq!(FieldCtx::ext_field(9, 2), Err(Error::CompositeModulus(9)));
        assert_eq!(FieldCtx::ext_field(2, 3), Err(Error::CompositeModulus(2)));
        assert!(matches!(FieldCtx::ext_field(3, 40), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn field_spec_round_trip() {
        for s in ["Q", "Fp:7", "Fq:3^2", "Qp:5@12"] {
            assert_eq!(FieldCtx::parse(s).unwrap().to_string(), s);
        }
        assert!(FieldCtx::parse("Fq:4^2").is_err());
        assert!(FieldCtx::parse("R").is_err());
    }

    #[test]
    fn embed_prime_subfield_is_identity_on_constants() {
        let f3 = FieldCtx::prime_field(3).unwrap();
        let f9 = FieldCtx::ext_field(3, 2).unwrap();
        let two = embed(&K::Fp(2), &f3, &f9).unwrap();
        assert_eq!(two, K::Fq(vec![2, 0]));
    }

    #[test]
    fn embed_rejects_non_divisor_degrees() {
        let f9 = FieldCtx::ext_field(3, 2).unwrap();
        let f27 = FieldCtx::ext_field(3, 3).unwrap();
        let a = f9.from_int(1);
        assert_eq!(
            embed(&a, &f9, &f27),
            Err(Error::NotASubfield { p: 3, r: 2, m: 3 })
        );
    }

    #[test]
    fn embed_f9_into_f81_preserves_minimal_polynomial() {
        let f9 = FieldCtx::ext_field(3, 2).unwrap();
        let f81 = FieldCtx::ext_field(3, 4).unwrap();
        // The F_9 modulus root g satisfies g^2 + 1 = 0; its image must too,
        // and must not lie in the prime field.
        let g = K::Fq(vec![0, 1]);
        let img = embed(&g, &f9, &f81).unwrap();
        let sq = f81.mul(&img, &img);
        assert_eq!(f81.add(&sq, &f81.one()), f81.zero());
        assert_ne!(f81.frobenius(&img).unwrap(), img, "image must have degree 2");
        let frob2 = f81.frobenius(&f81.frobenius(&img).unwrap()).unwrap();
        assert_eq!(frob2, img);
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let f9 = FieldCtx::ext_field(3, 2).unwrap();
        let f81 = FieldCtx::ext_field(3, 4).unwrap();
        for a in f9.elements() {
            for b in f9.elements() {
                let ea = embed(&a, &f9, &f81).unwrap();
                let eb = embed(&b, &f9, &f81).unwrap();
                assert_eq!(embed(&f9.add(&a, &b), &f9, &f81).unwrap(), f81.add(&ea, &eb));
                assert_eq!(embed(&f9.mul(&a, &b), &f9, &f81).unwrap(), f81.mul(&ea, &eb));
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_prime_field() {
        let f3 = FieldCtx::prime_field(3).unwrap();
        let f27 = FieldCtx::ext_field(3, 3).unwrap();
        let prime_image: Vec<K> =
            f3.elements().map(|a| embed(&a, &f3, &f27).unwrap()).collect();
        for a in f27.elements() {
            let fixed = f27.frobenius(&a).unwrap() == a;
            assert_eq!(fixed, prime_image.contains(&a), "element {a:?}");
        }
    }

    #[test]
    fn euler_criterion_examples() {
        let f5 = FieldCtx::prime_field(5).unwrap();
        assert!(!f5.is_square(&K::Fp(2)).unwrap());
        let f7 = FieldCtx::prime_field(7).unwrap();
        assert!(f7.is_square(&K::Fp(0)).unwrap());
        // 2 generates a subgroup of order 2 inside the cyclic group of
        // order 8, hence is a fourth power in F_9.
        let f9 = FieldCtx::ext_field(3, 2).unwrap();
        assert!(f9.is_square(&f9.from_int(2)).unwrap());
    }

    #[test]
    fn squares_multiply_by_xnor() {
        let f9 = FieldCtx::ext_field(3, 2).unwrap();
        for a in f9.elements().filter(|a| !f9.is_zero(a)) {
            for b in f9.elements().filter(|b| !f9.is_zero(b)) {
                let lhs = f9.is_square(&f9.mul(&a, &b)).unwrap();
                let rhs = f9.is_square(&a).unwrap() == f9.is_square(&b).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn norm_lands_in_prime_field() {
        let f9 = FieldCtx::ext_field(3, 2).unwrap();
        for a in f9.elements() {
            let n = f9.norm_to_prime(&a).unwrap();
            assert!(n < 3);
            if !f9.is_zero(&a) {
                assert_ne!(n, 0);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_f25() {
        let f25 = FieldCtx::ext_field(5, 2).unwrap();
        let els: Vec<K> = f25.elements().collect();
        for a in &els {
            if !f25.is_zero(a) {
                let inv = f25.inv(a).unwrap();
                assert_eq!(f25.mul(a, &inv), f25.one());
            }
            for b in &els {
                assert_eq!(f25.add(a, b), f25.add(b, a));
                assert_eq!(f25.mul(a, b), f25.mul(b, a));
            }
        }
    }
}
