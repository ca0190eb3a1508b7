//! Dense univariate polynomials over Q: Euclidean arithmetic, Sturm
//! sequences, and exact real-root isolation.
//!
//! Everything here is exact.  Sturm chains are renormalized to primitive
//! integer form (positive scale only) at each step to keep coefficients
//! small without disturbing signs.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    /// Coefficients low degree first, no trailing zeros.
    pub coeffs: Vec<BigRational>,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> &BigRational {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder; `other` must be nonzero.
    pub fn divrem(&self, other: &Self) -> (Self, Self) {
        let d = other.deg().expect("division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = &rem[k] / other.lead();
            if !factor.is_zero() {
                quot[k - d] = factor.clone();
                for (i, c) in other.coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    let delta = &factor * c;
                    rem[idx] -= delta;
                }
            }
            rem.pop();
            while rem.len() > d && rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, other: &Self) -> Self {
        self.divrem(other).1
    }

    /// Exact division; panics when the division is not exact.
    pub fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.divrem(other);
        assert!(r.is_zero(), "inexact univariate division");
        q
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// f / gcd(f, f'): same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.deg() == Some(0) {
            return self.monic();
        }
        self.div_exact(&g).monic()
    }

    /// Positive-scale normalization to coprime integer coefficients.
    /// Signs are preserved, which is what Sturm chains need.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        Self::new(ints.into_iter().map(|c| BigRational::from_integer(c / &g)).collect())
    }

    /// Substitute x -> a*x + b.
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        let mut acc = Self::zero();
        let lin = Self::new(vec![b.clone(), a.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Cauchy bound: all real roots lie in (-B, B).
    pub fn root_bound(&self) -> BigRational {
        let lead = self.lead().abs();
        let mut max = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let t = c.abs() / &lead;
            if t > max {
                max = t;
            }
        }
        max + BigRational::one()
    }
}

/// One rational endpoint or infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

/// The Sturm chain of the squarefree part, primitive-normalized.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(f: &UniPoly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let s = f.squarefree_part();
        let mut chain = vec![s.clone()];
        if s.deg().unwrap() >= 1 {
            chain.push(s.derivative().primitive());
            loop {
                let k = chain.len();
                let r = chain[k - 2].rem(&chain[k - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg().primitive());
            }
        }
        Ok(SturmChain { chain })
    }

    pub fn poly(&self) -> &UniPoly {
        &self.chain[0]
    }

    fn variations_at(&self, t: &Bound) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| match t {
                Bound::NegInf => {
                    let s = sign(p.lead());
                    if p.deg().unwrap() % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                }
                Bound::PosInf => sign(p.lead()),
                Bound::Finite(x) => sign(&p.eval(x)),
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in (-inf, t].
    pub fn count_le(&self, t: &Bound) -> usize {
        match t {
            Bound::NegInf => 0,
            Bound::PosInf => self.variations_at(&Bound::NegInf) - self.variations_at(&Bound::PosInf),
            Bound::Finite(x) => {
                let s = self.poly();
                if s.eval(x).is_zero() {
                    // Deflate the rational root and count strictly smaller
                    // roots of the rest.
                    let linear = UniPoly::new(vec![-x.clone(), BigRational::one()]);
                    let rest = s.div_exact(&linear);
                    let sub = if rest.is_zero() || rest.deg() == Some(0) {
                        0
                    } else {
                        SturmChain::new(&rest).unwrap().count_le(t)
                    };
                    1 + sub
                } else {
                    self.variations_at(&Bound::NegInf) - self.variations_at(&Bound::Finite(x.clone()))
                }
            }
        }
    }

    /// Number of distinct real roots in (a, b].
    pub fn count_interval(&self, a: &Bound, b: &Bound) -> usize {
        self.count_le(b) - self.count_le(a)
    }
}

/// Sylvester resultant of two univariate rationals, by exact Gaussian
/// elimination.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> BigRational {
    if f.is_zero() || g.is_zero() {
        return BigRational::zero();
    }
    let df = f.deg().unwrap();
    let dg = g.deg().unwrap();
    if df == 0 && dg == 0 {
        return BigRational::one();
    }
    if df == 0 {
        let mut acc = BigRational::one();
        for _ in 0..dg {
            acc *= &f.coeffs[0];
        }
        return acc;
    }
    if dg == 0 {
        let mut acc = BigRational::one();
        for _ in 0..df {
            acc *= &g.coeffs[0];
        }
        return acc;
    }
    let n = df + dg;
    let mut mat = vec![vec![BigRational::zero(); n]; n];
    for i in 0..dg {
        for (k, c) in f.coeffs.iter().rev().enumerate() {
            mat[i][i + k] = c.clone();
        }
    }
    for i in 0..df {
        for (k, c) in g.coeffs.iter().rev().enumerate() {
            mat[dg + i][i + k] = c.clone();
        }
    }
    let mut det = BigRational::one();
    for k in 0..n {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&i| !mat[i][k].is_zero()) {
                Some(i) => {
                    mat.swap(k, i);
                    det = -det;
                }
                None => return BigRational::zero(),
            }
        }
        let pivot = mat[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if mat[i][k].is_zero() {
                continue;
            }
            let factor = &mat[i][k] / &pivot;
            for j in k..n {
                let delta = &factor * &mat[k][j];
                mat[i][j] -= delta;
            }
        }
    }
    det
}

pub fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots of `f` in the interval (a, b].
pub fn sturm_count(f: &UniPoly, a: &Bound, b: &Bound) -> Result<usize> {
    Ok(SturmChain::new(f)?.count_interval(a, b))
}
