//! Primality testing and univariate polynomial arithmetic over F_p.
//!
//! This is the substrate for extension-field construction: enumerating the
//! canonical irreducible modulus, reducing products, and inverting elements
//! all happen on dense coefficient vectors over the prime field.

/// Deterministic Miller-Rabin, valid for all `u64` inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` mod prime `p` via Fermat.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    mod_pow(a, p - 2, p)
}

/// Dense univariate polynomial over F_p, coefficients low degree first,
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        *self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + b) % p;
        }
        Self::new(p, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + p - b) % p;
        }
        Self::new(p, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mod_mul(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        Self::new(p, self.coeffs.iter().map(|&a| mod_mul(a, c, p)).collect())
    }

    /// Remainder of `self` modulo `divisor` (divisor nonzero).
    pub fn rem(&self, divisor: &Self) -> Self {
        let p = self.p;
        let d = divisor.deg().expect("division by zero polynomial");
        let inv_lead = mod_inv(divisor.lead(), p);
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = mod_mul(rem[k], inv_lead, p);
            if factor != 0 {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    rem[idx] = (rem[idx] + p - mod_mul(factor, c, p)) % p;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        FpPoly { p, coeffs: rem }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(mod_inv(self.lead(), self.p))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mod_mul(acc, x, p) + c) % p;
        }
        acc
    }

    /// `x^(p^k) mod self`, by iterated Frobenius.
    fn x_frobenius_pow(&self, k: u32) -> Self {
        let mut t = Self::x(self.p).rem(self);
        for _ in 0..k {
            t = t.pow_mod(self.p, self);
        }
        t
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut acc = Self::constant(self.p, 1).rem(modulus);
        let mut base = self.rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// Irreducibility over F_p: `x^(p^m) = x mod f` and for each prime
    /// divisor l of m, `gcd(x^(p^(m/l)) - x, f) = 1`.
    pub fn is_irreducible(&self) -> bool {
        let m = match self.deg() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        let x = Self::x(self.p);
        let frob_m = self.x_frobenius_pow(m as u32);
        if frob_m != x.rem(self) {
            return false;
        }
        for l in prime_divisors(m as u64) {
            let t = self.x_frobenius_pow((m as u64 / l) as u32);
            let g = t.sub(&x).gcd(self);
            if g.deg() != Some(0) {
                return false;
            }
        }
        true
    }
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The canonical modulus for F_{p^m}: the monic irreducible of degree m
/// whose non-leading coefficient vector encodes the smallest integer in
/// base p (constant term as least-significant digit).  Returns all m+1
/// coefficients, low degree first.
pub fn canonical_irreducible(p: u64, m: u32) -> Vec<u64> {
    assert!(m >= 2, "degree-1 moduli are never materialized");
    let m = m as usize;
    let mut code = 0u128;
    let total = (p as u128).pow(m as u32);
    while code < total {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut k = code;
        for _ in 0..m {
            coeffs.push((k % p as u128) as u64);
            k /= p as u128;
        }
        coeffs.push(1);
        let f = FpPoly::new(p, coeffs.clone());
        if f.is_irreducible() {
            return coeffs;
        }
        code += 1;
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(9973));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(9975));
        assert!(is_prime_u64(2_147_483_647));
    }

    #[test]
    fn canonical_modulus_matches_exhaustive_oracle() {
        // Oracle: walk monic quadratics in ascending coefficient code and
        // take the first with no root (degree 2 means root-free = irreducible).
        for p in [3u64, 5, 7] {
            let mut expect = None;
            'outer: for code in 0..p * p {
                let c0 = code % p;
                let c1 = code / p;
                for x in 0..p {
                    if (mod_mul(x, x, p) + mod_mul(c1, x, p) + c0) % p == 0 {
                        continue 'outer;
                    }
                }
                expect = Some(vec![c0, c1, 1]);
                break;
            }
            assert_eq!(canonical_irreducible(p, 2), expect.unwrap());
        }
        // Frozen values from the oracle above.
        assert_eq!(canonical_irreducible(3, 2), vec![1, 0, 1]); // x^2 + 1
        assert_eq!(canonical_irreducible(5, 2), vec![2, 0, 1]); // x^2 + 2
    }

    #[test]
    fn irreducibility_agrees_with_factor_search() {
        // Degree-4 check: irreducible iff no root and no irreducible
        // quadratic factor.
        let p = 3u64;
        for code in 0..81u64 {
            let coeffs = vec![code % 3, (code / 3) % 3, (code / 9) % 3, (code / 27) % 3, 1];
            let f = FpPoly::new(p, coeffs);
            let mut has_factor = (0..p).any(|x| f.eval(x) == 0);
            if !has_factor {
                'quad: for c0 in 0..p {
                    for c1 in 0..p {
                        let q = FpPoly::new(p, vec![c0, c1, 1]);
                        if q.is_irreducible() && f.rem(&q).is_zero() {
                            has_factor = true;
                            break 'quad;
                        }
                    }
                }
            }
            assert_eq!(f.is_irreducible(), !has_factor, "poly {:?}", f.coeffs);
        }
    }
}
