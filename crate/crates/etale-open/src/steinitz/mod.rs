//! Steinitz numbers and the square calculus for infinite algebraic
//! extensions of F_p.
//!
//! A Steinitz number is a formal product of prime powers with exponents in
//! N ∪ {∞}; it indexes the subfield F_{p^s} of the algebraic closure.  Only
//! finitely supported numbers are representable here — every computation
//! touches finitely many primes.  Squareness in the infinite field F_{p^s}
//! reduces to a single Euler test in the finite level lcm(n, 2^{val_2 s}).

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{embed, FieldCtx, K};
use crate::{Error, Result};

/// Exponent of one prime inside a Steinitz number.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Exp {
    Finite(u32),
    Inf,
}

/// A finitely supported formal product of prime powers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SteinitzNumber {
    /// prime -> exponent; zero exponents are never stored.
    exponents: BTreeMap<u64, Exp>,
}

impl SteinitzNumber {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_parts(parts: &[(u64, Exp)]) -> Result<Self> {
        let mut out = BTreeMap::new();
        for &(q, e) in parts {
            if !crate::algebra::fp::is_prime_u64(q) {
                return Err(Error::Parse(format!("{q} is not prime")));
            }
            match e {
                Exp::Finite(0) => {}
                e => {
                    if out.insert(q, e).is_some() {
                        return Err(Error::Parse(format!("prime {q} repeated")));
                    }
                }
            }
        }
        Ok(SteinitzNumber { exponents: out })
    }

    pub fn from_u64(mut n: u64) -> Self {
        let mut exponents = BTreeMap::new();
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                let mut e = 0u32;
                while n % d == 0 {
                    n /= d;
                    e += 1;
                }
                exponents.insert(d, Exp::Finite(e));
            }
            d += 1;
        }
        if n > 1 {
            exponents.insert(n, Exp::Finite(1));
        }
        SteinitzNumber { exponents }
    }

    /// val_q: the exponent of q (0 when absent).
    pub fn val(&self, q: u64) -> Exp {
        self.exponents.get(&q).copied().unwrap_or(Exp::Finite(0))
    }

    /// Componentwise exponent comparison.
    pub fn divides(&self, other: &SteinitzNumber) -> bool {
        self.exponents.iter().all(|(&q, &e)| match (e, other.val(q)) {
            (_, Exp::Inf) => true,
            (Exp::Inf, Exp::Finite(_)) => false,
            (Exp::Finite(a), Exp::Finite(b)) => a <= b,
        })
    }

    pub fn mul(&self, other: &SteinitzNumber) -> SteinitzNumber {
        let mut out = self.exponents.clone();
        for (&q, &e) in &other.exponents {
            let merged = match (self.val(q), e) {
                (Exp::Inf, _) | (_, Exp::Inf) => Exp::Inf,
                (Exp::Finite(a), Exp::Finite(b)) => Exp::Finite(a + b),
            };
            out.insert(q, merged);
        }
        SteinitzNumber { exponents: out }
    }

    pub fn lcm(&self, other: &SteinitzNumber) -> SteinitzNumber {
        let mut out = other.exponents.clone();
        for (&q, &e) in &self.exponents {
            let merged = match (e, other.val(q)) {
                (Exp::Inf, _) | (_, Exp::Inf) => Exp::Inf,
                (Exp::Finite(a), Exp::Finite(b)) => Exp::Finite(a.max(b)),
            };
            out.insert(q, merged);
        }
        SteinitzNumber { exponents: out }
    }

    /// The natural number this Steinitz number equals, if all exponents are
    /// finite and the product fits.
    pub fn as_natural(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for (&q, &e) in &self.exponents {
            match e {
                Exp::Inf => return None,
                Exp::Finite(k) => {
                    for _ in 0..k {
                        acc = acc.checked_mul(q)?;
                    }
                }
            }
        }
        Some(acc)
    }

    pub fn has_infinite_part(&self) -> bool {
        self.exponents.values().any(|e| matches!(e, Exp::Inf))
    }

    /// Parse `2^3*5^inf*7`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let mut parts = vec![];
        for factor in s.split('*') {
            let factor = factor.trim();
            let (q, e) = match factor.split_once('^') {
                None => {
                    let q: u64 =
                        factor.parse().map_err(|_| Error::Parse(format!("bad prime `{factor}`")))?;
                    (q, Exp::Finite(1))
                }
                Some((q, e)) => {
                    let q: u64 =
                        q.trim().parse().map_err(|_| Error::Parse(format!("bad prime `{q}`")))?;
                    let e = match e.trim() {
                        "inf" => Exp::Inf,
                        other => Exp::Finite(
                            other.parse().map_err(|_| Error::Parse(format!("bad exponent `{other}`")))?,
                        ),
                    };
                    (q, e)
                }
            };
            parts.push((q, e));
        }
        Self::from_parts(&parts)
    }
}

impl fmt::Display for SteinitzNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(q, e)| match e {
                Exp::Inf => format!("{q}^inf"),
                Exp::Finite(1) => format!("{q}"),
                Exp::Finite(k) => format!("{q}^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// The subfield F_{p^s} of the algebraic closure of F_p.
#[derive(Clone, Debug, PartialEq)]
pub struct SteinitzField {
    pub p: u64,
    pub s: SteinitzNumber,
}

impl SteinitzField {
    pub fn new(p: u64, s: SteinitzNumber) -> Result<Self> {
        if p == 2 || !crate::algebra::fp::is_prime_u64(p) {
            return Err(Error::CompositeModulus(p));
        }
        Ok(SteinitzField { p, s })
    }

    /// Parse `Fs:3^{2*5^inf}`.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad Steinitz field spec `{spec}`"));
        let rest = spec.trim().strip_prefix("Fs:").ok_or_else(bad)?;
        let (p, braced) = rest.split_once('^').ok_or_else(bad)?;
        let p: u64 = p.parse().map_err(|_| bad())?;
        let s_src = braced.strip_prefix('{').and_then(|b| b.strip_suffix('}')).ok_or_else(bad)?;
        SteinitzField::new(p, SteinitzNumber::parse(s_src)?)
    }

    /// F_{p^n} is a subfield iff n divides s.
    pub fn contains_subfield(&self, n: u64) -> bool {
        SteinitzNumber::from_u64(n).divides(&self.s)
    }

    /// The order 2^{val_2 s} of the maximal 2-power level; the base of the
    /// square calculus.
    pub fn k0(&self) -> Result<u64> {
        match self.s.val(2) {
            Exp::Inf => Err(Error::QuadraticallyClosed),
            Exp::Finite(v) => Ok(1u64 << v),
        }
    }

    /// Is `a` (an element of F_{p^n}) a square in F_{p^s}?  Reduces to one
    /// Euler test in F_{p^l}, l = lcm(n, k0): squares cannot appear first in
    /// any higher odd-degree level.
    pub fn is_square_in(&self, a: &K, n: u32) -> Result<bool> {
        if !self.contains_subfield(n as u64) {
            return Err(Error::ElementNotInField { p: self.p, n });
        }
        let k0 = self.k0()?;
        let l = lcm_u64(n as u64, k0);
        debug_assert!(SteinitzNumber::from_u64(l).divides(&self.s));
        let src = FieldCtx::ext_field(self.p, n)?;
        let dst = FieldCtx::ext_field(self.p, l as u32)?;
        let image = embed(a, &src, &dst)?;
        dst.is_square(&image)
    }

    /// Pseudofiniteness requires finite exponents at every prime plus an
    /// infinite field; with finite support that combination is impossible,
    /// which is exactly what this reports.
    pub fn pseudofinite_note(&self) -> String {
        if self.s.has_infinite_part() {
            format!(
                "F_{}^({}) is infinite but has val_q = inf somewhere, so it is not pseudofinite",
                self.p, self.s
            )
        } else {
            format!(
                "F_{}^({}) is the finite field of order {}^{}, hence not pseudofinite",
                self.p,
                self.s,
                self.p,
                self.s.as_natural().map(|n| n.to_string()).unwrap_or_else(|| "s".into())
            )
        }
    }
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}
