//! Resultants by Sylvester determinant, and gcd machinery for bivariate
//! polynomials viewed in the fiber variable.
//!
//! The determinant uses fraction-free (Bareiss) elimination, so everything
//! stays inside the polynomial ring.

use super::uni::UniPoly;
use super::{MultiPoly, Ring};
use crate::Result;

impl MultiPoly {
    /// Exact multivariate division; panics when not exact.  Exactness is an
    /// invariant at every call site (Bareiss pivots, gcd cofactors).
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let ctx = self.ring.ctx.clone();
        let (dm, dc) = divisor.leading().expect("division by zero polynomial");
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut quot = Self::zero(&self.ring);
        let mut rem = self.clone();
        while let Some((lm, lc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            assert!(dm.divides(&lm), "inexact polynomial division");
            let qm = dm.quotient_into(&lm);
            let qc = ctx.div(&lc, &dc).unwrap();
            quot.add_term(qm.clone(), qc.clone());
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
        }
        quot
    }
}

/// Res_var(f, g): the Sylvester resultant eliminating `var`.  The result
/// lives in the same ring with no occurrence of `var`.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> MultiPoly {
    let ring = f.ring.clone();
    if f.is_zero() || g.is_zero() {
        return MultiPoly::zero(&ring);
    }
    let df = f.degree_in(var) as usize;
    let dg = g.degree_in(var) as usize;
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    if df == 0 && dg == 0 {
        return MultiPoly::one(&ring);
    }
    if df == 0 {
        return fc[0].pow(dg as u32);
    }
    if dg == 0 {
        return gc[0].pow(df as u32);
    }
    let n = df + dg;
    let zero = MultiPoly::zero(&ring);
    let mut mat = vec![vec![zero.clone(); n]; n];
    // dg rows of f's coefficients (high to low), then df rows of g's.
    for i in 0..dg {
        for (k, c) in fc.iter().rev().enumerate() {
            mat[i][i + k] = c.clone();
        }
    }
    for i in 0..df {
        for (k, c) in gc.iter().rev().enumerate() {
            mat[dg + i][i + k] = c.clone();
        }
    }
    bareiss_det(mat, &ring)
}

fn bareiss_det(mut m: Vec<Vec<MultiPoly>>, ring: &Ring) -> MultiPoly {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = MultiPoly::one(ring);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return MultiPoly::zero(ring),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = MultiPoly::zero(ring);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// A bivariate polynomial (one base variable x1, fiber y, over Q) viewed as
/// a polynomial in y with coefficients in Q[x1].
#[derive(Clone, Debug)]
pub struct YPoly {
    /// Coefficient of y^i, low first; normalized (no zero tail).
    pub coeffs: Vec<UniPoly>,
}

impl YPoly {
    pub fn from_multipoly(f: &MultiPoly) -> Result<Self> {
        let yvar = f.ring.nvars() - 1;
        let mut coeffs = Vec::new();
        for c in f.coeffs_in(yvar) {
            coeffs.push(c.to_unipoly(0)?);
        }
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(YPoly { coeffs })
    }

    pub fn to_multipoly(&self, ring: &Ring) -> MultiPoly {
        let yvar = ring.nvars() - 1;
        let mut out = MultiPoly::zero(ring);
        let y = MultiPoly::var(ring, yvar);
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut xpoly = MultiPoly::zero(ring);
            for (j, a) in c.coeffs.iter().enumerate() {
                let term = MultiPoly::var(ring, 0)
                    .pow(j as u32)
                    .scale(&crate::algebra::K::Q(a.clone()));
                xpoly = xpoly.add(&term);
            }
            out = out.add(&xpoly.mul(&y.pow(i as u32)));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &UniPoly {
        self.coeffs.last().unwrap()
    }

    fn scale(&self, c: &UniPoly) -> Self {
        YPoly { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero);
            out.push(a.sub(&b));
        }
        YPoly { coeffs: out }.normalized()
    }

    fn mul_term(&self, c: &UniPoly, ypow: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(); ypow];
        coeffs.extend(self.coeffs.iter().map(|a| a.mul(c)));
        YPoly { coeffs }.normalized()
    }

    /// Pseudo-remainder: lead(g)^(df-dg+1) * f mod g.
    fn pseudo_rem(&self, g: &Self) -> Self {
        let dg = g.deg_y().expect("pseudo-division by zero");
        let mut r = self.clone();
        while let Some(dr) = r.deg_y() {
            if dr < dg {
                break;
            }
            let factor = r.lead().clone();
            r = r.scale(g.lead()).sub(&g.mul_term(&factor, dr - dg));
        }
        r
    }

    /// Divide out the Q[x1]-content, normalizing the sign of the lead.
    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut content = UniPoly::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                content = content.gcd(c);
            }
        }
        YPoly { coeffs: self.coeffs.iter().map(|c| c.div_exact(&content)).collect() }
    }
}

/// Gcd of two bivariate polynomials in the fiber variable, as a primitive
/// polynomial in Q[x1][y], monic-normalized when its lead is constant.
pub fn gcd_y(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    let ring = f.ring.clone();
    let mut a = YPoly::from_multipoly(f)?;
    let mut b = YPoly::from_multipoly(g)?;
    if a.is_zero() {
        return Ok(g.clone());
    }
    while !b.is_zero() {
        if b.deg_y() == Some(0) {
            // A nonzero coefficient-only polynomial divides everything up to
            // content; the y-gcd is its content class, i.e. 1 after
            // primitivization unless a is zero.
            return Ok(MultiPoly::one(&ring));
        }
        let r = a.pseudo_rem(&b).primitive();
        a = b;
        b = r;
    }
    let prim = a.primitive();
    let mp = prim.to_multipoly(&ring);
    // Normalize: if the y-leading coefficient is a nonzero rational, make it
    // monic in y.
    let yvar = ring.nvars() - 1;
    let coeffs = mp.coeffs_in(yvar);
    if let Some(lead) = coeffs.last() {
        if lead.total_degree() == Some(0) {
            let (_, c) = lead.leading().unwrap();
            return Ok(mp.scale(&ring.ctx.inv(c).unwrap()));
        }
    }
    Ok(mp)
}

/// f with repeated y-factors removed: f / gcd_y(f, df/dy).
pub fn squarefree_in_y(f: &MultiPoly) -> Result<MultiPoly> {
    let yvar = f.ring.nvars() - 1;
    let fy = f.partial_derivative(yvar);
    if fy.is_zero() {
        return Ok(f.clone());
    }
    let g = gcd_y(f, &fy)?;
    if g.total_degree() == Some(0) {
        return Ok(f.clone());
    }
    Ok(f.div_exact(&g))
}
