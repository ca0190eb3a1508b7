//! Explicit Weil restriction of scalars along a finite extension L/K.
//!
//! The extension is presented by a K-basis e_1..e_m with e_1 = 1 and
//! structure constants e_i e_j = sum_k c[i][j][k] e_k.  An L-polynomial is
//! carried as its m component polynomials over K.  Substituting
//! `x_i -> sum_j y_ij e_j` and expanding through the structure constants
//! turns one L-equation into m K-equations in m-times as many variables;
//! L-points correspond to K-points by plain coordinate reshaping.

use num::rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FieldCtx, K};
use crate::etale::EtalePair;
use crate::poly::parse::parse_poly;
use crate::poly::uni::UniPoly;
use crate::poly::{MultiPoly, Ring};
use crate::{Error, Result};

/// A K-basis of L with its multiplication table.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionBasis {
    pub base: FieldCtx,
    pub m: usize,
    /// constants[i][j][k]: the e_k-coordinate of e_i * e_j.
    pub constants: Vec<Vec<Vec<K>>>,
}

/// An element of L in basis coordinates.
pub type LElement = Vec<K>;

/// An L-point of affine n-space.
pub type LPoint = Vec<LElement>;

impl ExtensionBasis {
    /// Build and sanity-check a basis.  e_1 must act as the identity; the
    /// absence of zero divisors is probed on deterministic random samples.
    pub fn new(base: FieldCtx, constants: Vec<Vec<Vec<K>>>) -> Result<Self> {
        let m = constants.len();
        if m == 0 || constants.iter().any(|r| r.len() != m || r.iter().any(|v| v.len() != m)) {
            return Err(Error::BasisMismatch);
        }
        let basis = ExtensionBasis { base, m, constants };
        basis.check_identity()?;
        basis.check_basis_products()?;
        basis.check_no_zero_divisors(64)?;
        Ok(basis)
    }

    /// In a field, products of basis vectors cannot vanish.
    fn check_basis_products(&self) -> Result<()> {
        for i in 0..self.m {
            for j in 0..self.m {
                if self.constants[i][j].iter().all(|c| self.base.is_zero(c)) {
                    return Err(Error::BasisMismatch);
                }
            }
        }
        Ok(())
    }

    fn check_identity(&self) -> Result<()> {
        for j in 0..self.m {
            for k in 0..self.m {
                let want_delta = |v: &K| {
                    if j == k {
                        *v == self.base.one()
                    } else {
                        self.base.is_zero(v)
                    }
                };
                if !want_delta(&self.constants[0][j][k]) || !want_delta(&self.constants[j][0][k]) {
                    return Err(Error::BasisMismatch);
                }
            }
        }
        Ok(())
    }

    fn check_no_zero_divisors(&self, samples: u32) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..samples {
            let a = self.random_nonzero(&mut rng);
            let b = self.random_nonzero(&mut rng);
            if self.mul_elements(&a, &b).iter().all(|c| self.base.is_zero(c)) {
                return Err(Error::BasisMismatch);
            }
        }
        Ok(())
    }

    fn random_nonzero(&self, rng: &mut ChaCha8Rng) -> LElement {
        loop {
            let coords: Vec<K> = (0..self.m)
                .map(|_| match &self.base {
                    FieldCtx::Rationals => self.base.from_int(rng.gen_range(-9i64..=9)),
                    ctx => {
                        let q = ctx.order().unwrap();
                        ctx.decode(rng.gen_range(0..q as u64) as u128)
                    }
                })
                .collect();
            if coords.iter().any(|c| !self.base.is_zero(c)) {
                return coords;
            }
        }
    }

    /// Optional stronger check: a supplied minimal polynomial of a primitive
    /// element must be irreducible over the base (decided fully over F_p and
    /// for degree <= 3 over Q; higher Q-degrees check for rational roots).
    pub fn check_primitive_minpoly(&self, minpoly_src: &str) -> Result<()> {
        match &self.base {
            FieldCtx::Rationals => {
                let ring = Ring::with_names(FieldCtx::Rationals, &["t"]);
                let p = parse_poly(minpoly_src, &ring)?;
                let u: UniPoly = p.to_unipoly(0)?;
                let d = u.deg().ok_or(Error::BasisMismatch)?;
                if d != self.m {
                    return Err(Error::BasisMismatch);
                }
                let roots = crate::poly::algnum::isolate_real_roots(&u);
                let has_rational = roots
                    .iter()
                    .any(|r| matches!(r, crate::poly::algnum::RealAlgebraic::Rational(_)));
                if has_rational {
                    return Err(Error::BasisMismatch);
                }
                Ok(())
            }
            FieldCtx::PrimeField(p) => {
                let ring = Ring::with_names(self.base.clone(), &["t"]);
                let poly = parse_poly(minpoly_src, &ring)?;
                let coeffs: Vec<u64> = poly
                    .coeffs_in(0)
                    .iter()
                    .map(|c| match c.leading() {
                        None => 0,
                        Some((_, K::Fp(v))) => *v,
                        _ => 0,
                    })
                    .collect();
                let fp = crate::algebra::fp::FpPoly::new(*p, coeffs);
                if fp.deg() == Some(self.m) && fp.is_irreducible() {
                    Ok(())
                } else {
                    Err(Error::BasisMismatch)
                }
            }
            _ => Err(Error::BasisMismatch),
        }
    }

    /// Multiplication in L through the structure constants.
    pub fn mul_elements(&self, a: &[K], b: &[K]) -> LElement {
        let ctx = &self.base;
        let mut out = vec![ctx.zero(); self.m];
        for (i, ai) in a.iter().enumerate() {
            if ctx.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if ctx.is_zero(bj) {
                    continue;
                }
                let prod = ctx.mul(ai, bj);
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = &self.constants[i][j][k];
                    if !ctx.is_zero(c) {
                        *slot = ctx.add(slot, &ctx.mul(&prod, c));
                    }
                }
            }
        }
        out
    }

    /// The power basis of F_{p^m} over F_p with the canonical modulus.
    /// A degree-1 "extension" is the identity basis {1}.
    pub fn for_ext_field(p: u64, m: u32) -> Result<ExtensionBasis> {
        let base = FieldCtx::prime_field(p)?;
        if m == 1 {
            return ExtensionBasis::new(base.clone(), vec![vec![vec![base.one()]]]);
        }
        let ext = FieldCtx::ext_field(p, m)?;
        let m = m as usize;
        let mut constants = vec![vec![vec![base.zero(); m]; m]; m];
        for i in 0..m {
            for j in 0..m {
                // e_i * e_j = root^{i+j} reduced mod the modulus.
                let mut ei = vec![0u64; m];
                ei[i] = 1;
                let mut ej = vec![0u64; m];
                ej[j] = 1;
                let prod = ext.mul(&K::Fq(ei), &K::Fq(ej));
                let K::Fq(coords) = prod else { unreachable!() };
                for (k, &c) in coords.iter().enumerate() {
                    constants[i][j][k] = K::Fp(c);
                }
            }
        }
        ExtensionBasis::new(base, constants)
    }

    /// Q(i) over Q with basis {1, i}.
    pub fn gaussian_rationals() -> ExtensionBasis {
        parse_basis(QI_BASIS).expect("shipped preset parses")
    }
}

/// Shipped preset: Q(i)/Q.
pub const QI_BASIS: &str = include_str!("../../data/bases/Qi.basis");
/// Shipped preset: F_9/F_3 in the power basis of the canonical modulus.
pub const F9_OVER_F3_BASIS: &str = include_str!("../../data/bases/F9overF3.basis");

/// Parse a basis file: optional `base <spec>` line (default Q), then the
/// degree m, then m*m lines with the m structure constants of e_i * e_j in
/// row-major order.  `#` comments allowed.
pub fn parse_basis(text: &str) -> Result<ExtensionBasis> {
    let mut lines = text
        .lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let mut base = FieldCtx::Rationals;
    let mut first = lines.next().ok_or_else(|| Error::Parse("empty basis file".into()))?;
    if let Some(spec) = first.strip_prefix("base ") {
        base = FieldCtx::parse(spec)?;
        first = lines.next().ok_or_else(|| Error::Parse("basis file is missing a degree".into()))?;
    }
    let m: usize =
        first.parse().map_err(|_| Error::Parse(format!("bad basis degree `{first}`")))?;
    let mut constants = vec![vec![vec![base.zero(); m]; m]; m];
    for i in 0..m {
        for j in 0..m {
            let row = lines.next().ok_or_else(|| {
                Error::Parse(format!("basis file is missing the row for e_{} * e_{}", i + 1, j + 1))
            })?;
            let entries: Vec<&str> = row.split_whitespace().collect();
            if entries.len() != m {
                return Err(Error::Parse(format!("row `{row}` does not have {m} entries")));
            }
            for (k, e) in entries.iter().enumerate() {
                constants[i][j][k] = base.from_rational(&parse_rational(e)?)?;
            }
        }
    }
    ExtensionBasis::new(base, constants)
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        None => s.parse::<num::BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = n.parse::<num::BigInt>().map_err(|_| bad())?;
            let d = d.parse::<num::BigInt>().map_err(|_| bad())?;
            Ok(BigRational::new(n, d))
        }
    }
}

/// Flat variable ring for the restriction of an n-variable L-polynomial:
/// variable (i, j) (L-variable i, basis slot j) sits at index i*m + j.
fn restricted_ring(base: &FieldCtx, n: usize, m: usize) -> Ring {
    let names: Vec<String> =
        (0..n).flat_map(|i| (0..m).map(move |j| format!("y{}_{}", i + 1, j + 1))).collect();
    Ring { ctx: base.clone(), names }
}

/// Expand an L-polynomial (given by its m base components over an
/// n-variable ring) into its m restriction components over K[y_ij].
pub fn expand_polynomial(components: &[MultiPoly], basis: &ExtensionBasis) -> Result<Vec<MultiPoly>> {
    let m = basis.m;
    if components.is_empty() || components.len() > m {
        return Err(Error::BasisMismatch);
    }
    let src_ring = components[0].ring.clone();
    if src_ring.ctx != basis.base {
        return Err(Error::BasisMismatch);
    }
    let n = src_ring.nvars();
    let big = restricted_ring(&basis.base, n, m);
    let ctx = basis.base.clone();
    let mut out = vec![MultiPoly::zero(&big); m];
    for (l, comp) in components.iter().enumerate() {
        if comp.ring != src_ring {
            return Err(Error::BasisMismatch);
        }
        for (mono, c) in comp.terms() {
            // Start from the coefficient sitting in slot l (i.e. c * e_l)
            // and multiply by the substituted linear forms.
            let mut acc: Vec<MultiPoly> = vec![MultiPoly::zero(&big); m];
            acc[l] = MultiPoly::constant(&big, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    acc = mul_by_substituted_var(&acc, i, basis, &big, &ctx);
                }
            }
            for (k, slot) in out.iter_mut().enumerate() {
                *slot = slot.add(&acc[k]);
            }
        }
    }
    Ok(out)
}

/// Multiply a component vector by `sum_j y_{ij} e_j`.
fn mul_by_substituted_var(
    acc: &[MultiPoly],
    var: usize,
    basis: &ExtensionBasis,
    big: &Ring,
    ctx: &FieldCtx,
) -> Vec<MultiPoly> {
    let m = basis.m;
    let mut out = vec![MultiPoly::zero(big); m];
    for (j1, a) in acc.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for j2 in 0..m {
            let y = MultiPoly::var(big, var * m + j2);
            let prod = a.mul(&y);
            for (k, slot) in out.iter_mut().enumerate() {
                let c = &basis.constants[j1][j2][k];
                if !ctx.is_zero(c) {
                    *slot = slot.add(&prod.scale(c));
                }
            }
        }
    }
    out
}

/// Coordinate reshaping (Res V)(K) -> V(L): inverse of [`point_down`].
pub fn point_up(flat: &[K], m: usize) -> LPoint {
    flat.chunks(m).map(|c| c.to_vec()).collect()
}

/// Coordinate reshaping V(L) -> (Res V)(K).
pub fn point_down(point: &LPoint) -> Vec<K> {
    point.iter().flatten().cloned().collect()
}

/// Basis coordinates of a point over an extension-field context.
pub fn ext_point_coords(point: &[K]) -> LPoint {
    point
        .iter()
        .map(|k| match k {
            K::Fq(coords) => coords.iter().map(|&c| K::Fp(c)).collect(),
            K::Fp(v) => vec![K::Fp(*v)],
            K::Q(_) => panic!("rational elements have no basis coordinates"),
        })
        .collect()
}

/// The restriction of an etale pair over L: m equations from f, and the m
/// expansion components of g (the open condition is "not all zero").
#[derive(Clone, Debug)]
pub struct RestrictedSystem {
    pub base: FieldCtx,
    pub n: usize,
    pub m: usize,
    pub equations: Vec<MultiPoly>,
    pub inequation_components: Vec<MultiPoly>,
}

impl RestrictedSystem {
    /// Variable (L-variable i, basis slot j), zero-indexed.
    pub fn flat_index(&self, i: usize, j: usize) -> usize {
        i * self.m + j
    }

    /// Membership of a downstairs base point for the *pair* semantics: some
    /// fiber block solves every equation with not-all-zero inequation
    /// components.  The fiber block is the last m flat variables.
    pub fn fiber_member(&self, alpha_down: &[K]) -> Result<bool> {
        let ctx = &self.base;
        let q = ctx.order().ok_or_else(|| Error::WrongContext {
            expected: "finite base field",
            got: ctx.to_string(),
        })?;
        debug_assert_eq!(alpha_down.len(), self.n * self.m);
        let mut fiber = vec![0u128; self.m];
        loop {
            let mut point = alpha_down.to_vec();
            point.extend(fiber.iter().map(|&c| ctx.decode(c)));
            let all_eqs = self.equations.iter().all(|e| ctx.is_zero(&e.evaluate(&point)));
            if all_eqs {
                let some_ineq =
                    self.inequation_components.iter().any(|e| !ctx.is_zero(&e.evaluate(&point)));
                if some_ineq {
                    return Ok(true);
                }
            }
            let mut i = self.m as i64 - 1;
            while i >= 0 {
                fiber[i as usize] += 1;
                if fiber[i as usize] < q {
                    break;
                }
                fiber[i as usize] = 0;
                i -= 1;
            }
            if i < 0 {
                return Ok(false);
            }
        }
    }
}

/// Restrict a pair defined over L = F_{p^m} to the prime field along the
/// power basis.
pub fn restrict_pair(pair: &EtalePair, basis: &ExtensionBasis) -> Result<RestrictedSystem> {
    let ext_ctx = pair.ctx();
    let components_f = ext_components(&pair.f, basis)?;
    let components_g = ext_components(&pair.g, basis)?;
    let _ = ext_ctx;
    Ok(RestrictedSystem {
        base: basis.base.clone(),
        n: pair.n,
        m: basis.m,
        equations: expand_polynomial(&components_f, basis)?,
        inequation_components: expand_polynomial(&components_g, basis)?,
    })
}

/// Split a polynomial over an extension-field context into its m component
/// polynomials over the prime field.
fn ext_components(poly: &MultiPoly, basis: &ExtensionBasis) -> Result<Vec<MultiPoly>> {
    let m = match poly.ring.ctx {
        FieldCtx::ExtField { m, .. } => m as usize,
        FieldCtx::PrimeField(_) => 1,
        _ => return Err(Error::BasisMismatch),
    };
    if m != basis.m {
        return Err(Error::BasisMismatch);
    }
    let base_ring = Ring { ctx: basis.base.clone(), names: poly.ring.names.clone() };
    let mut out = vec![MultiPoly::zero(&base_ring); m];
    for (mono, c) in poly.terms() {
        match c {
            K::Fq(coords) => {
                for (l, &v) in coords.iter().enumerate() {
                    out[l].add_term(mono.clone(), K::Fp(v));
                }
            }
            K::Fp(v) => out[0].add_term(mono.clone(), K::Fp(*v)),
            K::Q(_) => return Err(Error::BasisMismatch),
        }
    }
    Ok(out)
}

/// Write f (over L, via components) as `sum_i beta_i g_i` with the beta_i a
/// base-basis of the coefficient span; returns g_1..g_d over the base.  The
/// base zero set of f equals the common zero set of the g_i.
pub fn zariski_descend(components: &[MultiPoly], basis: &ExtensionBasis) -> Result<Vec<MultiPoly>> {
    let m = basis.m;
    if components.is_empty() || components.len() > m {
        return Err(Error::BasisMismatch);
    }
    let ring = components[0].ring.clone();
    let ctx = basis.base.clone();
    // Coefficient vector per monomial.
    let mut monomials: Vec<crate::poly::Monomial> = vec![];
    for comp in components {
        for (mono, _) in comp.terms() {
            if !monomials.contains(mono) {
                monomials.push(mono.clone());
            }
        }
    }
    monomials.sort();
    let vectors: Vec<Vec<K>> = monomials
        .iter()
        .map(|mono| {
            (0..m)
                .map(|l| {
                    components
                        .get(l)
                        .and_then(|c| c.terms().find(|(mm, _)| *mm == mono).map(|(_, v)| v.clone()))
                        .unwrap_or_else(|| ctx.zero())
                })
                .collect()
        })
        .collect();
    // Greedy independent subset as the span basis, in monomial order.
    let mut span: Vec<Vec<K>> = vec![];
    let mut coords: Vec<Vec<K>> = vec![];
    for v in &vectors {
        let (reduced, lambda) = reduce_against(v, &span, &ctx)?;
        if reduced.iter().all(|c| ctx.is_zero(c)) {
            coords.push(lambda);
        } else {
            span.push(reduced);
            let mut lambda = lambda;
            lambda.push(ctx.one());
            coords.push(lambda);
        }
    }
    let d = span.len();
    let mut out = vec![MultiPoly::zero(&ring); d];
    for (mono, lambda) in monomials.iter().zip(&coords) {
        for (i, c) in lambda.iter().enumerate() {
            if !ctx.is_zero(c) {
                out[i].add_term(mono.clone(), c.clone());
            }
        }
    }
    // Monic leading coefficients; the zero sets are scale-invariant.
    let out = out
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (_, c) = g.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
            let inv = ctx.inv(&c).unwrap();
            g.scale(&inv)
        })
        .collect();
    Ok(out)
}

/// Express v over the partial triangular span; returns (residue, coords).
fn reduce_against(v: &[K], span: &[Vec<K>], ctx: &FieldCtx) -> Result<(Vec<K>, Vec<K>)> {
    let mut residue = v.to_vec();
    let mut coords = vec![];
    for b in span {
        // The span is kept triangular: each b has a pivot position where all
        // later span vectors vanish.  Use the first nonzero slot of b.
        let pivot = b.iter().position(|c| !ctx.is_zero(c)).unwrap();
        let factor = ctx.div(&residue[pivot], &b[pivot])?;
        for (r, bb) in residue.iter_mut().zip(b) {
            let delta = ctx.mul(&factor, bb);
            *r = ctx.sub(r, &delta);
        }
        coords.push(factor);
    }
    Ok((residue, coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::etale::{artin_schreier_pair, power_pair};
    use crate::images::{enumerate_finite, DEFAULT_BUDGET};
    use crate::poly::parse::parse_poly;

    fn qi() -> ExtensionBasis {
        ExtensionBasis::gaussian_rationals()
    }

    #[test]
    fn gaussian_expansion_of_x_squared_plus_one() {
        // (y1 + y2 i)^2 + 1 = (y1^2 - y2^2 + 1) + (2 y1 y2) i.
        let basis = qi();
        let ring = Ring::with_names(FieldCtx::Rationals, &["x1"]);
        let f = parse_poly("x1^2 + 1", &ring).unwrap();
        let out = expand_polynomial(&[f], &basis).unwrap();
        assert_eq!(out.len(), 2);
        let big = out[0].ring.clone();
        let (y1, y2) = (MultiPoly::var(&big, 0), MultiPoly::var(&big, 1));
        let expect0 = y1.pow(2).sub(&y2.pow(2)).add(&MultiPoly::one(&big));
        let expect1 = y1.mul(&y2).scale(&big.ctx.from_int(2));
        assert_eq!(out[0], expect0);
        assert_eq!(out[1], expect1);
    }

    #[test]
    fn expansion_of_identity_and_constants() {
        let basis = qi();
        let ring = Ring::with_names(FieldCtx::Rationals, &["x1"]);
        let f = parse_poly("x1", &ring).unwrap();
        let out = expand_polynomial(&[f], &basis).unwrap();
        assert_eq!(out[0].to_string(), "y1_1");
        assert_eq!(out[1].to_string(), "y1_2");
        // c = 3 + 2i.
        let c0 = parse_poly("3", &ring).unwrap();
        let c1 = parse_poly("2", &ring).unwrap();
        let out = expand_polynomial(&[c0, c1], &basis).unwrap();
        assert_eq!(out[0].to_string(), "3");
        assert_eq!(out[1].to_string(), "2");
    }

    #[test]
    fn expansion_matches_evaluation_at_random_points() {
        // f(a) computed in L equals the assembled expansion at point_down(a).
        let basis = qi();
        let ring = Ring::with_names(FieldCtx::Rationals, &["x1", "x2"]);
        let f = parse_poly("x1^2*x2 - 3*x1 + x2^3 - 1/2", &ring).unwrap();
        let out = expand_polynomial(&[f.clone()], &basis).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let ctx = FieldCtx::Rationals;
        for _ in 0..100 {
            let point: LPoint = (0..2)
                .map(|_| vec![ctx.from_int(rng.gen_range(-5i64..=5)), ctx.from_int(rng.gen_range(-5i64..=5))])
                .collect();
            // Evaluate f at the L-point via basis arithmetic.
            let eval_l = eval_l_poly(&[f.clone()], &point, &basis);
            let down = point_down(&point);
            let got: Vec<K> = out.iter().map(|c| c.evaluate(&down)).collect();
            assert_eq!(eval_l, got);
            assert_eq!(point_up(&down, 2), point);
        }
    }

    /// L-valued evaluation of a component-presented polynomial.
    fn eval_l_poly(components: &[MultiPoly], point: &LPoint, basis: &ExtensionBasis) -> LElement {
        let ctx = &basis.base;
        let mut acc = vec![ctx.zero(); basis.m];
        for (l, comp) in components.iter().enumerate() {
            for (mono, c) in comp.terms() {
                let mut term = vec![ctx.zero(); basis.m];
                term[l] = c.clone();
                for (i, &e) in mono.0.iter().enumerate() {
                    for _ in 0..e {
                        term = basis.mul_elements(&term, &point[i]);
                    }
                }
                for (k, t) in term.into_iter().enumerate() {
                    acc[k] = ctx.add(&acc[k], &t);
                }
            }
        }
        acc
    }

    #[test]
    fn power_basis_f9_matches_field_multiplication() {
        let basis = ExtensionBasis::for_ext_field(3, 2).unwrap();
        let f9 = FieldCtx::ext_field(3, 2).unwrap();
        for a in f9.elements() {
            for b in f9.elements() {
                let K::Fq(ac) = a.clone() else { unreachable!() };
                let K::Fq(bc) = b.clone() else { unreachable!() };
                let av: LElement = ac.iter().map(|&c| K::Fp(c)).collect();
                let bv: LElement = bc.iter().map(|&c| K::Fp(c)).collect();
                let K::Fq(pc) = f9.mul(&a, &b) else { unreachable!() };
                let pv: LElement = pc.iter().map(|&c| K::Fp(c)).collect();
                assert_eq!(basis.mul_elements(&av, &bv), pv);
            }
        }
    }

    #[test]
    fn dual_path_membership_squares_and_artin_schreier_over_f9() {
        let f9 = FieldCtx::ext_field(3, 2).unwrap();
        let basis = ExtensionBasis::for_ext_field(3, 2).unwrap();
        for pair in [
            power_pair(&FieldCtx::Rationals, 2).map_ctx(&f9).unwrap(),
            artin_schreier_pair(3).unwrap().map_ctx(&f9).unwrap(),
        ] {
            let sys = restrict_pair(&pair, &basis).unwrap();
            let direct = enumerate_finite(
                &crate::etale::EtaleCover::single(pair.clone()),
                &f9,
                DEFAULT_BUDGET,
            )
            .unwrap();
            for code in 0..9u128 {
                let alpha = f9.decode(code);
                let down = point_down(&ext_point_coords(&[alpha]));
                let via_restriction = sys.fiber_member(&down).unwrap();
                assert_eq!(via_restriction, direct.contains(&[code]), "code {code}");
            }
        }
    }

    #[test]
    fn degree_one_restriction_is_identity() {
        let basis = ExtensionBasis::for_ext_field(5, 1);
        // Degree 1 collapses to the prime field, which has basis {1}.
        assert!(basis.is_err() || basis.unwrap().m == 1);
    }

    #[test]
    fn canonical_inclusion_maps_base_solutions_into_the_system() {
        // For f defined over F_3, base points with f = 0 solve the
        // restricted system at y_i1 = x_i, y_ij = 0.
        let f3 = FieldCtx::prime_field(3).unwrap();
        let basis = ExtensionBasis::for_ext_field(3, 2).unwrap();
        let ring = Ring::with_names(f3.clone(), &["x1", "x2"]);
        let f = parse_poly("x1^2 + x2^2 + x1*x2 + 1", &ring).unwrap();
        let comps = ext_components(&f.map_ctx(&FieldCtx::ext_field(3, 2).unwrap()).unwrap(), &basis).unwrap();
        let eqs = expand_polynomial(&comps, &basis).unwrap();
        for a in 0..3i64 {
            for b in 0..3i64 {
                let pt = [f3.from_int(a), f3.from_int(b)];
                if !f3.is_zero(&f.evaluate(&pt)) {
                    continue;
                }
                let embedded =
                    vec![f3.from_int(a), f3.from_int(0), f3.from_int(b), f3.from_int(0)];
                for e in &eqs {
                    assert!(f3.is_zero(&e.evaluate(&embedded)));
                }
            }
        }
    }

    #[test]
    fn descend_examples() {
        let basis = qi();
        let ring = Ring::with_names(FieldCtx::Rationals, &["x1", "x2"]);
        // f = i*x1: components (0, x1) -> single equation x1.
        let zero = MultiPoly::zero(&ring);
        let ix1 = parse_poly("x1", &ring).unwrap();
        let out = zariski_descend(&[zero, ix1], &basis).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].to_string(), "x1");
        // f = x1 + i*x2 -> {x1, x2}.
        let c0 = parse_poly("x1", &ring).unwrap();
        let c1 = parse_poly("x2", &ring).unwrap();
        let out = zariski_descend(&[c0, c1], &basis).unwrap();
        let strs: Vec<String> = out.iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["x1", "x2"]);
        // f already over the base -> {f}.
        let f = parse_poly("x1^2 - x2", &ring).unwrap();
        let out = zariski_descend(&[f.clone()], &basis).unwrap();
        assert_eq!(out, vec![f]);
    }

    #[test]
    fn descend_zero_sets_agree_over_finite_fields() {
        // Over F_9 expressed via components: base points where f vanishes
        // equal common zeros of the descended polynomials.
        let f3 = FieldCtx::prime_field(3).unwrap();
        let f9 = FieldCtx::ext_field(3, 2).unwrap();
        let basis = ExtensionBasis::for_ext_field(3, 2).unwrap();
        let ring9 = Ring::with_names(f9.clone(), &["x1", "x2"]);
        // f = g * x1 + x2 where g is the modulus root: components (x2, x1).
        let g_root = MultiPoly::constant(&ring9, K::Fq(vec![0, 1]));
        let f = g_root
            .mul(&MultiPoly::var(&ring9, 0))
            .add(&MultiPoly::var(&ring9, 1));
        let comps = ext_components(&f, &basis).unwrap();
        let descended = zariski_descend(&comps, &basis).unwrap();
        for a in 0..3u128 {
            for b in 0..3u128 {
                let pt9 = [
                    crate::algebra::embed(&f3.decode(a), &f3, &f9).unwrap(),
                    crate::algebra::embed(&f3.decode(b), &f3, &f9).unwrap(),
                ];
                let vanishes = f9.is_zero(&f.evaluate(&pt9));
                let pt3 = [f3.decode(a), f3.decode(b)];
                let all = descended.iter().all(|g| f3.is_zero(&g.evaluate(&pt3)));
                assert_eq!(vanishes, all, "({a},{b})");
            }
        }
    }

    #[test]
    fn basis_files_parse_and_validate() {
        let qi = parse_basis(QI_BASIS).unwrap();
        assert_eq!(qi.m, 2);
        qi.check_primitive_minpoly("t^2 + 1").unwrap();
        let f9 = parse_basis(F9_OVER_F3_BASIS).unwrap();
        assert_eq!(f9.m, 2);
        assert_eq!(f9.base, FieldCtx::PrimeField(3));
        f9.check_primitive_minpoly("t^2 + 1").unwrap();
        // A multiplication table with zero divisors is rejected: e_2^2 = 0.
        let bad = "2\n1 0\n0 1\n0 1\n0 0\n";
        assert!(parse_basis(bad).is_err());
    }
}
