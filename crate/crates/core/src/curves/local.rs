//! Local analysis at a point of an affine plane curve: multiplicity, tangent
//! cone, and the δ-invariant by iterated blowing up.

use std::collections::BTreeMap;

use super::plane::PlaneCurve;
use super::point::ProjPoint;
use crate::algebra::{Gf, GfPoly, Ring};
use crate::{Error, Result};

/// A polynomial in two affine coordinates `(u, v)` over GF(2^k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly2 {
    k: u8,
    terms: BTreeMap<(u32, u32), Gf>,
}

/// Binomial expansion mod 2: `(u + a)^i` has a `u^r` term iff `r` is a
/// submask of `i` (Lucas).
fn submasks(i: u32) -> impl Iterator<Item = u32> {
    let mut r = Some(i);
    std::iter::from_fn(move || {
        let cur = r?;
        r = if cur == 0 { None } else { Some((cur - 1) & i) };
        Some(cur)
    })
}

impl Poly2 {
    pub fn zero(k: u8) -> Self {
        Poly2 { k, terms: BTreeMap::new() }
    }

    pub fn field_degree(&self) -> u8 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Gf> {
        &self.terms
    }

    pub fn add_term(&mut self, e: (u32, u32), c: Gf) {
        if c.is_zero() {
            return;
        }
        let s = self.terms.remove(&e).map(|old| old + c).unwrap_or(c);
        if !s.is_zero() {
            self.terms.insert(e, s);
        }
    }

    pub fn from_terms(k: u8, terms: impl IntoIterator<Item = ((u32, u32), Gf)>) -> Self {
        let mut p = Poly2::zero(k);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn embed(&self, m: u8) -> Poly2 {
        Poly2::from_terms(m, self.terms.iter().map(|(e, c)| (*e, c.embed(m))))
    }

    /// `f(u + a, v + b)`
    pub fn translate(&self, a: Gf, b: Gf) -> Poly2 {
        let mut out = Poly2::zero(self.k);
        for (&(i, j), &c) in &self.terms {
            for r in submasks(i) {
                let ca = c * a.pow((i - r) as u64);
                if ca.is_zero() {
                    continue;
                }
                for s in submasks(j) {
                    out.add_term((r, s), ca * b.pow((j - s) as u64));
                }
            }
        }
        out
    }

    /// Lowest total degree of a term, `None` for zero.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, j)| (i + j) as usize).min()
    }

    /// The tangent cone as `T(1, λ)` together with the coefficient of `v^m`.
    fn tangent_cone(&self, m: usize) -> (GfPoly, Gf) {
        let mut coeffs = vec![Gf::zero(self.k); m + 1];
        for (&(i, j), &c) in &self.terms {
            if (i + j) as usize == m {
                coeffs[j as usize] = c;
            }
        }
        let top = coeffs[m];
        (GfPoly::new(self.k, coeffs), top)
    }

    /// Strict transform in the chart `v = u v'`.
    fn chart_u(&self, m: u32) -> Poly2 {
        Poly2::from_terms(self.k, self.terms.iter().map(|(&(i, j), &c)| ((i + j - m, j), c)))
    }

    /// Strict transform in the chart `u = u' v`.
    fn chart_v(&self, m: u32) -> Poly2 {
        Poly2::from_terms(self.k, self.terms.iter().map(|(&(i, j), &c)| ((i, i + j - m), c)))
    }
}

/// δ of the curve at `p`: the sum of `m(m-1)/2` over all infinitely near
/// points, passing to extension fields for non-rational directions.
pub fn delta_blowup(curve: &PlaneCurve, p: &ProjPoint) -> Result<usize> {
    if !curve.contains(p) {
        return Err(Error::NotOnCurve(p.to_string()));
    }
    let d = curve.degree() as usize;
    // a reduced curve of degree d has total δ at most d(d-1)/2
    let mut budget = d * (d.saturating_sub(1)) / 2;
    let f = curve.local_at(p);
    delta_local(&f, &mut budget).map_err(|e| match e {
        Error::NonIsolated(_) => Error::NonIsolated(format!("non-isolated singularity at {p}")),
        other => other,
    })
}

fn delta_local(f: &Poly2, budget: &mut usize) -> Result<usize> {
    let Some(m) = f.order() else {
        return Err(Error::NonIsolated(String::new()));
    };
    if m <= 1 {
        return Ok(0);
    }
    let here = m * (m - 1) / 2;
    if here > *budget {
        return Err(Error::NonIsolated(String::new()));
    }
    *budget -= here;
    let mut delta = here;
    let (cone, top) = f.tangent_cone(m);
    let k = f.k;
    let fu = f.chart_u(m as u32);
    for (part, _) in cone.squarefree_decomposition() {
        for (deg, prod) in part.distinct_degree_factorization() {
            let ext = k as usize * deg;
            if ext > crate::algebra::gf::MAX_DEGREE as usize {
                return Err(Error::Unsupported(format!("tangent direction needs GF(2^{ext})")));
            }
            let ext = ext as u8;
            let lifted = fu.embed(ext);
            for r in orbit_representatives(&prod.embed(ext).roots(), k) {
                delta += deg * delta_local(&lifted.translate(Gf::zero(ext), r), budget)?;
            }
        }
    }
    if top.is_zero() {
        delta += delta_local(&f.chart_v(m as u32), budget)?;
    }
    Ok(delta)
}

/// One root from each orbit of `x -> x^(2^k)`.
fn orbit_representatives(roots: &[Gf], k: u8) -> Vec<Gf> {
    let mut seen = std::collections::BTreeSet::new();
    let mut reps = Vec::new();
    for &r in roots {
        if seen.contains(&r) {
            continue;
        }
        reps.push(r);
        let mut cur = r;
        loop {
            seen.insert(cur);
            for _ in 0..k {
                cur = cur * cur;
            }
            if cur == r {
                break;
            }
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MPoly, VarCtx};

    fn curve(src: &str, k: u8) -> PlaneCurve {
        let ctx = VarCtx::new(&["x", "y", "z"]);
        PlaneCurve::from_mpoly(&MPoly::parse(&ctx, src).unwrap(), &[], k).unwrap()
    }

    fn origin(k: u8) -> ProjPoint {
        ProjPoint::new(Gf::zero(k), Gf::zero(k), Gf::one(k)).unwrap()
    }

    #[test]
    fn cusp_and_node() {
        assert_eq!(delta_blowup(&curve("y^2*z + x^3", 1), &origin(1)).unwrap(), 1);
        assert_eq!(delta_blowup(&curve("y^2*z + x*y*z + x^3", 1), &origin(1)).unwrap(), 1);
    }

    #[test]
    fn tacnode_and_higher_cusp() {
        // y (y + x^2): two smooth branches meeting with multiplicity 2
        assert_eq!(delta_blowup(&curve("y^2*z + x^2*y", 1), &origin(1)).unwrap(), 2);
        // y^2 = x^5: δ = 2
        assert_eq!(delta_blowup(&curve("y^2*z^3 + x^5", 1), &origin(1)).unwrap(), 2);
        // ordinary triple point with non-rational tangents: x^3 + y^3 + ...
        let c = curve("x^3*z + x^2*y*z + y^3*z + x^4 + y^4", 1);
        assert_eq!(delta_blowup(&c, &origin(1)).unwrap(), 3);
    }

    #[test]
    fn non_isolated_is_detected() {
        let c = curve("x^2*y^2 + x^2*z^2", 1);
        assert!(matches!(delta_blowup(&c, &origin(1)), Err(Error::NonIsolated(_))));
    }

    #[test]
    fn smooth_point_has_delta_zero() {
        assert_eq!(delta_blowup(&curve("y*z + x^2", 2), &origin(2)).unwrap(), 0);
    }
}
