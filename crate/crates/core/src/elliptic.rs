//! Weierstrass cubics in characteristic two.
//!
//! `y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6`

use std::fmt;

use serde::Serialize;

use crate::algebra::{Field, Gf, Ring};
use crate::curves::{line_points, PlaneCurve, ProjPoint};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct WeierstrassCoeffs<F> {
    pub a1: F,
    pub a2: F,
    pub a3: F,
    pub a4: F,
    pub a6: F,
}

/// Coordinate change `x = μ^2 x' + ϱ`, `y = μ^3 y' + σ μ^2 x' + τ`.
#[derive(Clone, PartialEq, Debug)]
pub struct TransformParams<F> {
    pub mu: F,
    pub rho: F,
    pub sigma: F,
    pub tau: F,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum NormalFormCase {
    /// `(0, 0, a3, a4, a6)`
    JZero,
    /// `(1, a2, 0, 0, a6)`
    JNonzero,
    /// `(1, a2, 0, a4, 0)`, available when j is a square
    JSquare,
}

impl<F: Ring> WeierstrassCoeffs<F> {
    pub fn new(a1: F, a2: F, a3: F, a4: F, a6: F) -> Self {
        WeierstrassCoeffs { a1, a2, a3, a4, a6 }
    }

    pub fn as_array(&self) -> [F; 5] {
        [self.a1.clone(), self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a6.clone()]
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> WeierstrassCoeffs<G> {
        WeierstrassCoeffs::new(f(&self.a1), f(&self.a2), f(&self.a3), f(&self.a4), f(&self.a6))
    }

    /// `Δ = a1^6 a6 + a1^5 a3 a4 + a1^4 a2 a3^2 + a1^4 a4^2 + a1^3 a3^3 + a3^4`
    pub fn discriminant(&self) -> F {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        a1.pow(6) * a6.clone()
            + a1.pow(5) * a3.clone() * a4.clone()
            + a1.pow(4) * a2.clone() * a3.square()
            + a1.pow(4) * a4.square()
            + a1.pow(3) * a3.pow(3)
            + a3.pow(4)
    }

    /// The cubic form `y^2 z + a1 x y z + a3 y z^2 + x^3 + a2 x^2 z + a4 x z^2 + a6 z^3`.
    pub fn form(&self) -> PlaneCurve<F> {
        let one = self.a1.one_like();
        PlaneCurve::from_terms(
            3,
            [
                ([0, 2, 1], one.clone()),
                ([1, 1, 1], self.a1.clone()),
                ([0, 1, 2], self.a3.clone()),
                ([3, 0, 0], one),
                ([2, 0, 1], self.a2.clone()),
                ([1, 0, 2], self.a4.clone()),
                ([0, 0, 3], self.a6.clone()),
            ],
        )
        .unwrap()
    }
}

impl<F: Field> WeierstrassCoeffs<F> {
    /// `j = a1^12 / Δ`
    pub fn j_invariant(&self) -> Result<F> {
        let delta = self.discriminant();
        self.a1
            .pow(12)
            .div(&delta)
            .ok_or_else(|| Error::SingularCurve(format!("{self:?}")))
    }

    /// Applies the coordinate change; requires `μ ≠ 0`.
    pub fn transform(&self, p: &TransformParams<F>) -> WeierstrassCoeffs<F> {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let (mu, r, s, t) = (&p.mu, &p.rho, &p.sigma, &p.tau);
        let inv = mu.inv().expect("μ must be nonzero");
        let n1 = a1.clone();
        let n2 = a2.clone() + s.clone() * a1.clone() + r.clone() + s.square();
        let n3 = a3.clone() + r.clone() * a1.clone();
        let n4 = a4.clone()
            + s.clone() * a3.clone()
            + (t.clone() + s.clone() * r.clone()) * a1.clone()
            + r.square();
        let n6 = a6.clone()
            + r.clone() * a4.clone()
            + t.clone() * a3.clone()
            + r.square() * a2.clone()
            + r.clone() * t.clone() * a1.clone()
            + r.pow(3)
            + t.square();
        WeierstrassCoeffs::new(
            n1 * inv.clone(),
            n2 * inv.pow(2),
            n3 * inv.pow(3),
            n4 * inv.pow(4),
            n6 * inv.pow(6),
        )
    }

    /// Normal form per the value of j, with the change of coordinates used.
    ///
    /// For j ≠ 0 the curve is put in the shape `(1, a2, 0, 0, a6)`; when `a6`
    /// then has a square root `η` the shape `(1, a2, 0, η, 0)` is returned
    /// instead. Inputs already in the returned shape come back unchanged with
    /// identity parameters.
    pub fn normal_form(&self) -> Result<(NormalFormCase, WeierstrassCoeffs<F>, TransformParams<F>)> {
        let delta = self.discriminant();
        if delta.is_zero() {
            return Err(Error::SingularCurve(format!("{self:?}")));
        }
        let zero = self.a1.zero_like();
        let one = self.a1.one_like();
        let id = TransformParams::identity(&one);
        if self.a1.is_zero() {
            if self.a2.is_zero() {
                return Ok((NormalFormCase::JZero, self.clone(), id));
            }
            let p = TransformParams { mu: one, rho: self.a2.clone(), sigma: zero.clone(), tau: zero };
            return Ok((NormalFormCase::JZero, self.transform(&p), p));
        }
        if self.a1.is_one() && self.a3.is_zero() && self.a6.is_zero() {
            return Ok((NormalFormCase::JSquare, self.clone(), id));
        }
        let first = if self.a1.is_one() && self.a3.is_zero() && self.a4.is_zero() {
            id
        } else {
            let rho = self.a3.div(&self.a1).unwrap();
            let tau = (self.a4.clone() + rho.square()).div(&self.a1).unwrap();
            TransformParams { mu: self.a1.clone(), rho, sigma: zero.clone(), tau }
        };
        let w1 = self.transform(&first);
        match w1.a6.sqrt() {
            Some(eta) => {
                let second = TransformParams { mu: one, rho: zero.clone(), sigma: zero, tau: eta };
                let total = first.compose(&second);
                Ok((NormalFormCase::JSquare, self.transform(&total), total))
            }
            None => Ok((NormalFormCase::JNonzero, w1, first)),
        }
    }
}

impl<F: Field> TransformParams<F> {
    pub fn identity(one: &F) -> Self {
        let zero = one.zero_like();
        TransformParams { mu: one.clone(), rho: zero.clone(), sigma: zero.clone(), tau: zero }
    }

    /// The change of coordinates `self` followed by `next`.
    pub fn compose(&self, next: &TransformParams<F>) -> TransformParams<F> {
        let mu = self.mu.clone() * next.mu.clone();
        let rho = self.rho.clone() + self.mu.square() * next.rho.clone();
        let sigma = self.sigma.clone() + self.mu.clone() * next.sigma.clone();
        let tau = self.tau.clone()
            + self.mu.pow(3) * next.tau.clone()
            + self.sigma.clone() * self.mu.square() * next.rho.clone();
        TransformParams { mu, rho, sigma, tau }
    }
}

impl<F: Ring + fmt::Display> fmt::Display for WeierstrassCoeffs<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}, {}]", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}

/// The point at infinity `(0 : 1 : 0)`.
pub fn infinity(k: u8) -> ProjPoint {
    ProjPoint::new(Gf::zero(k), Gf::one(k), Gf::zero(k)).unwrap()
}

/// A smooth Weierstrass cubic over GF(2^k) with its chord-tangent group law.
#[derive(Clone, Debug)]
pub struct EllipticCurve {
    coeffs: WeierstrassCoeffs<Gf>,
    form: PlaneCurve<Gf>,
}

impl EllipticCurve {
    pub fn new(coeffs: WeierstrassCoeffs<Gf>) -> Result<Self> {
        if coeffs.discriminant().is_zero() {
            return Err(Error::SingularCurve(format!("{coeffs:?}")));
        }
        let form = coeffs.form();
        Ok(EllipticCurve { coeffs, form })
    }

    pub fn coeffs(&self) -> &WeierstrassCoeffs<Gf> {
        &self.coeffs
    }

    pub fn form(&self) -> &PlaneCurve<Gf> {
        &self.form
    }

    pub fn field_degree(&self) -> u8 {
        self.coeffs.a1.degree()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.form.contains(p)
    }

    pub fn points(&self, m: u8) -> Vec<ProjPoint> {
        self.form.enumerate_points(m)
    }

    fn check(&self, p: &ProjPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(p.to_string()))
        }
    }

    /// `(x : y : z) -> (x : y + a1 x + a3 z : z)`
    pub fn negate(&self, p: &ProjPoint) -> ProjPoint {
        let m = p.field_degree();
        let [x, y, z] = p.coords();
        let (a1, a3) = (self.coeffs.a1.embed(m), self.coeffs.a3.embed(m));
        ProjPoint::new(x, y + a1 * x + a3 * z, z).unwrap()
    }

    /// Third intersection of the curve with the line through `p` and `q`
    /// (the tangent at `p` when they coincide).
    fn third_point(&self, p: &ProjPoint, q: &ProjPoint) -> ProjPoint {
        let m = p.field_degree().max(self.field_degree());
        let (p, q) = (p.embed(m), q.embed(m));
        let form = self.form.embed(m);
        if p != q {
            // F(s p + q) = s (c2 s + c1): roots s = 0 (q), s = ∞ (p)
            let f = form.restrict(&p, &q);
            let (c1, c2) = (f.coeff(1), f.coeff(2));
            if c2.is_zero() {
                return p;
            }
            let s = c1 * c2.inverse().unwrap();
            return ProjPoint::from_array([0, 1, 2].map(|i| s * p.coords()[i] + q.coords()[i])).unwrap();
        }
        let tangent = form.gradient(&p);
        let (u, v) = line_points(&tangent);
        let other = if u != p { u } else { v };
        // F(s other + p) = s^2 (c3 s + c2)
        let f = form.restrict(&other, &p);
        let (c2, c3) = (f.coeff(2), f.coeff(3));
        if c3.is_zero() {
            return other;
        }
        let s = c2 * c3.inverse().unwrap();
        ProjPoint::from_array([0, 1, 2].map(|i| s * other.coords()[i] + p.coords()[i])).unwrap()
    }

    /// Chord-tangent sum with neutral element `(0 : 1 : 0)`.
    pub fn add(&self, p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.negate(&self.third_point(p, q)))
    }

    pub fn mul(&self, n: u64, p: &ProjPoint) -> Result<ProjPoint> {
        self.check(p)?;
        let mut acc = infinity(p.field_degree());
        let mut base = *p;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            base = self.add(&base, &base)?;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Least `n <= bound` with `n p = O`.
    pub fn point_order(&self, p: &ProjPoint, bound: u64) -> Result<Option<u64>> {
        self.check(p)?;
        let o = infinity(p.field_degree());
        let mut acc = *p;
        for n in 1..=bound {
            if acc == o {
                return Ok(Some(n));
            }
            acc = self.add(&acc, p)?;
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(k: u8, v: u32) -> Gf {
        Gf::new(k, v)
    }

    #[test]
    fn discriminants_of_normal_forms() {
        let (a, a4, a6, a3) = (gf(3, 3), gf(3, 5), gf(3, 6), gf(3, 7));
        let z = Gf::zero(3);
        let o = Gf::one(3);
        assert_eq!(WeierstrassCoeffs::new(o, a, z, z, a6).discriminant(), a6);
        assert_eq!(WeierstrassCoeffs::new(o, a, z, a4, z).discriminant(), a4 * a4);
        assert_eq!(WeierstrassCoeffs::new(z, z, a3, a4, a6).discriminant(), a3.pow(4));
    }

    #[test]
    fn two_torsion_point_of_eta_form() {
        let k = 2;
        let w = WeierstrassCoeffs::new(Gf::one(k), Gf::zero(k), Gf::zero(k), Gf::one(k), Gf::zero(k));
        let e = EllipticCurve::new(w).unwrap();
        let p = ProjPoint::affine(Gf::zero(k), Gf::zero(k));
        assert_eq!(e.add(&p, &p).unwrap(), infinity(k));
        assert_eq!(e.point_order(&p, 10).unwrap(), Some(2));
        assert_eq!(e.point_order(&infinity(k), 10).unwrap(), Some(1));
    }

    #[test]
    fn normal_form_round_trip() {
        let w = WeierstrassCoeffs::new(gf(3, 3), gf(3, 1), gf(3, 6), gf(3, 2), gf(3, 5));
        let (case, nf, p) = w.normal_form().unwrap();
        assert_eq!(case, NormalFormCase::JSquare);
        assert_eq!(w.transform(&p), nf);
        assert!(nf.a1.is_one() && nf.a3.is_zero() && nf.a6.is_zero());
    }
}
