//! A single fibre `Q_(ā,b̄,c̄,ē)` over GF(2^k) and the maps
//! `E_(ā^{1/2}, η̄^{1/2}) -> Q -> E_(ā, η̄)`.

use serde::Serialize;

use super::{build_quartic, cubic_coeffs, QuarticParams};
use crate::algebra::{Gf, Ring};
use crate::curves::{Line, PlaneCurve, ProjPoint};
use crate::elliptic::{EllipticCurve, WeierstrassCoeffs};
use crate::series::{branch_parametrization_from_roots, LaurentSeries};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct QuarticFibre {
    params: QuarticParams<Gf>,
    roots: QuarticParams<Gf>,
    form: PlaneCurve,
}

/// The two non-ordinary inflection points and the field they live in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inflections {
    pub field_degree: u8,
    pub points: [ProjPoint; 2],
}

/// Parameters and their square roots, embedded in GF(2^m).
struct Embedded {
    p: QuarticParams<Gf>,
    r: QuarticParams<Gf>,
}

impl QuarticFibre {
    pub fn new(params: QuarticParams<Gf>) -> Result<Self> {
        let k = params.a.degree();
        if params.as_array().iter().any(|v| v.degree() != k) {
            return Err(Error::Unsupported("parameters from different fields".into()));
        }
        let roots = params.map(|v| v.field_sqrt());
        let form = build_quartic(&params);
        Ok(QuarticFibre { params, roots, form })
    }

    pub fn params(&self) -> &QuarticParams<Gf> {
        &self.params
    }

    /// `(ā^{1/2}, b̄^{1/2}, c̄^{1/2}, ē^{1/2})`
    pub fn roots(&self) -> &QuarticParams<Gf> {
        &self.roots
    }

    pub fn form(&self) -> &PlaneCurve {
        &self.form
    }

    pub fn field_degree(&self) -> u8 {
        self.params.a.degree()
    }

    pub fn eta(&self) -> Gf {
        self.params.eta()
    }

    fn at(&self, m: u8) -> Embedded {
        Embedded { p: self.params.map(|v| v.embed(m)), r: self.roots.map(|v| v.embed(m)) }
    }

    /// Target of `phi`: `E_(ā, c̄ē)`.
    pub fn target_cubic(&self) -> WeierstrassCoeffs<Gf> {
        cubic_coeffs(&self.params.a, &self.eta())
    }

    /// Source of `psi`: `E_(ā^{1/2}, c̄^{1/2} ē^{1/2})`.
    pub fn source_cubic(&self) -> WeierstrassCoeffs<Gf> {
        cubic_coeffs(&self.roots.a, &(self.roots.c * self.roots.e))
    }

    pub fn is_genus_one(&self) -> bool {
        !self.eta().is_zero()
    }

    fn require_c(&self) -> Result<()> {
        if self.params.c.is_zero() {
            return Err(Error::Degenerate("c = 0".into()));
        }
        Ok(())
    }

    fn require_ce(&self) -> Result<()> {
        if self.eta().is_zero() {
            return Err(Error::Degenerate("c e = 0".into()));
        }
        Ok(())
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.form.contains(p)
    }

    fn check(&self, p: &ProjPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(p.to_string()))
        }
    }

    /// `(0 : 1 : b̄^{1/2})`, the moving singularity.
    pub fn singular_point(&self) -> ProjPoint {
        let k = self.field_degree();
        ProjPoint::new(Gf::zero(k), Gf::one(k), self.roots.b).unwrap()
    }

    /// `(0 : 0 : 1)`, through which every smooth-point tangent passes.
    pub fn strange_point(&self) -> ProjPoint {
        let k = self.field_degree();
        ProjPoint::new(Gf::zero(k), Gf::zero(k), Gf::one(k)).unwrap()
    }

    /// `(0 : 1 : b̄^{1/2} + ē^{-1/2})`
    pub fn order_two_point(&self) -> Result<ProjPoint> {
        let k = self.field_degree();
        let inv = self.roots.e.inverse().ok_or_else(|| Error::Degenerate("e = 0".into()))?;
        Ok(ProjPoint::new(Gf::zero(k), Gf::one(k), self.roots.b + inv).unwrap())
    }

    /// The tangent `z = b̄^{1/2} y + ā^{1/2} b̄^{1/2} x` at the singular point.
    pub fn singular_tangent(&self) -> Line {
        let r = &self.roots;
        [r.a * r.b, r.b, Gf::one(self.field_degree())]
    }

    /// `Q -> E_(ā, c̄ē)`: `(c̄x² : c̄xy : S)`, or `(x h : y h : x³)` where the
    /// first vanishes.
    pub fn phi(&self, p: &ProjPoint) -> Result<ProjPoint> {
        self.check(p)?;
        let m = p.field_degree().max(self.field_degree());
        let Embedded { p: q, .. } = self.at(m);
        let [x, y, z] = p.embed(m).coords();
        let s = z * z + q.b * y * y + q.a * q.b * x * x;
        if let Some(r) = ProjPoint::new(q.c * x * x, q.c * x * y, s) {
            return Ok(r);
        }
        let h = q.e * s + y * y + x * y + q.a * x * x;
        ProjPoint::new(x * h, y * h, x * x * x)
            .ok_or_else(|| Error::Degenerate(format!("both assignments vanish at {p}")))
    }

    /// Inverse of `phi` on points, for c̄ ≠ 0:
    /// `(x : y : b̄^{1/2} y + ā^{1/2} b̄^{1/2} x + c̄^{1/2} (x z)^{1/2})`.
    pub fn phi_inverse(&self, r: &ProjPoint) -> Result<ProjPoint> {
        self.require_c()?;
        let m = r.field_degree().max(self.field_degree());
        let r = r.embed(m);
        let rt = self.at(m).r;
        let target = self.target_cubic().map(|v| v.embed(m)).form();
        if !target.contains(&r) {
            return Err(Error::NotOnCurve(r.to_string()));
        }
        let [x, y, z] = r.coords();
        if x.is_zero() && y.is_zero() {
            return Ok(Self::special_image(m, &rt));
        }
        let third = rt.b * y + rt.a * rt.b * x + rt.c * (x * z).field_sqrt();
        Ok(ProjPoint::new(x, y, third).unwrap())
    }

    /// `(0 : ē^{1/2} : 1 + b̄^{1/2} ē^{1/2})`, the image of `(0 : 0 : 1)`.
    fn special_image(m: u8, rt: &QuarticParams<Gf>) -> ProjPoint {
        ProjPoint::new(Gf::zero(m), rt.e, Gf::one(m) + rt.b * rt.e).unwrap()
    }

    /// `E_(ā^{1/2}, η̄^{1/2}) -> Q`:
    /// `(x'^2 : y'^2 : b̄^{1/2} y'^2 + ā^{1/2} b̄^{1/2} x'^2 + c̄^{1/2} x' z')`.
    pub fn psi(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let m = p.field_degree().max(self.field_degree());
        let p = p.embed(m);
        let rt = self.at(m).r;
        let source = self.source_cubic().map(|v| v.embed(m)).form();
        if !source.contains(&p) {
            return Err(Error::NotOnCurve(p.to_string()));
        }
        let [x, y, z] = p.coords();
        if x.is_zero() && y.is_zero() {
            return Ok(Self::special_image(m, &rt));
        }
        let third = rt.b * y * y + rt.a * rt.b * x * x + rt.c * x * z;
        ProjPoint::new(x * x, y * y, third)
            .ok_or_else(|| Error::Degenerate(format!("psi vanishes at {p}")))
    }

    fn target_curve(&self, m: u8) -> Result<EllipticCurve> {
        EllipticCurve::new(self.target_cubic().map(|v| v.embed(m)))
    }

    /// The group law carried over from `E_(ā, η̄)` by `phi`; the neutral
    /// element is the singular point.
    pub fn transported_add(&self, p1: &ProjPoint, p2: &ProjPoint) -> Result<ProjPoint> {
        self.require_ce()?;
        let m = p1.field_degree().max(p2.field_degree()).max(self.field_degree());
        let e = self.target_curve(m)?;
        let (r1, r2) = (self.phi(&p1.embed(m))?, self.phi(&p2.embed(m))?);
        self.phi_inverse(&e.add(&r1, &r2)?)
    }

    pub fn transported_mul(&self, n: u64, p: &ProjPoint) -> Result<ProjPoint> {
        self.require_ce()?;
        let m = p.field_degree().max(self.field_degree());
        let e = self.target_curve(m)?;
        self.phi_inverse(&e.mul(n, &self.phi(&p.embed(m))?)?)
    }

    /// Order of `p` in the transported group, if at most `bound`.
    pub fn transported_order(&self, p: &ProjPoint, bound: u64) -> Result<Option<u64>> {
        self.require_ce()?;
        let m = p.field_degree().max(self.field_degree());
        let e = self.target_curve(m)?;
        e.point_order(&self.phi(&p.embed(m))?, bound)
    }

    /// The neutral element of the transported group, embedded in GF(2^m).
    pub fn neutral(&self, m: u8) -> ProjPoint {
        self.singular_point().embed(m)
    }

    /// The points `(1 : u : z̄0 + b̄^{1/2} u)` with `u^2 + u + ā = 0` and
    /// `z̄0 = (ā^2 b̄^2 + c̄ ē^{-1})^{1/4}`, over GF(2^k) or GF(2^{2k}).
    pub fn inflection_points(&self) -> Result<Inflections> {
        self.require_ce()?;
        let k = self.field_degree();
        let m = if self.params.a.trace() { 2 * k } else { k };
        if m > crate::algebra::gf::MAX_DEGREE {
            return Err(Error::Unsupported(format!("inflection points need GF(2^{m})")));
        }
        let Embedded { p: q, r: rt } = self.at(m);
        let u = Gf::solve_artin_schreier(q.a).expect("trace vanishes in the extension");
        let z0 = (q.a * q.a * q.b * q.b + q.c * q.e.inverse().unwrap()).field_sqrt().field_sqrt();
        let one = Gf::one(m);
        let pt = |u: Gf| ProjPoint::new(one, u, z0 + rt.b * u).unwrap();
        let mut points = [pt(u), pt(u + one)];
        points.sort();
        Ok(Inflections { field_degree: m, points })
    }

    /// The branch `(x(t'), 1, z(t'))` through the singular point.
    pub fn branch_parametrization(&self, prec: i64) -> [LaurentSeries<Gf>; 3] {
        let r = &self.roots;
        branch_parametrization_from_roots(&r.a, &r.b, &r.c, &r.e, prec)
    }

    /// Points of `E_(ā, η̄)`, which `phi` matches bijectively with `Q` when c̄ ≠ 0.
    pub fn target_points(&self, m: u8) -> Vec<ProjPoint> {
        self.target_cubic().map(|v| v.embed(m)).form().enumerate_points(m)
    }

    pub fn source_points(&self, m: u8) -> Vec<ProjPoint> {
        self.source_cubic().map(|v| v.embed(m)).form().enumerate_points(m)
    }

    pub fn points(&self, m: u8) -> Vec<ProjPoint> {
        self.form.enumerate_points(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::infinity;
    use std::collections::BTreeSet;

    fn sample() -> QuarticFibre {
        let w = Gf::generator(2);
        QuarticFibre::new(QuarticParams::new(Gf::zero(2), w, Gf::one(2), Gf::one(2))).unwrap()
    }

    #[test]
    fn singular_point_and_its_image() {
        let f = sample();
        let s = f.singular_point();
        assert_eq!(f.form().is_singular_point(&s).unwrap(), (true, 2));
        assert_eq!(f.phi(&s).unwrap(), infinity(2));
        assert_eq!(f.phi_inverse(&infinity(2)).unwrap(), s);
    }

    #[test]
    fn phi_is_a_bijection_over_gf4() {
        let f = sample();
        let pts = f.points(2);
        let images: BTreeSet<ProjPoint> = pts.iter().map(|p| f.phi(p).unwrap()).collect();
        assert_eq!(images.len(), pts.len());
        assert_eq!(pts.len(), f.target_points(2).len());
        for p in &pts {
            assert_eq!(f.phi_inverse(&f.phi(p).unwrap()).unwrap(), *p);
        }
    }

    #[test]
    fn psi_then_phi_is_frobenius() {
        let f = sample();
        for p in f.source_points(2) {
            let q = f.psi(&p).unwrap();
            assert!(f.contains(&q));
            assert_eq!(f.phi(&q).unwrap(), p.frobenius());
        }
    }

    #[test]
    fn torsion_of_special_points() {
        let f = sample();
        let two = f.order_two_point().unwrap();
        assert_eq!(f.transported_order(&two, 10).unwrap(), Some(2));
        let infl = f.inflection_points().unwrap();
        for p in &infl.points {
            assert_eq!(f.transported_order(p, 10).unwrap(), Some(4));
            assert_eq!(f.transported_add(p, p).unwrap(), two.embed(infl.field_degree));
        }
    }
}
