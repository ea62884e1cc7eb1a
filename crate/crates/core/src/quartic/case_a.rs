//! The j = 0 models: an ordinary-at-infinity cubic `y^2 + a y = x^3 + a4 x + a6`
//! together with the conic `z^2 = b x^2 + a^-1 x + d`.

use serde::Serialize;

use crate::algebra::Ring;
use crate::curves::PlaneCurve;
use crate::elliptic::WeierstrassCoeffs;
use crate::series::{expand_z_squared, ConicOverCubic, LaurentSeries};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseAParams<F> {
    pub a: F,
    pub a4: F,
    pub a6: F,
    pub b: F,
    pub d: F,
}

impl<F: Ring> CaseAParams<F> {
    pub fn new(a: F, a4: F, a6: F, b: F, d: F) -> Self {
        CaseAParams { a, a4, a6, b, d }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseAModel<F> {
    pub params: CaseAParams<F>,
    pub conic: ConicOverCubic<F>,
}

pub fn build_case_a_model<F: Ring>(p: &CaseAParams<F>) -> Result<CaseAModel<F>> {
    let inv = p
        .a
        .unit_inverse()
        .ok_or_else(|| Error::Degenerate("case (a) needs a != 0".into()))?;
    let zero = p.a.zero_like();
    let cubic = WeierstrassCoeffs::new(zero.clone(), zero.clone(), p.a.clone(), p.a4.clone(), p.a6.clone());
    let conic = ConicOverCubic {
        cubic,
        b0: zero.clone(),
        b1: zero.clone(),
        b2: p.b.clone(),
        b3: zero,
        c: inv,
        d: p.d.clone(),
    };
    Ok(CaseAModel { params: p.clone(), conic })
}

impl<F: Ring> CaseAModel<F> {
    pub fn cubic(&self) -> &WeierstrassCoeffs<F> {
        &self.conic.cubic
    }

    pub fn cubic_form(&self) -> PlaneCurve<F> {
        self.conic.cubic.form()
    }

    /// `(b3, c)`; the prime at infinity is singular when `b3 = 0` and `c != 0`.
    pub fn singular_prime_constants(&self) -> (F, F) {
        (self.conic.b3.clone(), self.conic.c.clone())
    }

    pub fn z_squared_expansion(&self, prec: i64) -> LaurentSeries<F> {
        expand_z_squared(&self.conic, prec)
    }

    /// The plane sextic obtained by eliminating `x`, in coordinates `(y : z : w)`:
    ///
    /// ```text
    /// D = b (z^2 + d w^2) + (c^2 + a4 b^2) w^2
    /// N = c (z^2 + d w^2) + b^2 (y^2 + a y w + a6 w^2)
    /// (z^2 + d w^2) D^2 + w^2 N (b N + c D) = 0
    /// ```
    ///
    /// with `c = a^-1`; on it `x = N / D`.
    pub fn sextic(&self) -> PlaneCurve<F> {
        let (zd, d_form, n_form) = self.eliminants();
        let p = &self.params;
        let w2 = quad([0, 0, 2], p.a.one_like());
        let tail = n_form.scale(&p.b).add(&d_form.scale(&self.conic.c));
        zd.mul(&d_form).mul(&d_form).add(&w2.mul(&n_form).mul(&tail))
    }

    /// The conic `D = 0` that carries every singular point of the sextic.
    pub fn sextic_denominator(&self) -> PlaneCurve<F> {
        self.eliminants().1
    }

    fn eliminants(&self) -> (PlaneCurve<F>, PlaneCurve<F>, PlaneCurve<F>) {
        let p = &self.params;
        let c = &self.conic.c;
        let one = p.a.one_like();
        let zd = quad([0, 2, 0], one.clone()).add(&quad([0, 0, 2], p.d.clone()));
        let w2 = |f: F| quad([0, 0, 2], f);
        let d_form = zd.scale(&p.b).add(&w2(c.square() + p.a4.clone() * p.b.square()));
        let b2 = p.b.square();
        let cubic_part = quad([2, 0, 0], b2.clone())
            .add(&quad([1, 0, 1], b2.clone() * p.a.clone()))
            .add(&w2(b2 * p.a6.clone()));
        let n_form = zd.scale(c).add(&cubic_part);
        (zd, d_form, n_form)
    }
}

fn quad<F: Ring>(e: [u16; 3], c: F) -> PlaneCurve<F> {
    PlaneCurve::from_terms(2, [(e, c)]).expect("quadratic monomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Gf, RatFunc};

    fn sample() -> CaseAModel<Gf> {
        let w = Gf::generator(2);
        let (z, o) = (Gf::zero(2), Gf::one(2));
        build_case_a_model(&CaseAParams::new(o, z, w, w, o)).unwrap()
    }

    #[test]
    fn a_zero_is_rejected() {
        let z = Gf::zero(2);
        assert!(matches!(
            build_case_a_model(&CaseAParams::new(z, z, z, z, z)),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn expansion_sees_the_normalised_linear_term() {
        let t = RatFunc::t(2);
        let one = RatFunc::one(2);
        let a = t.clone() + one.clone();
        let p = CaseAParams::new(a.clone(), t.clone(), one.clone(), t.clone(), one);
        let m = build_case_a_model(&p).unwrap();
        let s = m.z_squared_expansion(2);
        assert_eq!(s.coeff(-2), a.unit_inverse().unwrap());
        assert_eq!(s.coeff(-4), t);
        let (b3, c) = m.singular_prime_constants();
        assert!(b3.is_zero() && !c.is_zero());
    }

    #[test]
    fn sextic_is_strange_and_singular_only_on_d() {
        let m = sample();
        let f = m.sextic();
        assert_eq!(f.degree(), 6);
        assert!(f.partial(1).is_zero());
        let d = m.sextic_denominator();
        let sing = f.singular_points(8).unwrap();
        assert!(!sing.is_empty());
        for p in sing {
            assert!(d.embed(8).contains(&p), "{p}");
        }
    }
}
