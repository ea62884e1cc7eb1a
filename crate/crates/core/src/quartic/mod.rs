//! The quartic models `Q_(a,b,c,e)`, their morphisms to and from the
//! Weierstrass cubics `E_(a,η)`, the isomorphism decision over GF(2^k)(t),
//! the j = 0 two-equation models, and the symbolic identity suite.
//!
//! ```text
//! Q:  c x^4 + S (e S + T) = 0,   S = z^2 + b y^2 + a b x^2,   T = y^2 + x y + a x^2
//! E:  y^2 z + x y z = x^3 + a x^2 z + η x z^2,   η = c e
//! ```

pub mod case_a;
mod fibre;
pub mod iso;
pub mod symbolic;
mod taxonomy;

use serde::Serialize;

use crate::algebra::Ring;
use crate::curves::PlaneCurve;
use crate::elliptic::WeierstrassCoeffs;

pub use case_a::{build_case_a_model, CaseAModel, CaseAParams};
pub use fibre::{Inflections, QuarticFibre};
pub use iso::{
    forward_transform, isomorphism_decide, normalize_q_rational, verify_witness, IsoDecision,
    IsoWitness, NonIsoReason, QRationalModel,
};
pub use symbolic::{psi_inverse_expression, verify_symbolic_suite, SymbolicCheck};
pub use taxonomy::{plane_quartic_genus, FibreLabel, FibreTaxonomy};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticParams<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub e: F,
}

impl<F: Ring> QuarticParams<F> {
    pub fn new(a: F, b: F, c: F, e: F) -> Self {
        QuarticParams { a, b, c, e }
    }

    /// `η = c e`
    pub fn eta(&self) -> F {
        self.c.clone() * self.e.clone()
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> QuarticParams<G> {
        QuarticParams::new(f(&self.a), f(&self.b), f(&self.c), f(&self.e))
    }

    pub fn as_array(&self) -> [F; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.e.clone()]
    }
}

fn form2<F: Ring>(terms: [([u16; 3], F); 3]) -> PlaneCurve<F> {
    PlaneCurve::from_terms(2, terms).expect("quadratic terms")
}

/// `S = z^2 + b y^2 + a b x^2`
pub fn conic_s<F: Ring>(q: &QuarticParams<F>) -> PlaneCurve<F> {
    let one = q.a.one_like();
    form2([([0, 0, 2], one), ([0, 2, 0], q.b.clone()), ([2, 0, 0], q.a.clone() * q.b.clone())])
}

/// `T = y^2 + x y + a x^2`
pub fn conic_t<F: Ring>(a: &F) -> PlaneCurve<F> {
    let one = a.one_like();
    form2([([0, 2, 0], one.clone()), ([1, 1, 0], one), ([2, 0, 0], a.clone())])
}

/// `c x^4 + (z^2 + b y^2 + a b x^2)(e (z^2 + b y^2 + a b x^2) + y^2 + x y + a x^2)`
pub fn build_quartic<F: Ring>(q: &QuarticParams<F>) -> PlaneCurve<F> {
    let s = conic_s(q);
    let t = conic_t(&q.a);
    let x4 = PlaneCurve::from_terms(4, [([4, 0, 0], q.c.clone())]).unwrap();
    s.mul(&s.scale(&q.e).add(&t)).add(&x4)
}

/// The Weierstrass data `(1, a, 0, η, 0)` of `E_(a,η)`.
pub fn cubic_coeffs<F: Ring>(a: &F, eta: &F) -> WeierstrassCoeffs<F> {
    let zero = a.zero_like();
    WeierstrassCoeffs::new(a.one_like(), a.clone(), zero.clone(), eta.clone(), zero)
}

/// `y^2 z + x y z + x^3 + a x^2 z + η x z^2`
pub fn build_cubic<F: Ring>(a: &F, eta: &F) -> PlaneCurve<F> {
    cubic_coeffs(a, eta).form()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Gf, MPoly, VarCtx};

    #[test]
    fn quartic_matches_the_expanded_form() {
        let ctx = VarCtx::new(&["x", "y", "z", "a", "b", "c", "e"]);
        let v = |s: &str| MPoly::var(&ctx, s);
        let q = QuarticParams::new(v("a"), v("b"), v("c"), v("e"));
        let form = build_quartic(&q);
        let expected = MPoly::parse(
            &ctx,
            "c*x^4 + (z^2 + b*y^2 + a*b*x^2)*(e*(z^2 + b*y^2 + a*b*x^2) + y^2 + x*y + a*x^2)",
        )
        .unwrap();
        let pt = [v("x"), v("y"), v("z")];
        assert_eq!(form.eval_in(&pt, |c| c.clone()), expected);
    }

    #[test]
    fn x4_coefficient_over_gf4() {
        let w = Gf::generator(2);
        let (z, o) = (Gf::zero(2), Gf::one(2));
        let f = build_quartic(&QuarticParams::new(z, w, o, o));
        // c + e a^2 b^2 + a^2 b with a = 0
        assert_eq!(f.coeff([4, 0, 0]), Some(&o));
    }

    #[test]
    fn cubic_flex_at_infinity() {
        let (z, o) = (Gf::zero(1), Gf::one(1));
        let e = build_cubic(&z, &o);
        assert_eq!(e.enumerate_points(1).len(), 4);
        let inf = crate::elliptic::infinity(1);
        let tangent = e.tangent_line(&inf).unwrap();
        let profile = e.line_intersection_profile(&tangent).unwrap();
        assert_eq!(profile.multiplicities(), vec![3]);
    }
}
