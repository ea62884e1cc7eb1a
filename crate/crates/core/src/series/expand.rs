//! Expansions of the local parameters at the point at infinity of a
//! Weierstrass cubic, and of the branch through the moving singularity of a
//! quartic fibre.

use super::laurent::LaurentSeries;
use crate::algebra::Ring;
use crate::elliptic::WeierstrassCoeffs;

/// Coefficients `u_0 .. u_{n-1}` of `u = t^3 y` where `t = x / y`.
///
/// With `y = t^-3 u` and `x = t^-2 u` the Weierstrass equation becomes
/// `G(u) = u^3 + u^2 + a1 t u^2 + a2 t^2 u^2 + a3 t^3 u + a4 t^4 u + a6 t^6 = 0`.
/// Since `u_0 = 1` and `dG/du = 1` at `(u, t) = (1, 0)`, the coefficient
/// `u_n` equals the `t^n` coefficient of `G` evaluated with `u_n = 0`.
fn expand_u<R: Ring>(w: &WeierstrassCoeffs<R>, n: usize) -> Vec<R> {
    let zero = w.a1.zero_like();
    let one = w.a1.one_like();
    let prec = n as i64;
    let c = |r: &R, e: i64| LaurentSeries::monomial(r.clone(), e, prec);
    let mut u = vec![one.clone()];
    for i in 1..n {
        let mut trial = u.clone();
        trial.push(zero.clone());
        let us = LaurentSeries::new(0, trial, i as i64 + 1, zero.clone());
        let u2 = us.clone() * us.clone();
        let g = u2.clone() * us.clone()
            + u2.clone()
            + c(&w.a1, 1) * u2.clone()
            + c(&w.a2, 2) * u2
            + c(&w.a3, 3) * us.clone()
            + c(&w.a4, 4) * us
            + c(&w.a6, 6);
        u.push(g.coeff(i as i64));
    }
    u
}

/// `y` as a Laurent series in `t = x / y`, known up to `t^prec` (exclusive).
pub fn expand_y_at_infinity<R: Ring>(w: &WeierstrassCoeffs<R>, prec: i64) -> LaurentSeries<R> {
    assert!(prec >= -3, "precision below the pole order");
    let n = (prec + 3) as usize;
    LaurentSeries::new(-3, expand_u(w, n), prec, w.a1.zero_like())
}

/// `z^2 = b0 y^2 + b1 x y + b2 x^2 + b3 y + c x + d` over a Weierstrass cubic.
#[derive(Clone, Debug, PartialEq)]
pub struct ConicOverCubic<R> {
    pub cubic: WeierstrassCoeffs<R>,
    pub b0: R,
    pub b1: R,
    pub b2: R,
    pub b3: R,
    pub c: R,
    pub d: R,
}

/// The expansion of `z^2` in `t = x / y`, known up to `t^prec`.
pub fn expand_z_squared<R: Ring>(m: &ConicOverCubic<R>, prec: i64) -> LaurentSeries<R> {
    // y^2 has order -6 and relative precision equal to that of y
    let y = expand_y_at_infinity(&m.cubic, prec + 3);
    let t = LaurentSeries::monomial(m.b0.one_like(), 1, i64::MAX / 4);
    let x = t * y.clone();
    let k = |r: &R| LaurentSeries::constant(r.clone(), i64::MAX / 4);
    let z2 = k(&m.b0) * y.clone() * y.clone()
        + k(&m.b1) * x.clone() * y.clone()
        + k(&m.b2) * x.clone() * x.clone()
        + k(&m.b3) * y
        + k(&m.c) * x
        + k(&m.d);
    z2.with_precision(prec)
}

/// `s' = z'/y' = t'^3 / u` on the cubic `y^2 + x y = x^3 + A x^2 + H x`.
pub fn expand_tate13<R: Ring>(a_root: &R, eta_root: &R, prec: i64) -> LaurentSeries<R> {
    let zero = a_root.zero_like();
    let one = a_root.one_like();
    let w = WeierstrassCoeffs::new(one, a_root.clone(), zero.clone(), eta_root.clone(), zero.clone());
    let n = (prec - 3).max(1) as usize;
    let u = LaurentSeries::new(0, expand_u(&w, n), n as i64, zero);
    u.inv().expect("u has unit constant term").shift(3)
}

/// The branch `(x(t), 1, z(t))` through `(0 : 1 : B)` given the square roots
/// `A, B, C, E` of the quartic parameters `a, b, c, e`:
/// `x = t^2`, `z = B + A B t^2 + C t s'(t)` with `s'` from [`expand_tate13`]
/// at `(A, C E)`.
pub fn branch_parametrization_from_roots<R: Ring>(
    a_root: &R,
    b_root: &R,
    c_root: &R,
    e_root: &R,
    prec: i64,
) -> [LaurentSeries<R>; 3] {
    let one = a_root.one_like();
    let s = expand_tate13(a_root, &(c_root.clone() * e_root.clone()), prec - 1);
    let x = LaurentSeries::monomial(one.clone(), 2, prec);
    let y = LaurentSeries::constant(one, prec);
    let z = LaurentSeries::constant(b_root.clone(), prec)
        + LaurentSeries::monomial(a_root.clone() * b_root.clone(), 2, prec)
        + s.shift(1).scale(c_root);
    [x, y, z]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Gf, MPoly, VarCtx};

    #[test]
    fn leading_coefficients_symbolic() {
        let ctx = VarCtx::new(&["a1", "a2", "a3", "a4", "a6"]);
        let v = |s: &str| MPoly::var(&ctx, s);
        let w = WeierstrassCoeffs::new(v("a1"), v("a2"), v("a3"), v("a4"), v("a6"));
        let y = expand_y_at_infinity(&w, 2);
        assert!(y.coeff(-3).is_one());
        assert_eq!(y.coeff(-2), v("a1"));
        assert_eq!(y.coeff(-1), v("a2"));
        assert_eq!(y.coeff(0), v("a3"));
        assert_eq!(y.coeff(1), MPoly::parse(&ctx, "a4 + a1*a3").unwrap());
    }

    #[test]
    fn y_satisfies_the_cubic() {
        let k = 3;
        let w = WeierstrassCoeffs::new(Gf::new(k, 3), Gf::new(k, 5), Gf::new(k, 1), Gf::new(k, 7), Gf::new(k, 2));
        let prec = 14;
        let y = expand_y_at_infinity(&w, prec);
        let t = LaurentSeries::monomial(Gf::one(k), 1, 1000);
        let x = t * y.clone();
        let cst = |g: Gf| LaurentSeries::constant(g, 1000);
        let lhs = y.clone() * y.clone() + cst(w.a1) * x.clone() * y.clone() + cst(w.a3) * y.clone();
        let rhs = x.clone() * x.clone() * x.clone() + cst(w.a2) * x.clone() * x.clone() + cst(w.a4) * x + cst(w.a6);
        let diff = lhs + rhs;
        assert!(diff.precision() >= prec - 6);
        assert!(diff.is_zero());
    }

    #[test]
    fn tate_leading_terms_degenerate() {
        let z = Gf::zero(2);
        let s = expand_tate13(&z, &z, 9);
        assert_eq!(s.valuation(), Some(3));
        assert!(s.coeff(4).is_one() && s.coeff(5).is_one() && s.coeff(7).is_one());
    }
}
