//! Isomorphisms between quartic models over GF(2^k)(t).
//!
//! The admissible changes of coordinates are
//!
//! ```text
//! x = x',   y = y' + σ x',   z = α z' + β y' + γ x'
//! γ^2 = a β^2 + (b + β^2) σ + β^2 σ^2
//! ```
//!
//! and they act by `a' = a + σ + σ^2`, `b' = (b + β^2)/α^2`, `c' = c/α^2`,
//! `e' = α^2 e`, so that `η` is invariant and `Q(x, y + σx, αz + βy + γx) = α^2 Q'`.

use rand::Rng;
use serde::Serialize;

use super::{build_quartic, QuarticParams};
use crate::algebra::{Field, RatFunc, Ring};
use crate::curves::PlaneCurve;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub alpha: RatFunc,
    pub sigma: RatFunc,
    pub beta: RatFunc,
    pub gamma: RatFunc,
}

impl IsoWitness {
    pub fn identity(k: u8) -> Self {
        let z = RatFunc::zero(k);
        IsoWitness { alpha: RatFunc::one(k), sigma: z.clone(), beta: z.clone(), gamma: z }
    }

    /// Rows give the images of `x, y, z` in terms of `x', y', z'`.
    pub fn matrix(&self) -> [[RatFunc; 3]; 3] {
        let k = self.alpha.field_degree();
        let (z, o) = (RatFunc::zero(k), RatFunc::one(k));
        [
            [o.clone(), z.clone(), z.clone()],
            [self.sigma.clone(), o, z],
            [self.gamma.clone(), self.beta.clone(), self.alpha.clone()],
        ]
    }

    /// Whether `γ^2 = a β^2 + (b + β^2) σ + β^2 σ^2` holds for the source `(a, b)`.
    pub fn is_admissible_for(&self, q: &QuarticParams<RatFunc>) -> bool {
        !self.alpha.is_zero() && self.gamma.square() == gamma_squared(q, &self.sigma, &self.beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NonIsoReason {
    /// `η ≠ η'`
    Eta,
    /// `c/c'` is not a square.
    CRatio,
    /// `b + α^2 b'` is not a square.
    B,
    /// `σ^2 + σ = a + a'` has no solution.
    ArtinSchreier,
    /// `γ^2` is not a square for either choice of `σ`.
    Gamma,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum IsoDecision {
    Isomorphic { witness: IsoWitness },
    NotIsomorphic { reason: NonIsoReason },
}

impl IsoDecision {
    pub fn witness(&self) -> Option<&IsoWitness> {
        match self {
            IsoDecision::Isomorphic { witness } => Some(witness),
            IsoDecision::NotIsomorphic { .. } => None,
        }
    }
}

fn gamma_squared(q: &QuarticParams<RatFunc>, sigma: &RatFunc, beta: &RatFunc) -> RatFunc {
    let b2 = beta.square();
    q.a.clone() * b2.clone() + (q.b.clone() + b2.clone()) * sigma.clone() + b2 * sigma.square()
}

/// The parameters `q'` with `Q ∘ M = α^2 Q'`.
pub fn forward_transform(q: &QuarticParams<RatFunc>, w: &IsoWitness) -> Result<QuarticParams<RatFunc>> {
    if !w.is_admissible_for(q) {
        return Err(Error::Unsupported("witness violates the γ constraint".into()));
    }
    let a2 = w.alpha.square();
    let inv = a2.inv().expect("α is nonzero");
    Ok(QuarticParams::new(
        q.a.clone() + w.sigma.clone() + w.sigma.square(),
        (q.b.clone() + w.beta.square()) * inv.clone(),
        q.c.clone() * inv,
        a2 * q.e.clone(),
    ))
}

/// Checks `Q1(x, y + σx, αz + βy + γx) = α^2 Q2` by substitution.
pub fn verify_witness(q1: &QuarticParams<RatFunc>, q2: &QuarticParams<RatFunc>, w: &IsoWitness) -> bool {
    if !w.is_admissible_for(q1) {
        return false;
    }
    let lhs = build_quartic(q1).linear_substitute(&w.matrix());
    lhs == build_quartic(q2).scale(&w.alpha.square())
}

/// Decides whether `Q_{q1}` and `Q_{q2}` are related by an admissible change
/// of coordinates and returns the witness if so.
///
/// Every step has a unique answer except `σ`, which is determined up to
/// adding 1; both choices are tried.
pub fn isomorphism_decide(q1: &QuarticParams<RatFunc>, q2: &QuarticParams<RatFunc>) -> Result<IsoDecision> {
    for q in [q1, q2] {
        if q.c.is_zero() || q.e.is_zero() {
            return Err(Error::Degenerate("c and e must be nonzero".into()));
        }
    }
    let no = |reason| Ok(IsoDecision::NotIsomorphic { reason });
    if q1.eta() != q2.eta() {
        return no(NonIsoReason::Eta);
    }
    let ratio = q1.c.div(&q2.c).expect("c' is nonzero");
    let Some(alpha) = ratio.is_square() else {
        return no(NonIsoReason::CRatio);
    };
    let Some(beta) = (q1.b.clone() + alpha.square() * q2.b.clone()).is_square() else {
        return no(NonIsoReason::B);
    };
    let Some(sigma0) = (q1.a.clone() + q2.a.clone()).artin_schreier_solve()? else {
        return no(NonIsoReason::ArtinSchreier);
    };
    let k = q1.a.field_degree();
    for sigma in [sigma0.clone(), sigma0 + RatFunc::one(k)] {
        if let Some(gamma) = gamma_squared(q1, &sigma, &beta).is_square() {
            let w = IsoWitness { alpha, sigma, beta, gamma };
            if !verify_witness(q1, q2, &w) {
                return Err(Error::Unsupported(format!("witness {w:?} failed substitution")));
            }
            return Ok(IsoDecision::Isomorphic { witness: w });
        }
    }
    no(NonIsoReason::Gamma)
}

/// A random admissible witness for `q` with `σ, β` polynomial of degree at
/// most `deg` and `α` a nonzero polynomial of degree at most 1.
///
/// Pairs `(σ, β)` are drawn until the `γ^2` expression is a square; the
/// trivial pair `(0, 0)` is always admissible, so the search terminates.
pub fn random_witness<R: Rng + ?Sized>(q: &QuarticParams<RatFunc>, deg: usize, rng: &mut R) -> IsoWitness {
    let k = q.a.field_degree();
    let mut alpha = RatFunc::random_polynomial(k, 1, rng);
    while alpha.is_zero() {
        alpha = RatFunc::random_polynomial(k, 1, rng);
    }
    for _ in 0..10_000 {
        let sigma = RatFunc::random_polynomial(k, deg, rng);
        let beta = RatFunc::random_polynomial(k, deg, rng);
        if let Some(gamma) = gamma_squared(q, &sigma, &beta).is_square() {
            return IsoWitness { alpha, sigma, beta, gamma };
        }
    }
    IsoWitness { alpha, ..IsoWitness::identity(k) }
}

/// A model in which the prime at the singular point is rational.
#[derive(Clone, Debug, PartialEq)]
pub struct QRationalModel {
    /// Normalized parameters with `c = b η`.
    pub params: QuarticParams<RatFunc>,
    pub witness: IsoWitness,
    /// `b^2 η x^4 + (z^2 + b y^2 + a b x^2)(z^2 + b x y)`, which is `b` times
    /// the quartic of `params`.
    pub form: PlaneCurve<RatFunc>,
}

/// Moves `q` to a model with `c = b η` when `b + c/η` is a square.
pub fn normalize_q_rational(q: &QuarticParams<RatFunc>) -> Option<QRationalModel> {
    let eta = q.eta();
    let beta = (q.b.clone() + q.c.div(&eta)?).is_square()?;
    let sigma = q.a.clone() * beta.square() * q.e.clone();
    let gamma = beta.clone() * sigma.clone();
    let k = q.a.field_degree();
    let witness = IsoWitness { alpha: RatFunc::one(k), sigma, beta, gamma };
    let params = forward_transform(q, &witness).ok()?;
    let p = &params;
    let one = RatFunc::one(k);
    let term = |e: [u16; 3], c: RatFunc| (e, c);
    let x4 = PlaneCurve::from_terms(4, [term([4, 0, 0], p.b.square() * eta)]).ok()?;
    let s = PlaneCurve::from_terms(
        2,
        [term([0, 0, 2], one.clone()), term([0, 2, 0], p.b.clone()), term([2, 0, 0], p.a.clone() * p.b.clone())],
    )
    .ok()?;
    let r = PlaneCurve::from_terms(2, [term([0, 0, 2], one), term([1, 1, 0], p.b.clone())]).ok()?;
    let form = x4.add(&s.mul(&r));
    Some(QRationalModel { params, witness, form })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t() -> RatFunc {
        RatFunc::t(2)
    }

    fn base() -> QuarticParams<RatFunc> {
        let t = t();
        QuarticParams::new(t.clone(), t.pow(3) + t.clone(), RatFunc::one(2), t)
    }

    #[test]
    fn identity_is_found() {
        let q = base();
        let d = isomorphism_decide(&q, &q).unwrap();
        assert_eq!(d.witness(), Some(&IsoWitness::identity(2)));
    }

    #[test]
    fn eta_mismatch() {
        let (z, o) = (RatFunc::zero(2), RatFunc::one(2));
        let q1 = QuarticParams::new(z.clone(), t(), o.clone(), o.clone());
        let q2 = QuarticParams::new(z, t(), o, t());
        let d = isomorphism_decide(&q1, &q2).unwrap();
        assert_eq!(d, IsoDecision::NotIsomorphic { reason: NonIsoReason::Eta });
    }

    #[test]
    fn random_witness_round_trip() {
        let q = base();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let w = random_witness(&q, 2, &mut rng);
            let q2 = forward_transform(&q, &w).unwrap();
            assert!(verify_witness(&q, &q2, &w));
            let found = isomorphism_decide(&q, &q2).unwrap();
            let found = found.witness().expect("isomorphic");
            assert!(verify_witness(&q, &q2, found));
        }
    }

    #[test]
    fn c_ratio_must_be_square() {
        let q1 = base();
        let mut q2 = q1.clone();
        q2.c = t();
        q2.e = q1.eta() * t().inv().unwrap();
        let d = isomorphism_decide(&q1, &q2).unwrap();
        assert_eq!(d, IsoDecision::NotIsomorphic { reason: NonIsoReason::CRatio });
    }

    #[test]
    fn pencil_parameters_are_already_normal() {
        let b = t();
        let one = RatFunc::one(2);
        let q = QuarticParams::new(RatFunc::zero(2), b.clone(), one.clone(), b.inv().unwrap());
        let m = normalize_q_rational(&q).unwrap();
        assert_eq!(m.params, q);
        assert_eq!(m.form, build_quartic(&q).scale(&b));
        assert!(m.form.coeff([0, 4, 0]).is_none());
    }

    #[test]
    fn non_square_criterion_is_absent() {
        // b + c/η = b + 1/e = t
        let one = RatFunc::one(2);
        let q = QuarticParams::new(RatFunc::zero(2), t() + one.clone(), one.clone(), one);
        assert!(normalize_q_rational(&q).is_none());
    }
}
