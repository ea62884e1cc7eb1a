//! Polynomial identities with certificates, and the isomorphism decision
//! over GF(4)(t).

use rand::Rng;

use super::{CheckResult, SuiteConfig};
use crate::algebra::{Field, RatFunc, Ring};
use crate::quartic::iso::random_witness;
use crate::quartic::{
    build_quartic, forward_transform, isomorphism_decide, normalize_q_rational, psi_inverse_expression,
    verify_symbolic_suite, verify_witness, IsoDecision, NonIsoReason, QuarticParams, SymbolicCheck,
};

pub(super) const CHECKS: &[super::Check] = &[
    ("identities", identities),
    ("iso-round-trips", |cfg| vec![round_trips(cfg)]),
    ("iso-rejections", |cfg| vec![rejections(cfg)]),
    ("iso-normalize", |_| vec![normalize()]),
];

fn to_result(c: &SymbolicCheck) -> CheckResult {
    let held = c.claims.iter().filter(|r| r.passed).count();
    let detail = format!(
        "{}: {held}/{} claims hold, numeric {}, mutation {}",
        c.title,
        c.claims.len(),
        if c.numeric { "agrees" } else { "disagrees" },
        if c.mutation_detected { "detected" } else { "missed" },
    );
    CheckResult::new(format!("symbolic.{}", c.id), c.passed, detail)
}

fn identities(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = verify_symbolic_suite(cfg.seed)
        .iter()
        .filter(|c| c.id != "psi-inverse-expression")
        .map(to_result)
        .collect();
    out.push(to_result(&psi_inverse_expression(cfg.seed)));
    out
}

const K: u8 = 2;

fn nonzero<R: Rng>(deg: usize, rng: &mut R) -> RatFunc {
    loop {
        let f = RatFunc::random_polynomial(K, deg, rng);
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_params<R: Rng>(rng: &mut R) -> QuarticParams<RatFunc> {
    QuarticParams::new(
        RatFunc::random_polynomial(K, 2, rng),
        RatFunc::random_polynomial(K, 2, rng),
        nonzero(1, rng),
        nonzero(1, rng),
    )
}

fn round_trips(cfg: &SuiteConfig) -> CheckResult {
    let id = "iso.round-trips";
    let mut rng = cfg.rng(id);
    let mut bad = Vec::new();
    for i in 0..100 {
        let q = random_params(&mut rng);
        let w = random_witness(&q, 2, &mut rng);
        let r = forward_transform(&q, &w).and_then(|q2| Ok((isomorphism_decide(&q, &q2)?, q2)));
        match r {
            Ok((IsoDecision::Isomorphic { witness }, q2)) if verify_witness(&q, &q2, &witness) => {}
            Ok((d, _)) => bad.push(format!("pair {i}: {d:?}")),
            Err(e) => bad.push(format!("pair {i}: {e}")),
        }
    }
    let ok = bad.is_empty();
    let detail = if ok {
        "100 transformed pairs over GF(4)(t) recognized, witnesses re-verified".to_string()
    } else {
        bad.join("; ")
    };
    CheckResult::new(id, ok, detail)
}

fn rejections(cfg: &SuiteConfig) -> CheckResult {
    let id = "iso.rejections";
    let mut rng = cfg.rng(id);
    let t = RatFunc::t(K);
    let mut bad = Vec::new();
    for i in 0..20 {
        let q = random_params(&mut rng);
        let mut eta = q.clone();
        eta.e = q.e.clone() * t.clone();
        let mut ratio = q.clone();
        ratio.c = q.c.clone() * t.clone();
        ratio.e = q.e.div(&t).unwrap();
        for (q2, want) in [(eta, NonIsoReason::Eta), (ratio, NonIsoReason::CRatio)] {
            match isomorphism_decide(&q, &q2) {
                Ok(IsoDecision::NotIsomorphic { reason }) if reason == want => {}
                other => bad.push(format!("pair {i}: expected {want:?}, got {other:?}")),
            }
        }
    }
    let ok = bad.is_empty();
    let detail = if ok { "20 eta and 20 c-ratio mismatches rejected with their reasons".to_string() } else { bad.join("; ") };
    CheckResult::new(id, ok, detail)
}

fn normalize() -> CheckResult {
    let id = "iso.normalize";
    let t = RatFunc::t(K);
    let one = RatFunc::one(K);
    // the pencil: a = 0, c = 1, e = b^-1
    let pencil = QuarticParams::new(RatFunc::zero(K), t.clone(), one.clone(), t.inv().unwrap());
    let normal = normalize_q_rational(&pencil)
        .map(|m| m.params == pencil && m.form == build_quartic(&pencil).scale(&t))
        .unwrap_or(false);
    let absent = QuarticParams::new(RatFunc::zero(K), t + one.clone(), one.clone(), one);
    let rejected = normalize_q_rational(&absent).is_none();
    CheckResult::new(
        id,
        normal && rejected,
        format!(
            "pencil parameters {}; non-square b + c/eta {}",
            if normal { "already normal" } else { "not recognized as normal" },
            if rejected { "left alone" } else { "wrongly normalized" }
        ),
    )
}
