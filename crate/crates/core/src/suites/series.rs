//! Printed coefficients of the expansions at infinity, compared as
//! polynomials in the symbolic parameters.

use std::sync::Arc;

use super::{CheckResult, SuiteConfig};
use crate::algebra::{Gf, MPoly, Ring, VarCtx};
use crate::elliptic::WeierstrassCoeffs;
use crate::quartic::{build_case_a_model, CaseAParams};
use crate::series::{expand_tate13, expand_y_at_infinity, expand_z_squared, ConicOverCubic, LaurentSeries};

pub(super) const CHECKS: &[super::Check] = &[("series", run)];

fn run(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let prec = cfg.prec.max(2);
    vec![
        y_general(prec),
        y_case_a(prec),
        y_case_b(prec),
        z2_case_a(prec),
        z2_case_b(prec),
        tate13(prec.max(8)),
        case_a_model(cfg, prec),
    ]
}

fn ctx() -> Arc<VarCtx> {
    VarCtx::new(&["a", "a1", "a2", "a3", "a4", "a6", "b", "b0", "b1", "b2", "b3", "c", "d", "A", "H"])
}

fn v(ctx: &Arc<VarCtx>, s: &str) -> MPoly {
    MPoly::parse(ctx, s).expect("well-formed expression")
}

/// Compares `s` against `expected[i]` at order `from + i`.
fn compare(id: &str, s: &LaurentSeries<MPoly>, from: i64, expected: &[&str]) -> CheckResult {
    let ctx = s.zero_elem().ctx().clone();
    let top = from + expected.len() as i64;
    if s.precision() < top {
        return CheckResult::new(id, false, format!("precision {} below t^{}", s.precision(), top - 1));
    }
    let mut bad = Vec::new();
    for (i, e) in expected.iter().enumerate() {
        let n = from + i as i64;
        let want = v(&ctx, e);
        let got = s.coeff(n);
        if got != want {
            bad.push(format!("t^{n}: got {got}, expected {want}"));
        }
    }
    let ok = bad.is_empty();
    let detail = if ok {
        format!("orders {from}..{} match", top - 1)
    } else {
        bad.join("; ")
    };
    CheckResult::new(id, ok, detail)
}

fn y_general(prec: i64) -> CheckResult {
    let c = ctx();
    let w = WeierstrassCoeffs::new(v(&c, "a1"), v(&c, "a2"), v(&c, "a3"), v(&c, "a4"), v(&c, "a6"));
    let y = expand_y_at_infinity(&w, prec);
    compare("series.y-general", &y, -3, &["1", "a1", "a2", "a3", "a4 + a1*a3"])
}

fn case_a_cubic(c: &Arc<VarCtx>) -> WeierstrassCoeffs<MPoly> {
    WeierstrassCoeffs::new(v(c, "0"), v(c, "0"), v(c, "a"), v(c, "a4"), v(c, "a6"))
}

fn case_b_cubic(c: &Arc<VarCtx>) -> WeierstrassCoeffs<MPoly> {
    WeierstrassCoeffs::new(v(c, "1"), v(c, "a"), v(c, "0"), v(c, "0"), v(c, "a6"))
}

fn y_case_a(prec: i64) -> CheckResult {
    let y = expand_y_at_infinity(&case_a_cubic(&ctx()), prec);
    compare("series.y-case-a", &y, -3, &["1", "0", "0", "a", "a4"])
}

fn y_case_b(prec: i64) -> CheckResult {
    let y = expand_y_at_infinity(&case_b_cubic(&ctx()), prec);
    compare("series.y-case-b", &y, -3, &["1", "1", "a", "0", "0"])
}

fn conic(c: &Arc<VarCtx>, cubic: WeierstrassCoeffs<MPoly>, b0: &str) -> ConicOverCubic<MPoly> {
    ConicOverCubic {
        cubic,
        b0: v(c, b0),
        b1: v(c, "b1"),
        b2: v(c, "b2"),
        b3: v(c, "b3"),
        c: v(c, "c"),
        d: v(c, "d"),
    }
}

fn z2_case_a(prec: i64) -> CheckResult {
    let c = ctx();
    let z2 = expand_z_squared(&conic(&c, case_a_cubic(&c), "b0"), prec);
    compare(
        "series.z2-case-a",
        &z2,
        -6,
        &["b0", "b1", "b2", "b3", "c", "0", "d + a*b3 + a^2*b0", "a*c + a^2*b1 + a4*b3"],
    )
}

fn z2_case_b(prec: i64) -> CheckResult {
    let c = ctx();
    let z2 = expand_z_squared(&conic(&c, case_b_cubic(&c), "b"), prec);
    compare(
        "series.z2-case-b",
        &z2,
        -6,
        &[
            "b",
            "b1",
            "b + b2",
            "b1 + b3",
            "a^2*b + b2 + b3 + c",
            "a^2*b1 + a*b3 + c",
            "a^2*b2 + a*c + d",
            "0",
        ],
    )
}

fn tate13(prec: i64) -> CheckResult {
    let c = ctx();
    let s = expand_tate13(&v(&c, "A"), &v(&c, "H"), prec);
    compare("series.tate13", &s, 3, &["1", "1", "1 + A", "1", "1 + A + A^2 + H"])
}

fn case_a_model(cfg: &SuiteConfig, prec: i64) -> CheckResult {
    let id = "series.case-a-model";
    let mut rng = cfg.rng(id);
    let mut bad = Vec::new();
    for a in Gf::nonzero_elements(4) {
        let mut r = || Gf::random(4, &mut rng);
        let p = CaseAParams::new(a, r(), r(), r(), r());
        let model = match build_case_a_model(&p) {
            Ok(m) => m,
            Err(e) => return CheckResult::new(id, false, format!("error: {e}")),
        };
        let (b3, c) = model.singular_prime_constants();
        let inv = a.inverse().unwrap();
        if !b3.is_zero() || c != inv || model.z_squared_expansion(prec).coeff(-2) != inv {
            bad.push(format!("a = {a}"));
        }
    }
    let ok = bad.is_empty();
    let detail = if ok {
        "b3 = 0 and c = a^-1 = t^-2 coefficient for all a in GF(16)*".to_string()
    } else {
        format!("mismatch at {}", bad.join(", "))
    };
    CheckResult::new(id, ok, detail)
}
