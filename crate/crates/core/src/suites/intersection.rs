//! Intersection numbers on the resolved pencil of quartics and on the cubic
//! pencil it covers.

use std::collections::BTreeMap;

use super::CheckResult;
use crate::surface::shipped::{cover_correspondence, pencil_s_minimal, pencil_s_prime, pencil_s_resolved};
use crate::surface::{validate_cover_map, FibreGraph, FibreType};
use crate::Result;

pub(super) const CHECKS: &[super::Check] = &[
    ("self-intersections", |_| vec![self_intersections()]),
    ("bunches", |_| vec![bunch_genera()]),
    ("minimal", |_| vec![minimal_model()]),
    ("classify", |_| vec![classification()]),
    ("cover", |_| cover()),
    ("placement", |_| vec![placement()]),
];

const RESOLVED: &[(&str, i64)] = &[
    ("A1", -2),
    ("A2", -3),
    ("A3", -3),
    ("A4", -3),
    ("Z", -1),
    ("B1", -3),
    ("B2", -3),
    ("B3", -2),
    ("B4", -2),
    ("B5", -2),
    ("B6", -2),
    ("B7", -2),
    ("B8", -2),
    ("X", -2),
    ("Y", -2),
];

const MINIMAL: &[(&str, i64)] = &[
    ("A1", -2),
    ("A2", -3),
    ("A3", -2),
    ("A4", -3),
    ("B1", -3),
    ("B2", -3),
    ("B3", -2),
    ("B4", -2),
    ("B5", -2),
    ("B6", -2),
    ("B7", -2),
    ("B8", -2),
    ("X", -2),
    ("Y", -2),
];

const COVERED: &[(&str, i64)] = &[
    ("X'", -2),
    ("Y'", -2),
    ("Z'", -2),
    ("A1'", -2),
    ("A2'", -2),
    ("A3'", -2),
    ("A4'", -2),
    ("A5'", -2),
    ("A6'", -2),
    ("B1'", -2),
];

/// Mismatches between the solved values and `expected`, which must name
/// every component.
fn compare(g: &FibreGraph, expected: &[(&str, i64)]) -> Vec<String> {
    let mut bad = Vec::new();
    if g.components.len() != expected.len() {
        bad.push(format!("{} components, expected {}", g.components.len(), expected.len()));
    }
    for (name, want) in expected {
        match g.component(name).map(|c| c.self_intersection) {
            Some(Some(v)) if v == *want => {}
            got => bad.push(format!("{name}^2: {got:?}, expected {want}")),
        }
    }
    bad
}

fn solved(g: FibreGraph) -> Result<FibreGraph> {
    g.solve_self_intersections()
}

fn self_intersections() -> CheckResult {
    let id = "intersection.self-intersections";
    let r = (|| -> Result<(bool, String)> {
        let mut bad = compare(&solved(pencil_s_resolved())?, RESOLVED);
        bad.extend(compare(&solved(pencil_s_prime())?, COVERED));
        let ok = bad.is_empty();
        let detail = if ok {
            format!("{} + {} values from F·C = 0 match", RESOLVED.len(), COVERED.len())
        } else {
            bad.join("; ")
        };
        Ok((ok, detail))
    })();
    CheckResult::from_result(id, r)
}

fn bunch_genera() -> CheckResult {
    let id = "intersection.bunch-genera";
    let r = (|| -> Result<(bool, String)> {
        let g = pencil_s_resolved();
        let m = g.arithmetic_genus_reduced(&["A1", "A2", "A3", "A4"])?;
        let n = g.arithmetic_genus_reduced(&["B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8"])?;
        Ok((m == 1 && n == 1, format!("p_a(A1 + .. + A4) = {m}, p_a(B1 + .. + B8) = {n}")))
    })();
    CheckResult::from_result(id, r)
}

/// Components, intersections and sections in a form independent of
/// declaration order.
fn canonical(g: &FibreGraph) -> String {
    let comps: BTreeMap<&str, (i64, i64, Option<i64>)> = g
        .components
        .iter()
        .map(|c| (c.name.as_str(), (c.multiplicity, c.genus, c.self_intersection)))
        .collect();
    let mut edges: Vec<(String, String, i64)> = g
        .intersections
        .iter()
        .filter(|(_, _, n)| *n != 0)
        .map(|(a, b, n)| if a < b { (a.clone(), b.clone(), *n) } else { (b.clone(), a.clone(), *n) })
        .collect();
    edges.sort();
    let mut sections: Vec<(String, i64, Vec<(String, i64)>)> = g
        .sections
        .iter()
        .map(|s| {
            let mut m = s.meets.clone();
            m.sort();
            (s.name.clone(), s.degree, m)
        })
        .collect();
    sections.sort();
    format!("{comps:?}|{edges:?}|{sections:?}")
}

fn minimal_model() -> CheckResult {
    let id = "intersection.minimal-model";
    let r = (|| -> Result<(bool, String)> {
        let resolved = solved(pencil_s_resolved())?;
        let exceptional = resolved.exceptional_curves();
        let contracted = resolved.contract_curve("Z")?;
        let shipped = solved(pencil_s_minimal())?;
        let same = canonical(&contracted) == canonical(&shipped);
        let printed = compare(&contracted, MINIMAL);
        let ok = exceptional == ["Z"] && same && printed.is_empty() && contracted.check_minimal();
        let detail = format!(
            "(-1)-curves before: {exceptional:?}; contraction {} the shipped minimal fibres; {}",
            if same { "reproduces" } else { "differs from" },
            if printed.is_empty() { "printed values hold".to_string() } else { printed.join(", ") }
        );
        Ok((ok, detail))
    })();
    CheckResult::from_result(id, r)
}

fn classification() -> CheckResult {
    let id = "intersection.classify";
    let r = (|| -> Result<(bool, String)> {
        let g = solved(pencil_s_prime())?;
        let mut types: Vec<(String, FibreType)> =
            g.fibres().into_iter().map(|f| f[0].clone()).zip(g.classify_fibres()).collect();
        types.sort_by(|a, b| a.0.cmp(&b.0));
        let by_x = types.iter().find(|(n, _)| n == "X'").map(|(_, t)| *t);
        let by_y = types.iter().find(|(n, _)| n == "Y'").map(|(_, t)| *t);
        let ok = types.len() == 2 && by_x == Some(FibreType::E7Tilde) && by_y == Some(FibreType::ATilde(1));
        let shown: Vec<String> = types.iter().map(|(n, t)| format!("fibre of {n}: {t}")).collect();
        Ok((ok, shown.join(", ")))
    })();
    CheckResult::from_result(id, r)
}

fn cover() -> Vec<CheckResult> {
    let graphs = (|| -> Result<(FibreGraph, FibreGraph)> { Ok((solved(pencil_s_minimal())?, solved(pencil_s_prime())?)) })();
    let (source, target) = match graphs {
        Ok(g) => g,
        Err(e) => return vec![CheckResult::new("intersection.cover", false, format!("error: {e}"))],
    };
    let data = cover_correspondence();
    let report = validate_cover_map(&data, &source, &target);
    let failing: Vec<String> =
        report.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.id, c.violations.join(", "))).collect();
    let shipped = CheckResult::new(
        "intersection.cover",
        report.passed,
        if report.passed { "all structural checks pass on the shipped correspondence".to_string() } else { failing.join("; ") },
    );

    let mut covered = data.clone();
    covered.uncovered.retain(|n| n != "Z'");
    let m1 = validate_cover_map(&covered, &source, &target);
    let mut degree = data.clone();
    for s in degree.sections.iter_mut().filter(|s| s.source == "p") {
        s.degree = 1;
    }
    let m2 = validate_cover_map(&degree, &source, &target);
    let caught = |r: &crate::surface::CoverReport, check: &str| !r.passed && r.check(check).is_some_and(|c| !c.passed);
    let (c1, c2) = (caught(&m1, "uncovered-set"), caught(&m2, "section-degrees"));
    let mutations = CheckResult::new(
        "intersection.cover-mutations",
        c1 && c2,
        format!(
            "Z' declared covered: {}; p -> p' of degree 1: {}",
            if c1 { "rejected" } else { "accepted" },
            if c2 { "rejected" } else { "accepted" }
        ),
    );
    vec![shipped, mutations]
}

/// Among all ways of attaching `X` and `Y` to the cycle over `(0:1)`, only
/// `X` on `B1` and `Y` on `B5` yield integral self-intersections with the
/// printed values.
fn placement() -> CheckResult {
    let id = "intersection.x-y-placement";
    let r = (|| -> Result<(bool, String)> {
        let g = pencil_s_resolved();
        let fibre = g.fibres().into_iter().find(|f| f.iter().any(|n| n == "B1")).unwrap_or_default();
        let base = g.restrict(&fibre)?;
        let cycle: Vec<String> = (1..=8).map(|i| format!("B{i}")).collect();
        let expected: Vec<(&str, i64)> = RESOLVED.iter().copied().filter(|(n, _)| fibre.iter().any(|f| f == n)).collect();
        let mut found = Vec::new();
        for bx in &cycle {
            for by in &cycle {
                let mut h = base.clone();
                h.intersections.retain(|(a, b, _)| !["X", "Y"].contains(&a.as_str()) && !["X", "Y"].contains(&b.as_str()));
                h.intersections.push(("X".into(), bx.clone(), 1));
                h.intersections.push(("Y".into(), by.clone(), 1));
                if let Ok(s) = h.solve_self_intersections() {
                    if compare(&s, &expected).is_empty() {
                        found.push(format!("X on {bx}, Y on {by}"));
                    }
                }
            }
        }
        Ok((found == ["X on B1, Y on B5"], format!("consistent placements: {found:?}")))
    })();
    CheckResult::from_result(id, r)
}
