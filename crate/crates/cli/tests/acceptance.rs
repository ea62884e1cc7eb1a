//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs the binary's `verify --suite all` twice and maps every
//! criterion onto the check ids of the report.

use std::process::{Command, ExitCode};

use serde_json::Value;

struct Criterion {
    number: usize,
    title: &'static str,
    ids: &'static [&'static str],
    /// Further checks selected by id prefix, with the least number expected.
    prefix: Option<(&'static str, usize)>,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "normal-form discriminants and mu^12 D' = D",
        ids: &["torsion.normal-form-discriminants", "torsion.discriminant-transforms"],
        prefix: None,
    },
    Criterion {
        number: 2,
        title: "series expansions at infinity, z^2 and the Tate curve",
        ids: &[
            "series.y-general",
            "series.y-case-a",
            "series.y-case-b",
            "series.z2-case-a",
            "series.z2-case-b",
            "series.tate13",
        ],
        prefix: Some(("series.", 6)),
    },
    Criterion {
        number: 3,
        title: "phi bijective, Frobenius composites, special images over GF(4) and GF(8)",
        ids: &["torsion.morphisms-gf4", "torsion.morphisms-gf8"],
        prefix: None,
    },
    Criterion {
        number: 4,
        title: "one point of order 2, order-4 points are the inflections",
        ids: &["torsion.two-and-four-torsion-gf4", "torsion.two-and-four-torsion-gf16"],
        prefix: None,
    },
    Criterion {
        number: 5,
        title: "delta invariants and the fibre taxonomy",
        ids: &["delta.unibranch-singularity", "delta.node", "delta.taxonomy-sweep"],
        prefix: None,
    },
    Criterion {
        number: 6,
        title: "strangeness and tangent profiles",
        ids: &["delta.strangeness", "delta.tangent-profiles", "symbolic.strangeness"],
        prefix: None,
    },
    Criterion {
        number: 7,
        title: "certified polynomial identities with mutation controls",
        ids: &[],
        prefix: Some(("symbolic.", 7)),
    },
    Criterion {
        number: 8,
        title: "intersection numbers, genera, minimal model, fibre types, cover map",
        ids: &[
            "intersection.self-intersections",
            "intersection.bunch-genera",
            "intersection.minimal-model",
            "intersection.classify",
            "intersection.cover",
            "intersection.cover-mutations",
        ],
        prefix: Some(("intersection.", 6)),
    },
    Criterion {
        number: 9,
        title: "isomorphism decision over GF(4)(t)",
        ids: &["iso.round-trips", "iso.rejections"],
        prefix: None,
    },
];

fn run_verify() -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_frobquartic"))
        .args(["--seed", "0", "verify", "--suite", "all"])
        .output()
        .expect("the binary runs");
    (out.status.code(), String::from_utf8(out.stdout).expect("utf-8 report"))
}

fn status_of<'a>(checks: &'a [Value], id: &str) -> Option<&'a str> {
    checks.iter().find(|c| c["id"] == id).and_then(|c| c["status"].as_str())
}

fn evaluate(c: &Criterion, checks: &[Value]) -> (bool, String) {
    let mut bad = Vec::new();
    for id in c.ids {
        match status_of(checks, id) {
            Some("pass") => {}
            Some(s) => bad.push(format!("{id} {s}")),
            None => bad.push(format!("{id} missing")),
        }
    }
    let mut n = c.ids.len();
    if let Some((prefix, least)) = c.prefix {
        let selected: Vec<&Value> =
            checks.iter().filter(|v| v["id"].as_str().is_some_and(|id| id.starts_with(prefix))).collect();
        for v in &selected {
            if v["status"] != "pass" {
                bad.push(format!("{} {}", v["id"], v["status"]));
            }
        }
        if selected.len() < least {
            bad.push(format!("only {} checks named {prefix}*", selected.len()));
        }
        n = n.max(selected.len());
    }
    if bad.is_empty() {
        (true, format!("{n} checks pass"))
    } else {
        bad.sort();
        bad.dedup();
        (false, bad.join(", "))
    }
}

fn main() -> ExitCode {
    let (code1, first) = run_verify();
    let (code2, second) = run_verify();
    let report: Value = match serde_json::from_str(&first) {
        Ok(v) => v,
        Err(e) => {
            println!("report is not JSON: {e}");
            return ExitCode::FAILURE;
        }
    };
    let checks = report["checks"].as_array().cloned().unwrap_or_default();

    let mut failed = 0;
    for c in CRITERIA {
        let (ok, detail) = evaluate(c, &checks);
        failed += usize::from(!ok);
        println!("criterion {}: {} ({}) {detail}", c.number, if ok { "PASS" } else { "FAIL" }, c.title);
    }
    let same = first == second && code1 == code2;
    failed += usize::from(!same);
    println!(
        "criterion 10: {} (byte-identical reports for seed 0) {} bytes, exit {code1:?} and {code2:?}",
        if same { "PASS" } else { "FAIL" },
        first.len()
    );

    if code1 != Some(0) {
        println!("verify exited with {code1:?}");
        failed += 1;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
