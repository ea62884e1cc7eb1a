//! Singularity degrees, the fibre taxonomy, strangeness and tangent profiles.

use std::collections::BTreeSet;

use super::{CheckResult, SuiteConfig};
use crate::algebra::{Gf, MPoly, Ring, VarCtx};
use crate::curves::{delta_blowup, delta_semigroup, on_line, ProjPoint};
use crate::quartic::{build_quartic, FibreLabel, QuarticFibre, QuarticParams};
use crate::series::LaurentSeries;
use crate::Result;

pub(super) const CHECKS: &[super::Check] = &[
    ("unibranch", |cfg| vec![unibranch(cfg)]),
    ("node", |_| vec![node()]),
    ("sweep", |_| vec![sweep()]),
    ("strange", |_| vec![strangeness()]),
    ("tangents", |cfg| vec![tangent_profiles(cfg)]),
];

fn gf4() -> [Gf; 3] {
    [Gf::zero(2), Gf::one(2), Gf::generator(2)]
}

fn fibre(a: Gf, b: Gf, c: Gf, e: Gf) -> QuarticFibre {
    QuarticFibre::new(QuarticParams::new(a, b, c, e)).expect("parameters share a field")
}

fn summarize(id: &str, total: usize, bad: Vec<String>, what: &str) -> CheckResult {
    let ok = bad.is_empty();
    let detail = if ok { format!("{total} fibres: {what}") } else { bad.join("; ") };
    CheckResult::new(id, ok, detail)
}

/// Both δ computations at `(0 : 1 : b̄^{1/2})` on every genus-one fibre over GF(4).
fn unibranch(cfg: &SuiteConfig) -> CheckResult {
    let id = "delta.unibranch-singularity";
    let prec = cfg.prec.max(16);
    let mut bad = Vec::new();
    let mut total = 0;
    for a in Gf::elements(2) {
        for b in Gf::elements(2) {
            for c in Gf::nonzero_elements(2) {
                for e in Gf::nonzero_elements(2) {
                    total += 1;
                    let f = fibre(a, b, c, e);
                    let r = (|| -> Result<(usize, usize)> {
                        let blow = delta_blowup(f.form(), &f.singular_point())?;
                        let [x, _, z] = f.branch_parametrization(prec);
                        let local_z = z + LaurentSeries::constant(f.roots().b, prec);
                        Ok((blow, delta_semigroup(&x, &local_z)?))
                    })();
                    match r {
                        Ok((2, 2)) => {}
                        Ok((d1, d2)) => bad.push(format!("({a},{b},{c},{e}): blowup {d1}, semigroup {d2}")),
                        Err(err) => bad.push(format!("({a},{b},{c},{e}): {err}")),
                    }
                }
            }
        }
    }
    summarize(id, total, bad, "delta = 2 by blowups and by the value semigroup")
}

/// For ē = 0 the fibre acquires a node at `(0 : 0 : 1)`.
fn node() -> CheckResult {
    let id = "delta.node";
    let origin = ProjPoint::new(Gf::zero(2), Gf::zero(2), Gf::one(2)).unwrap();
    let mut bad = Vec::new();
    let mut total = 0;
    for a in Gf::elements(2) {
        for b in Gf::elements(2) {
            for c in Gf::nonzero_elements(2) {
                total += 1;
                let f = fibre(a, b, c, Gf::zero(2));
                let r = (|| -> Result<(usize, Vec<usize>)> {
                    let t = f.taxonomy()?;
                    let others: Vec<usize> =
                        t.singularities
                            .iter()
                            .filter(|s| s.point != f.singular_point().embed(s.point.field_degree()))
                            .map(|s| s.delta)
                            .collect();
                    Ok((delta_blowup(f.form(), &origin)?, others))
                })();
                match r {
                    Ok((1, others)) if others == [1] => {}
                    Ok((d, others)) => {
                        bad.push(format!("({a},{b},{c},0): delta {d} at (0:0:1), further deltas {others:?}"))
                    }
                    Err(err) => bad.push(format!("({a},{b},{c},0): {err}")),
                }
            }
        }
    }
    summarize(id, total, bad, "delta = 1 at (0:0:1) and no further singularity")
}

fn expected_label(c: Gf, e: Gf) -> FibreLabel {
    if c.is_zero() {
        FibreLabel::ReducibleWithDoubleLine
    } else if e.is_zero() {
        FibreLabel::NodalRational
    } else {
        FibreLabel::GenusOne
    }
}

fn sweep() -> CheckResult {
    let id = "delta.taxonomy-sweep";
    let b = Gf::generator(2);
    let mut bad = Vec::new();
    for a in gf4() {
        for c in gf4() {
            for e in gf4() {
                let want = expected_label(c, e);
                match fibre(a, b, c, e).taxonomy() {
                    Ok(t) if t.label == want => {}
                    Ok(t) => bad.push(format!("({a},{b},{c},{e}): {} instead of {want}", t.label)),
                    Err(err) => bad.push(format!("({a},{b},{c},{e}): {err}")),
                }
            }
        }
    }
    summarize(id, 27, bad, "labels match on a, c, e in {0, 1, w}, b = w")
}

/// `∂Q/∂z` vanishes as a polynomial, and tangents at smooth points over
/// GF(8) all pass through `(0 : 0 : 1)`.
fn strangeness() -> CheckResult {
    let id = "delta.strangeness";
    let ctx = VarCtx::new(&["a", "b", "c", "e"]);
    let v = |s: &str| MPoly::parse(&ctx, s).unwrap();
    let q = build_quartic(&QuarticParams::new(v("a"), v("b"), v("c"), v("e")));
    let symbolic = q.partial(2).is_zero() && !q.partial(0).is_zero();
    let mut bad = Vec::new();
    let mut total = 0;
    for a in [Gf::zero(3), Gf::one(3)] {
        for b in Gf::elements(3).step_by(3) {
            for c in Gf::nonzero_elements(3).step_by(3) {
                let f = fibre(a, b, c, Gf::one(3));
                total += 1;
                for p in f.points(3) {
                    if p == f.singular_point() {
                        continue;
                    }
                    match f.form().tangent_line(&p) {
                        Ok(l) if on_line(&l, &f.strange_point()) => {}
                        Ok(_) => bad.push(format!("tangent at {p} misses (0:0:1)")),
                        Err(err) => bad.push(format!("{p}: {err}")),
                    }
                }
            }
        }
    }
    let ok = symbolic && bad.is_empty();
    let detail = if ok {
        format!("dQ/dz = 0 identically; {total} fibres over GF(8) checked pointwise")
    } else if !symbolic {
        "dQ/dz does not vanish".to_string()
    } else {
        bad.join("; ")
    };
    CheckResult::new(id, ok, detail)
}

/// Every smooth-point tangent is bitangent, four-fold, or passes through the
/// singular point; the four-fold points are exactly the two inflections.
fn tangent_profiles(cfg: &SuiteConfig) -> CheckResult {
    let id = "delta.tangent-profiles";
    let mut rng = cfg.rng(id);
    let mut bad = Vec::new();
    let total = 6;
    for _ in 0..total {
        let f = fibre(
            Gf::random(3, &mut rng),
            Gf::random(3, &mut rng),
            Gf::random_nonzero(3, &mut rng),
            Gf::random_nonzero(3, &mut rng),
        );
        if let Err(err) = profile_failure(&f, &mut bad) {
            bad.push(format!("{:?}: {err}", f.params().as_array().map(|v| v.to_string())));
        }
    }
    summarize(id, total, bad, "profiles are (2,2), (4) or through the singular point; two 4-fold points each")
}

fn profile_failure(f: &QuarticFibre, bad: &mut Vec<String>) -> Result<()> {
    let infl = f.inflection_points()?;
    let m = infl.field_degree;
    let form = f.form().embed(m);
    let sing = f.singular_point().embed(m);
    let mut fourfold = BTreeSet::new();
    for p in f.points(m) {
        if p == sing {
            continue;
        }
        let l = form.tangent_line(&p)?;
        let profile = form.line_intersection_profile(&l)?;
        let mults = profile.multiplicities();
        if profile.contains_point(&sing) {
            continue;
        }
        match mults.as_slice() {
            [2, 2] => {}
            [4] => {
                fourfold.insert(p);
            }
            other => bad.push(format!("tangent at {p} has profile {other:?}")),
        }
    }
    let expected: BTreeSet<ProjPoint> = infl.points.iter().cloned().collect();
    if fourfold != expected {
        bad.push(format!("4-fold points {fourfold:?}, expected {expected:?}"));
    }
    Ok(())
}
