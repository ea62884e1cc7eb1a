//! Discriminants of the normal forms, the morphisms between a quartic fibre
//! and its two cubics, and the transported torsion.

use std::collections::BTreeSet;

use rand::Rng;

use super::{CheckResult, SuiteConfig};
use crate::algebra::{Gf, MPoly, RatFunc, Ring, VarCtx};
use crate::curves::ProjPoint;
use crate::elliptic::{infinity, NormalFormCase, TransformParams, WeierstrassCoeffs};
use crate::quartic::{QuarticFibre, QuarticParams};
use crate::Result;

pub(super) const CHECKS: &[super::Check] = &[
    ("discriminants", |cfg| vec![discriminant_shapes(cfg)]),
    ("transforms", |cfg| vec![discriminant_transforms(cfg)]),
    ("morphisms", morphisms),
    ("torsion", torsion),
];

fn discriminant_shapes(cfg: &SuiteConfig) -> CheckResult {
    let id = "torsion.normal-form-discriminants";
    let ctx = VarCtx::new(&["a2", "a3", "a4", "a6"]);
    let v = |s: &str| MPoly::parse(&ctx, s).unwrap();
    let (zero, one) = (v("0"), v("1"));
    let shapes = [
        (WeierstrassCoeffs::new(zero.clone(), zero.clone(), v("a3"), v("a4"), v("a6")), v("a3^4")),
        (WeierstrassCoeffs::new(one.clone(), v("a2"), zero.clone(), zero.clone(), v("a6")), v("a6")),
        (WeierstrassCoeffs::new(one, v("a2"), zero.clone(), v("a4"), zero), v("a4^2")),
    ];
    let symbolic = shapes.iter().all(|(w, d)| w.discriminant() == *d);

    // every normal form produced over GF(8)(t) has one of the three shapes
    let mut rng = cfg.rng(id);
    let mut bad = 0;
    let mut seen = BTreeSet::new();
    for _ in 0..60 {
        let w = random_curve(3, &mut rng);
        let Ok((case, n, p)) = w.normal_form() else { continue };
        let z = |f: &RatFunc| f.is_zero();
        let shape_ok = match case {
            NormalFormCase::JZero => z(&n.a1) && z(&n.a2) && n.discriminant() == n.a3.pow(4),
            NormalFormCase::JNonzero => n.a1.is_one() && z(&n.a3) && z(&n.a4) && n.discriminant() == n.a6,
            NormalFormCase::JSquare => n.a1.is_one() && z(&n.a3) && z(&n.a6) && n.discriminant() == n.a4.square(),
        };
        if !shape_ok || w.transform(&p) != n {
            bad += 1;
        }
        seen.insert(format!("{case:?}"));
    }
    CheckResult::new(
        id,
        symbolic && bad == 0,
        format!(
            "symbolic shapes {}; {bad} bad normal forms over GF(8)(t), cases seen {:?}",
            if symbolic { "match" } else { "differ" },
            seen
        ),
    )
}

fn random_curve<R: Rng>(k: u8, rng: &mut R) -> WeierstrassCoeffs<RatFunc> {
    loop {
        let j_zero = rng.gen_bool(0.25);
        let mut r = || RatFunc::random_polynomial(k, 2, rng);
        let a1 = if j_zero { RatFunc::zero(k) } else { r() };
        let w = WeierstrassCoeffs::new(a1, r(), r(), r(), r());
        if !w.discriminant().is_zero() {
            return w;
        }
    }
}

fn discriminant_transforms(cfg: &SuiteConfig) -> CheckResult {
    let id = "torsion.discriminant-transforms";
    let mut rng = cfg.rng(id);
    let mut bad = 0;
    for _ in 0..500 {
        let w = random_curve(3, &mut rng);
        let mut mu = RatFunc::random(3, 1, &mut rng);
        while mu.is_zero() {
            mu = RatFunc::random(3, 1, &mut rng);
        }
        let p = TransformParams {
            mu: mu.clone(),
            rho: RatFunc::random(3, 2, &mut rng),
            sigma: RatFunc::random(3, 2, &mut rng),
            tau: RatFunc::random(3, 2, &mut rng),
        };
        let w2 = w.transform(&p);
        if mu.pow(12) * w2.discriminant() != w.discriminant() {
            bad += 1;
        }
    }
    CheckResult::new(id, bad == 0, format!("{bad} of 500 random transforms over GF(8)(t) violate mu^12 D' = D"))
}

/// Fibres with `c e ≠ 0` over GF(2^k): all of them when few, else a sample.
fn fibres(k: u8, cfg: &SuiteConfig, id: &str, count: usize) -> Vec<QuarticFibre> {
    let mut rng = cfg.rng(id);
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    while out.len() < count {
        let p = QuarticParams::new(
            Gf::random(k, &mut rng),
            Gf::random(k, &mut rng),
            Gf::random_nonzero(k, &mut rng),
            Gf::random_nonzero(k, &mut rng),
        );
        if seen.insert(p.as_array().map(|v| v.value())) {
            out.push(QuarticFibre::new(p).expect("parameters share a field"));
        }
        if seen.len() as u64 == Gf::field_size(k).pow(2) * (Gf::field_size(k) - 1).pow(2) {
            break;
        }
    }
    out
}

fn morphisms(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let mut ks = vec![2, 3];
    if cfg.k > 3 && cfg.k <= 6 {
        ks.push(cfg.k);
    }
    ks.into_iter()
        .map(|k| {
            let id = format!("torsion.morphisms-gf{}", 1u64 << k);
            let fs = fibres(k, cfg, &id, 6);
            let r = fs.iter().try_fold(Vec::new(), |mut acc, f| {
                if let Some(err) = morphism_failure(f)? {
                    acc.push(err);
                }
                Ok(acc)
            });
            CheckResult::from_result(
                &id,
                r.map(|bad: Vec<String>| {
                    let ok = bad.is_empty();
                    let detail = if ok {
                        format!("{} fibres: phi bijective, psi and phi compose to squaring, special images", fs.len())
                    } else {
                        bad.join("; ")
                    };
                    (ok, detail)
                }),
            )
        })
        .collect()
}

fn morphism_failure(f: &QuarticFibre) -> Result<Option<String>> {
    let k = f.field_degree();
    let tag = |s: &str| Ok(Some(format!("{:?}: {s}", f.params().as_array().map(|v| v.to_string()))));
    let pts = f.points(k);
    let target = f.target_points(k);
    if pts.len() != target.len() {
        return tag(&format!("#Q = {} but #E = {}", pts.len(), target.len()));
    }
    let mut images = BTreeSet::new();
    for p in &pts {
        let r = f.phi(p)?;
        if f.phi_inverse(&r)? != *p {
            return tag(&format!("phi_inverse(phi({p})) differs"));
        }
        if !both_assignments_agree(f, p) {
            return tag(&format!("the two formulas for phi disagree at {p}"));
        }
        images.insert(r);
    }
    if images.len() != pts.len() || images.iter().any(|r| !target.contains(r)) {
        return tag("phi is not a bijection onto E");
    }
    for p in f.source_points(k) {
        let q = f.psi(&p)?;
        if !f.contains(&q) || f.phi(&q)? != p.frobenius() {
            return tag(&format!("phi(psi({p})) is not the square of {p}"));
        }
        if f.phi_inverse(&p.frobenius())? != q {
            return tag(&format!("psi({p}) differs from the section of phi at its square"));
        }
    }
    if f.phi(&f.singular_point())? != infinity(k) {
        return tag("singular point does not map to (0:1:0)");
    }
    let origin = ProjPoint::new(Gf::zero(k), Gf::zero(k), Gf::one(k)).unwrap();
    let r = f.roots();
    let expected = ProjPoint::new(Gf::zero(k), r.e, Gf::one(k) + r.b * r.e).unwrap();
    if f.psi(&origin)? != expected {
        return tag("(0:0:1) has the wrong image");
    }
    Ok(None)
}

/// Where `(c x^2 : c x y : S)` and `(x h : y h : x^3)` are both defined they
/// name the same point.
fn both_assignments_agree(f: &QuarticFibre, p: &ProjPoint) -> bool {
    let q = f.params();
    let [x, y, z] = p.coords();
    let s = z * z + q.b * y * y + q.a * q.b * x * x;
    let h = q.e * s + y * y + x * y + q.a * x * x;
    match (ProjPoint::new(q.c * x * x, q.c * x * y, s), ProjPoint::new(x * h, y * h, x * x * x)) {
        (Some(u), Some(v)) => u == v,
        _ => true,
    }
}

fn torsion(cfg: &SuiteConfig) -> Vec<CheckResult> {
    [(2u8, usize::MAX), (4, 8)]
        .into_iter()
        .map(|(k, count)| {
            let id = format!("torsion.two-and-four-torsion-gf{}", 1u64 << k);
            let fs = fibres(k, cfg, &id, count);
            let r = fs.iter().try_fold(Vec::new(), |mut acc, f| {
                if let Some(err) = torsion_failure(f)? {
                    acc.push(err);
                }
                Ok(acc)
            });
            CheckResult::from_result(
                &id,
                r.map(|bad: Vec<String>| {
                    let ok = bad.is_empty();
                    let detail = if ok {
                        format!("{} fibres: one point of order 2, order-4 points are the inflections", fs.len())
                    } else {
                        bad.join("; ")
                    };
                    (ok, detail)
                }),
            )
        })
        .collect()
}

fn torsion_failure(f: &QuarticFibre) -> Result<Option<String>> {
    let tag = |s: String| Ok(Some(format!("{:?}: {s}", f.params().as_array().map(|v| v.to_string()))));
    let infl = f.inflection_points()?;
    let m = infl.field_degree;
    let mut two = Vec::new();
    let mut four = BTreeSet::new();
    for p in f.points(m) {
        match f.transported_order(&p, 4)? {
            Some(2) => two.push(p),
            Some(4) => {
                four.insert(p);
            }
            _ => {}
        }
    }
    let expected_two = f.order_two_point()?.embed(m);
    if two != [expected_two] {
        return tag(format!("order-2 points {two:?}"));
    }
    let expected_four: BTreeSet<ProjPoint> = infl.points.iter().cloned().collect();
    if four != expected_four {
        return tag(format!("order-4 points {four:?} over GF(2^{m})"));
    }
    Ok(None)
}
