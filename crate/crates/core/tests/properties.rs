use std::collections::BTreeSet;

use frobquartic::algebra::{Field, Gf, RatFunc, Ring};
use frobquartic::quartic::iso::random_witness;
use frobquartic::quartic::{forward_transform, isomorphism_decide, verify_witness, IsoDecision, QuarticFibre, QuarticParams};
use frobquartic::suites::{run_suite, CheckResult, Report, Suite, SuiteConfig};
use frobquartic::surface::{classify_fibre, Component, FibreGraph, FibreType};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gf(k: u8, v: u32) -> Gf {
    Gf::new(k, v & ((1u32 << k) - 1))
}

fn field_triple() -> impl Strategy<Value = (Gf, Gf, Gf)> {
    (1u8..=16, any::<u32>(), any::<u32>(), any::<u32>()).prop_map(|(k, a, b, c)| (gf(k, a), gf(k, b), gf(k, c)))
}

proptest! {
    #[test]
    fn gf_is_a_field((a, b, c) in field_triple()) {
        prop_assert_eq!((a + b) * c, a * c + b * c);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a + a, a.zero_like());
        if !a.is_zero() {
            prop_assert!((a * a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.square().sqrt(), Some(a));
    }

    #[test]
    fn frobenius_has_order_k((a, _, _) in field_triple()) {
        let k = a.degree();
        let mut x = a;
        for _ in 0..k {
            x = x.frobenius();
        }
        prop_assert_eq!(x, a);
        prop_assert_eq!(a.frobenius(), a.square());
    }
}

fn fibre_gf8(a: u32, b: u32, c: u32, e: u32) -> QuarticFibre {
    let k = 3;
    let nz = |v: u32| gf(k, v % 7 + 1);
    QuarticFibre::new(QuarticParams::new(gf(k, a), gf(k, b), nz(c), nz(e))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn phi_is_injective_onto_the_cubic(a in any::<u32>(), b in any::<u32>(), c in any::<u32>(), e in any::<u32>()) {
        let f = fibre_gf8(a, b, c, e);
        let pts = f.points(3);
        let images: BTreeSet<_> = pts.iter().map(|p| f.phi(p).unwrap()).collect();
        prop_assert_eq!(images.len(), pts.len());
        let target: BTreeSet<_> = f.target_points(3).into_iter().collect();
        prop_assert_eq!(images, target);
    }

    #[test]
    fn transported_group_is_abelian(a in any::<u32>(), b in any::<u32>(), c in any::<u32>(), e in any::<u32>(),
                                    i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(),
                                    l in any::<prop::sample::Index>()) {
        let f = fibre_gf8(a, b, c, e);
        let pts = f.points(3);
        let (p, q, r) = (i.get(&pts), j.get(&pts), l.get(&pts));
        let add = |x: &_, y: &_| f.transported_add(x, y).unwrap();
        prop_assert_eq!(add(p, q), add(q, p));
        prop_assert_eq!(add(&add(p, q), r), add(p, &add(q, r)));
        prop_assert_eq!(&add(p, &f.neutral(3)), p);
        prop_assert_eq!(f.transported_mul(pts.len() as u64, p).unwrap(), f.neutral(3));
    }

    #[test]
    fn forward_transforms_are_recognized(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = 2;
        let nonzero = |rng: &mut ChaCha8Rng| loop {
            let f = RatFunc::random_polynomial(k, 1, rng);
            if !f.is_zero() {
                return f;
            }
        };
        let q = QuarticParams::new(
            RatFunc::random_polynomial(k, 2, &mut rng),
            RatFunc::random_polynomial(k, 2, &mut rng),
            nonzero(&mut rng),
            nonzero(&mut rng),
        );
        let w = random_witness(&q, 2, &mut rng);
        let q2 = forward_transform(&q, &w).unwrap();
        match isomorphism_decide(&q, &q2).unwrap() {
            IsoDecision::Isomorphic { witness } => prop_assert!(verify_witness(&q, &q2, &witness)),
            other => prop_assert!(false, "{:?}", other),
        }
    }
}

fn rational(name: &str, multiplicity: i64) -> Component {
    Component { name: name.into(), multiplicity, genus: 0, self_intersection: None }
}

fn graph(components: Vec<Component>, edges: Vec<(String, String, i64)>) -> FibreGraph {
    FibreGraph { name: "g".into(), components, intersections: edges, sections: vec![], labels: Default::default() }
}

/// A cycle of `n ≥ 3` reduced rational curves.
fn cycle(n: usize) -> FibreGraph {
    let names: Vec<String> = (0..n).map(|i| format!("C{i}")).collect();
    let edges = (0..n).map(|i| (names[i].clone(), names[(i + 1) % n].clone(), 1)).collect();
    graph(names.iter().map(|c| rational(c, 1)).collect(), edges)
}

/// Blows up the point where the `i`-th and `(i+1)`-th curves of a cycle
/// meet, following `m_E = m_i + m_j` and `C^2 ↦ C^2 - 1`.
fn blow_up_node(g: &FibreGraph, a: &str, b: &str, e: &str) -> FibreGraph {
    let mut h = g.clone();
    let m = |n: &str| g.component(n).unwrap().multiplicity;
    for c in h.components.iter_mut().filter(|c| c.name == a || c.name == b) {
        c.self_intersection = c.self_intersection.map(|v| v - 1);
    }
    h.components.push(Component { name: e.into(), multiplicity: m(a) + m(b), genus: 0, self_intersection: Some(-1) });
    h.intersections.retain(|(x, y, _)| !((x == a && y == b) || (x == b && y == a)));
    h.intersections.push((a.into(), e.into(), 1));
    h.intersections.push((b.into(), e.into(), 1));
    h
}

fn canonical(g: &FibreGraph) -> (BTreeSet<(String, i64, Option<i64>)>, BTreeSet<(String, String, i64)>) {
    let comps = g.components.iter().map(|c| (c.name.clone(), c.multiplicity, c.self_intersection)).collect();
    let edges = g
        .intersections
        .iter()
        .filter(|e| e.2 != 0)
        .map(|(a, b, n)| if a < b { (a.clone(), b.clone(), *n) } else { (b.clone(), a.clone(), *n) })
        .collect();
    (comps, edges)
}

proptest! {
    #[test]
    fn cycles_have_genus_one_and_trees_genus_zero(n in 3usize..12, cut in 0usize..12) {
        let g = cycle(n).solve_self_intersections().unwrap();
        prop_assert!(g.components.iter().all(|c| c.self_intersection == Some(-2)));
        let names: Vec<String> = g.components.iter().map(|c| c.name.clone()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        prop_assert_eq!(g.arithmetic_genus_reduced(&refs).unwrap(), 1);
        // dropping one curve leaves a chain
        let mut chain = refs.clone();
        chain.remove(cut % n);
        prop_assert_eq!(g.arithmetic_genus_reduced(&chain).unwrap(), 0);
        prop_assert_eq!(classify_fibre(&g), FibreType::ATilde(n - 1));
    }

    #[test]
    fn contracting_a_blowup_restores_the_fibre(n in 3usize..10, i in 0usize..10) {
        let g = cycle(n).solve_self_intersections().unwrap();
        let (a, b) = (format!("C{}", i % n), format!("C{}", (i + 1) % n));
        let h = blow_up_node(&g, &a, &b, "E");
        prop_assert!(h.fibre_relation_violations().is_empty());
        prop_assert_eq!(h.exceptional_curves(), vec!["E".to_string()]);
        let back = h.contract_curve("E").unwrap();
        prop_assert!(back.check_minimal());
        prop_assert_eq!(canonical(&back), canonical(&g));
    }

    #[test]
    fn contractions_commute(n in 4usize..10, i in 0usize..10, gap in 1usize..3) {
        let g = cycle(n).solve_self_intersections().unwrap();
        let j = i + gap + 1;
        let name = |t: usize| format!("C{}", t % n);
        let h = blow_up_node(&g, &name(i), &name(i + 1), "E");
        let h = blow_up_node(&h, &name(j), &name(j + 1), "F");
        prop_assert!(h.fibre_relation_violations().is_empty());
        let ef = h.contract_curve("E").unwrap().contract_curve("F").unwrap();
        let fe = h.contract_curve("F").unwrap().contract_curve("E").unwrap();
        prop_assert_eq!(canonical(&ef), canonical(&fe));
        prop_assert_eq!(canonical(&ef), canonical(&g));
    }

    #[test]
    fn solving_after_contraction_agrees(n in 3usize..10, i in 0usize..10) {
        let g = cycle(n).solve_self_intersections().unwrap();
        let h = blow_up_node(&g, &format!("C{}", i % n), &format!("C{}", (i + 1) % n), "E");
        let mut unsolved = h.contract_curve("E").unwrap();
        for c in unsolved.components.iter_mut() {
            c.self_intersection = None;
        }
        let resolved = unsolved.solve_self_intersections().unwrap();
        prop_assert_eq!(canonical(&resolved), canonical(&h.contract_curve("E").unwrap()));
    }

    #[test]
    fn exit_status_reflects_failures(statuses in prop::collection::vec(0u8..3, 0..8)) {
        let checks: Vec<CheckResult> = statuses
            .iter()
            .enumerate()
            .map(|(i, s)| match s {
                0 => CheckResult::new(format!("c{i}"), true, "ok"),
                1 => CheckResult::new(format!("c{i}"), false, "bad"),
                _ => CheckResult::skip(format!("c{i}"), "skipped"),
            })
            .collect();
        let r = Report::new("test", &SuiteConfig::default(), checks);
        let fails = statuses.iter().filter(|s| **s == 1).count();
        prop_assert_eq!(r.exit_status == 0, fails == 0);
        prop_assert_eq!(r.summary.fail, fails);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        prop_assert_eq!(back, r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn same_seed_same_report(seed in any::<u64>()) {
        let cfg = SuiteConfig { seed, ..SuiteConfig::default() };
        let a = run_suite(Suite::Delta, &cfg).unwrap().to_json();
        let b = run_suite(Suite::Delta, &cfg).unwrap().to_json();
        prop_assert_eq!(a, b);
    }
}
