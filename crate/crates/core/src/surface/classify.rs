//! Extended Dynkin types of fibres made of rational (-2)-curves.

use std::fmt;

use serde::{Serialize, Serializer};

use super::FibreGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FibreType {
    /// `Ã_n`: a cycle of `n + 1` curves (two curves meeting twice for `n = 1`).
    ATilde(usize),
    /// `D̃_n` with `n + 1` curves.
    DTilde(usize),
    E6Tilde,
    E7Tilde,
    E8Tilde,
    Unclassified,
}

impl fmt::Display for FibreType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FibreType::ATilde(n) => write!(f, "Ã{n}"),
            FibreType::DTilde(n) => write!(f, "D̃{n}"),
            FibreType::E6Tilde => f.write_str("Ẽ6"),
            FibreType::E7Tilde => f.write_str("Ẽ7"),
            FibreType::E8Tilde => f.write_str("Ẽ8"),
            FibreType::Unclassified => f.write_str("unclassified"),
        }
    }
}

impl Serialize for FibreType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The type of a single connected fibre, read off its dual graph.
///
/// Every component must be a rational (-2)-curve and the multiplicities
/// must be primitive; anything outside the extended Dynkin shapes is
/// [`FibreType::Unclassified`].
pub fn classify_fibre(g: &FibreGraph) -> FibreType {
    let n = g.components.len();
    if n < 2 || g.components.iter().any(|c| c.genus != 0 || c.self_intersection != Some(-2)) {
        return FibreType::Unclassified;
    }
    if g.fibres().len() != 1 || g.components.iter().map(|c| c.multiplicity).fold(0, gcd) != 1 {
        return FibreType::Unclassified;
    }
    if n == 2 {
        return match g.intersections.as_slice() {
            [(_, _, 2)] => FibreType::ATilde(1),
            _ => FibreType::Unclassified,
        };
    }
    if g.intersections.iter().any(|(_, _, k)| *k != 1) {
        return FibreType::Unclassified;
    }
    let idx = |name: &str| g.components.iter().position(|c| c.name == name).unwrap();
    let mut adj = vec![Vec::new(); n];
    for (a, b, _) in &g.intersections {
        let (i, j) = (idx(a), idx(b));
        adj[i].push(j);
        adj[j].push(i);
    }
    let edges = g.intersections.len();
    if edges == n {
        return if adj.iter().all(|v| v.len() == 2) {
            FibreType::ATilde(n - 1)
        } else {
            FibreType::Unclassified
        };
    }
    if edges != n - 1 {
        return FibreType::Unclassified;
    }
    let branch: Vec<usize> = (0..n).filter(|&i| adj[i].len() >= 3).collect();
    let leaf = |i: usize| adj[i].len() == 1;
    match branch.as_slice() {
        [c] if adj[*c].len() == 4 && n == 5 => FibreType::DTilde(4),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c].iter().map(|&s| arm_length(&adj, *c, s)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [2, 2, 2] => FibreType::E6Tilde,
                [1, 3, 3] => FibreType::E7Tilde,
                [1, 2, 5] => FibreType::E8Tilde,
                _ => FibreType::Unclassified,
            }
        }
        [p, q] if adj[*p].len() == 3 && adj[*q].len() == 3 => {
            let leaves = |c: usize| adj[c].iter().filter(|&&j| leaf(j)).count();
            if leaves(*p) == 2 && leaves(*q) == 2 {
                FibreType::DTilde(n - 1)
            } else {
                FibreType::Unclassified
            }
        }
        _ => FibreType::Unclassified,
    }
}

/// Number of vertices on the path leaving `centre` through `start`.
fn arm_length(adj: &[Vec<usize>], centre: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (centre, start, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&j| j != prev).collect();
        match next.as_slice() {
            [j] => {
                prev = cur;
                cur = *j;
                len += 1;
            }
            _ => return len,
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl FibreGraph {
    /// The type of each fibre, in the order of [`FibreGraph::fibres`].
    pub fn classify_fibres(&self) -> Vec<FibreType> {
        self.fibres()
            .iter()
            .map(|names| self.restrict(names).map(|g| classify_fibre(&g)).unwrap_or(FibreType::Unclassified))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(comps: &[(&str, i64)], edges: &[(&str, &str, i64)]) -> FibreGraph {
        let json = serde_json::json!({
            "name": "t",
            "components": comps.iter().map(|(n, m)| serde_json::json!({"name": n, "multiplicity": m})).collect::<Vec<_>>(),
            "intersections": edges.iter().map(|(a, b, k)| serde_json::json!([a, b, k])).collect::<Vec<_>>(),
        });
        FibreGraph::from_json(&json.to_string()).unwrap().solve_self_intersections().unwrap()
    }

    #[test]
    fn triangle_and_d4() {
        let t = graph(&[("a", 1), ("b", 1), ("c", 1)], &[("a", "b", 1), ("b", "c", 1), ("c", "a", 1)]);
        assert_eq!(classify_fibre(&t), FibreType::ATilde(2));
        let d4 = graph(
            &[("c", 2), ("l1", 1), ("l2", 1), ("l3", 1), ("l4", 1)],
            &[("c", "l1", 1), ("c", "l2", 1), ("c", "l3", 1), ("c", "l4", 1)],
        );
        assert_eq!(classify_fibre(&d4), FibreType::DTilde(4));
    }

    #[test]
    fn e6_and_d5() {
        let e6 = graph(
            &[("c", 3), ("a1", 2), ("a2", 1), ("b1", 2), ("b2", 1), ("d1", 2), ("d2", 1)],
            &[("c", "a1", 1), ("a1", "a2", 1), ("c", "b1", 1), ("b1", "b2", 1), ("c", "d1", 1), ("d1", "d2", 1)],
        );
        assert_eq!(classify_fibre(&e6), FibreType::E6Tilde);
        let d5 = graph(
            &[("p", 2), ("q", 2), ("l1", 1), ("l2", 1), ("l3", 1), ("l4", 1)],
            &[("p", "q", 1), ("p", "l1", 1), ("p", "l2", 1), ("q", "l3", 1), ("q", "l4", 1)],
        );
        assert_eq!(classify_fibre(&d5), FibreType::DTilde(5));
    }

    #[test]
    fn minus_three_curves_are_unclassified() {
        let g = graph(&[("a", 1), ("b", 1)], &[("a", "b", 3)]);
        assert_eq!(classify_fibre(&g), FibreType::Unclassified);
    }
}
