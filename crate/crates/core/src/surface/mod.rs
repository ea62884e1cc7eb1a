//! Intersection theory on the fibres of a fibred surface, from combinatorial
//! data: multiplicities, pairwise intersection numbers and sections.
//!
//! A [`FibreGraph`] may hold several fibres at once; they are the connected
//! components of its intersection graph.

mod classify;
mod cover;
pub mod shipped;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use classify::{classify_fibre, FibreType};
pub use cover::{validate_cover_map, CoverCheck, CoverCorrespondence, CoverReport, SectionMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub name: String,
    pub multiplicity: i64,
    #[serde(default)]
    pub genus: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_intersection: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Section {
    pub name: String,
    /// Degree over the base.
    pub degree: i64,
    pub meets: Vec<(String, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FibreGraph {
    pub name: String,
    pub components: Vec<Component>,
    pub intersections: Vec<(String, String, i64)>,
    #[serde(default)]
    pub sections: Vec<Section>,
    /// Free-form annotations such as the surface points the fibres lie over.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<String, String>,
}

fn graph_err(msg: impl Into<String>) -> Error {
    Error::Graph(msg.into())
}

impl FibreGraph {
    pub fn from_json(src: &str) -> Result<Self> {
        let g: FibreGraph = serde_json::from_str(src).map_err(|e| graph_err(format!("schema: {e}")))?;
        g.validate()?;
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graphs serialize")
    }

    pub fn validate(&self) -> Result<()> {
        let mut names = BTreeSet::new();
        for c in &self.components {
            if !names.insert(c.name.as_str()) {
                return Err(graph_err(format!("duplicate component {}", c.name)));
            }
            if c.multiplicity <= 0 {
                return Err(graph_err(format!("multiplicity of {} must be positive", c.name)));
            }
            if c.genus < 0 {
                return Err(graph_err(format!("genus of {} is negative", c.name)));
            }
        }
        let mut pairs = BTreeSet::new();
        for (a, b, n) in &self.intersections {
            for x in [a, b] {
                if !names.contains(x.as_str()) {
                    return Err(graph_err(format!("unknown component {x}")));
                }
            }
            if a == b {
                return Err(graph_err(format!("{a}·{a} belongs in self_intersection")));
            }
            if *n < 0 {
                return Err(graph_err(format!("{a}·{b} is negative")));
            }
            let key = if a < b { (a, b) } else { (b, a) };
            if !pairs.insert(key) {
                return Err(graph_err(format!("{a}·{b} listed twice")));
            }
        }
        for s in &self.sections {
            if names.contains(s.name.as_str()) {
                return Err(graph_err(format!("section {} shadows a component", s.name)));
            }
            for (c, n) in &s.meets {
                if !names.contains(c.as_str()) {
                    return Err(graph_err(format!("section {} meets unknown {c}", s.name)));
                }
                if *n < 0 {
                    return Err(graph_err(format!("{}·{c} is negative", s.name)));
                }
            }
        }
        Ok(())
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.components
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| graph_err(format!("unknown component {name}")))
    }

    pub fn component(&self, name: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.name == name)
    }

    /// The symmetric matrix of off-diagonal intersection numbers.
    fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.components.len();
        let mut m = vec![vec![0; n]; n];
        for (a, b, k) in &self.intersections {
            let (i, j) = (self.index(a).unwrap(), self.index(b).unwrap());
            m[i][j] = *k;
            m[j][i] = *k;
        }
        m
    }

    fn rebuild(&self, components: Vec<Component>, m: &[Vec<i64>], sections: Vec<Section>) -> FibreGraph {
        let mut intersections = Vec::new();
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                if m[i][j] != 0 {
                    intersections.push((components[i].name.clone(), components[j].name.clone(), m[i][j]));
                }
            }
        }
        FibreGraph {
            name: self.name.clone(),
            components,
            intersections,
            sections,
            labels: self.labels.clone(),
        }
    }

    /// `C·D` for distinct components, `C^2` (if known) on the diagonal.
    pub fn intersection(&self, a: &str, b: &str) -> Result<Option<i64>> {
        let (i, j) = (self.index(a)?, self.index(b)?);
        if i == j {
            return Ok(self.components[i].self_intersection);
        }
        Ok(Some(self.matrix()[i][j]))
    }

    /// The fibres: connected components of the intersection graph, each
    /// listed in declaration order.
    pub fn fibres(&self) -> Vec<Vec<String>> {
        let m = self.matrix();
        components_of(&m, &(0..self.components.len()).collect::<Vec<_>>())
            .into_iter()
            .map(|part| part.into_iter().map(|i| self.components[i].name.clone()).collect())
            .collect()
    }

    /// Fills in every `C^2` from `F·C = 0`, i.e. `C^2 = -(1/m_C) Σ_{D≠C} m_D C·D`.
    pub fn solve_self_intersections(&self) -> Result<FibreGraph> {
        let m = self.matrix();
        let mut out = self.clone();
        for (i, c) in self.components.iter().enumerate() {
            let s: i64 = (0..m.len())
                .filter(|&j| j != i)
                .map(|j| self.components[j].multiplicity * m[i][j])
                .sum();
            if s % c.multiplicity != 0 {
                return Err(graph_err(format!(
                    "{}^2 = -{s}/{} is not an integer",
                    c.name, c.multiplicity
                )));
            }
            let v = -s / c.multiplicity;
            if let Some(given) = c.self_intersection {
                if given != v {
                    return Err(graph_err(format!("{}^2 is {given} but F·C = 0 forces {v}", c.name)));
                }
            }
            out.components[i].self_intersection = Some(v);
        }
        Ok(out)
    }

    pub fn is_solved(&self) -> bool {
        self.components.iter().all(|c| c.self_intersection.is_some())
    }

    /// Components violating `Σ_D m_D C·D = 0` (with `C·C = C^2`).
    pub fn fibre_relation_violations(&self) -> Vec<String> {
        let m = self.matrix();
        let mut bad = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            let Some(sq) = c.self_intersection else {
                bad.push(format!("{}^2 unknown", c.name));
                continue;
            };
            let s: i64 = (0..m.len())
                .map(|j| self.components[j].multiplicity * if i == j { sq } else { m[i][j] })
                .sum();
            if s != 0 {
                bad.push(format!("F·{} = {s}", c.name));
            }
        }
        bad
    }

    /// Sections whose weighted incidence with some fibre differs from their degree.
    pub fn section_degree_violations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for fibre in self.fibres() {
            for s in &self.sections {
                let total: i64 = s
                    .meets
                    .iter()
                    .filter(|(c, _)| fibre.contains(c))
                    .map(|(c, n)| self.component(c).unwrap().multiplicity * n)
                    .sum();
                if total != s.degree {
                    bad.push(format!(
                        "{}·F = {total} on the fibre of {} but its degree is {}",
                        s.name, fibre[0], s.degree
                    ));
                }
            }
        }
        bad
    }

    /// `p_a` of the reduced curve `Σ C_i` from `2 p_a - 2 = 2 Σ_{i<j} C_i·C_j + Σ (2 g_i - 2)`.
    pub fn arithmetic_genus_reduced(&self, names: &[&str]) -> Result<i64> {
        let idx: Vec<usize> = names.iter().map(|n| self.index(n)).collect::<Result<_>>()?;
        let unique: BTreeSet<usize> = idx.iter().copied().collect();
        if unique.len() != idx.len() || idx.is_empty() {
            return Err(graph_err("components must be distinct and nonempty"));
        }
        let m = self.matrix();
        if components_of(&m, &idx).len() != 1 {
            return Err(graph_err(format!("{names:?} is not connected")));
        }
        let mut twice = 0;
        for (a, &i) in idx.iter().enumerate() {
            twice += 2 * self.components[i].genus - 2;
            for &j in &idx[a + 1..] {
                twice += 2 * m[i][j];
            }
        }
        Ok((twice + 2) / 2)
    }

    /// Blows down a (-1)-curve `E`: `C·D ↦ C·D + (C·E)(D·E)` for all remaining
    /// curves, sections included.
    pub fn contract_curve(&self, name: &str) -> Result<FibreGraph> {
        let e = self.index(name)?;
        let ce = &self.components[e];
        if ce.self_intersection != Some(-1) || ce.genus != 0 {
            return Err(graph_err(format!(
                "{name} is not a rational (-1)-curve (genus {}, self-intersection {:?})",
                ce.genus, ce.self_intersection
            )));
        }
        let m = self.matrix();
        let keep: Vec<usize> = (0..m.len()).filter(|&i| i != e).collect();
        let mut components = Vec::new();
        let mut nm = vec![vec![0; keep.len()]; keep.len()];
        for (a, &i) in keep.iter().enumerate() {
            let mut c = self.components[i].clone();
            c.self_intersection = c.self_intersection.map(|v| v + m[i][e] * m[i][e]);
            components.push(c);
            for (b, &j) in keep.iter().enumerate() {
                if a != b {
                    nm[a][b] = m[i][j] + m[i][e] * m[j][e];
                }
            }
        }
        let sections = self
            .sections
            .iter()
            .map(|s| {
                let se: i64 = s.meets.iter().filter(|(c, _)| c == name).map(|(_, n)| n).sum();
                let mut meets: BTreeMap<String, i64> = BTreeMap::new();
                for (c, n) in &s.meets {
                    if c != name {
                        *meets.entry(c.clone()).or_default() += n;
                    }
                }
                if se != 0 {
                    for &i in &keep {
                        if m[i][e] != 0 {
                            *meets.entry(self.components[i].name.clone()).or_default() += se * m[i][e];
                        }
                    }
                }
                let order = |c: &String| self.index(c).unwrap();
                let mut meets: Vec<(String, i64)> = meets.into_iter().filter(|(_, n)| *n != 0).collect();
                meets.sort_by_key(|(c, _)| order(c));
                Section { name: s.name.clone(), degree: s.degree, meets }
            })
            .collect();
        let out = self.rebuild(components, &nm, sections);
        let bad = out.fibre_relation_violations();
        if !bad.is_empty() {
            return Err(graph_err(format!("after contracting {name}: {}", bad.join(", "))));
        }
        Ok(out)
    }

    /// No rational component with self-intersection -1.
    pub fn check_minimal(&self) -> bool {
        !self.components.iter().any(|c| c.genus == 0 && c.self_intersection == Some(-1))
    }

    /// The rational (-1)-curves among the components.
    pub fn exceptional_curves(&self) -> Vec<String> {
        self.components
            .iter()
            .filter(|c| c.genus == 0 && c.self_intersection == Some(-1))
            .map(|c| c.name.clone())
            .collect()
    }

    /// The restriction to the named components, keeping only sections'
    /// incidences with them.
    pub fn restrict(&self, names: &[String]) -> Result<FibreGraph> {
        let idx: Vec<usize> = names.iter().map(|n| self.index(n)).collect::<Result<_>>()?;
        let m = self.matrix();
        let components = idx.iter().map(|&i| self.components[i].clone()).collect();
        let sub: Vec<Vec<i64>> = idx.iter().map(|&i| idx.iter().map(|&j| m[i][j]).collect()).collect();
        let sections = self
            .sections
            .iter()
            .map(|s| Section {
                name: s.name.clone(),
                degree: s.degree,
                meets: s.meets.iter().filter(|(c, _)| names.contains(c)).cloned().collect(),
            })
            .collect();
        Ok(self.rebuild(components, &sub, sections))
    }
}

/// Connected components of the subgraph on `nodes`, each in input order.
fn components_of(m: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in nodes {
        if seen.contains(&start) {
            continue;
        }
        let mut part = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in nodes {
                if m[i][j] != 0 && part.insert(j) {
                    stack.push(j);
                }
            }
        }
        seen.extend(part.iter().copied());
        out.push(nodes.iter().copied().filter(|i| part.contains(i)).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> FibreGraph {
        FibreGraph::from_json(
            r#"{"name": "chain", "components": [
                {"name": "C1", "multiplicity": 1}, {"name": "C2", "multiplicity": 1}],
                "intersections": [["C1", "C2", 2]]}"#,
        )
        .unwrap()
    }

    #[test]
    fn schema_errors_are_graph_errors() {
        for bad in [
            "{}",
            r#"{"name": "x", "components": [{"name": "A", "multiplicity": 0}], "intersections": []}"#,
            r#"{"name": "x", "components": [{"name": "A", "multiplicity": 1}], "intersections": [["A", "B", 1]]}"#,
            r#"{"name": "x", "components": [{"name": "A", "multiplicity": 1}], "intersections": [["A", "A", 1]]}"#,
        ] {
            assert!(matches!(FibreGraph::from_json(bad), Err(Error::Graph(_))), "{bad}");
        }
    }

    #[test]
    fn two_curves_meeting_twice() {
        let g = chain().solve_self_intersections().unwrap();
        assert_eq!(g.intersection("C1", "C1").unwrap(), Some(-2));
        assert!(g.fibre_relation_violations().is_empty());
        assert_eq!(g.arithmetic_genus_reduced(&["C1", "C2"]).unwrap(), 1);
        assert!(g.check_minimal());
    }

    #[test]
    fn non_integral_solution_is_rejected() {
        let g = FibreGraph::from_json(
            r#"{"name": "x", "components": [{"name": "A", "multiplicity": 2}, {"name": "B", "multiplicity": 1}],
                "intersections": [["A", "B", 1]]}"#,
        )
        .unwrap();
        assert!(matches!(g.solve_self_intersections(), Err(Error::Graph(_))));
    }

    #[test]
    fn blowdown_of_a_minus_one_curve() {
        // a triangle A, B, C with the node A∩B blown up to E
        let g = FibreGraph::from_json(
            r#"{"name": "x", "components": [
                {"name": "A", "multiplicity": 1}, {"name": "E", "multiplicity": 2}, {"name": "B", "multiplicity": 1},
                {"name": "C", "multiplicity": 1}],
                "intersections": [["A", "E", 1], ["E", "B", 1], ["A", "C", 1], ["B", "C", 1]],
                "sections": [{"name": "s", "degree": 2, "meets": [["E", 1]]}]}"#,
        )
        .unwrap()
        .solve_self_intersections()
        .unwrap();
        assert_eq!(g.component("E").unwrap().self_intersection, Some(-1));
        let h = g.contract_curve("E").unwrap();
        assert_eq!(h.intersection("A", "B").unwrap(), Some(1));
        assert!(h.section_degree_violations().is_empty());
        assert!(matches!(h.contract_curve("A"), Err(Error::Graph(_))));
    }
}
