//! Structural checks on a declared correspondence between the fibre
//! components of a surface and those of a surface it covers.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::FibreGraph;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionMap {
    pub source: String,
    pub target: String,
    /// Degree of the induced map between the two sections.
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverCorrespondence {
    pub name: String,
    /// Source curves mapped isomorphically onto target curves, as `[source, target]`.
    pub components: Vec<(String, String)>,
    /// Source names that do not denote a component of the source graph.
    #[serde(default)]
    pub unresolved_source_names: Vec<String>,
    /// Connected bunches of source curves contracted to points.
    #[serde(default)]
    pub contracted: Vec<Vec<String>>,
    /// Target components that no source curve covers.
    pub uncovered: Vec<String>,
    pub sections: Vec<SectionMap>,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl CoverCorrespondence {
    pub fn from_json(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Graph(format!("schema: {e}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCheck {
    pub id: String,
    pub passed: bool,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub checks: Vec<CoverCheck>,
    pub passed: bool,
}

impl CoverReport {
    pub fn check(&self, id: &str) -> Option<&CoverCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

fn check(id: &str, violations: Vec<String>) -> CoverCheck {
    CoverCheck { id: id.to_string(), passed: violations.is_empty(), violations }
}

pub fn validate_cover_map(data: &CoverCorrespondence, source: &FibreGraph, target: &FibreGraph) -> CoverReport {
    let unresolved: BTreeSet<&str> = data.unresolved_source_names.iter().map(String::as_str).collect();
    let mut names = Vec::new();
    for (s, t) in &data.components {
        if source.component(s).is_none() && !unresolved.contains(s.as_str()) {
            names.push(format!("{s} is not a source component"));
        }
        if target.component(t).is_none() {
            names.push(format!("{t} is not a target component"));
        }
    }
    for u in &data.uncovered {
        if target.component(u).is_none() {
            names.push(format!("{u} is not a target component"));
        }
    }

    let mut injective = Vec::new();
    let mut seen_s = BTreeSet::new();
    let mut seen_t = BTreeSet::new();
    for (s, t) in &data.components {
        if !seen_s.insert(s) {
            injective.push(format!("{s} is mapped twice"));
        }
        if !seen_t.insert(t) {
            injective.push(format!("{t} is covered twice"));
        }
    }

    let covered: BTreeSet<&str> = data.components.iter().map(|(_, t)| t.as_str()).collect();
    let computed: BTreeSet<&str> =
        target.components.iter().map(|c| c.name.as_str()).filter(|n| !covered.contains(n)).collect();
    let declared: BTreeSet<&str> = data.uncovered.iter().map(String::as_str).collect();
    let mut uncovered = Vec::new();
    for n in computed.difference(&declared) {
        uncovered.push(format!("{n} is uncovered but not declared"));
    }
    for n in declared.difference(&computed) {
        uncovered.push(format!("{n} is declared uncovered but has a preimage"));
    }

    let mut bunches = Vec::new();
    for bunch in &data.contracted {
        let refs: Vec<&str> = bunch.iter().map(String::as_str).collect();
        match source.arithmetic_genus_reduced(&refs) {
            Ok(_) => {}
            Err(e) => bunches.push(format!("{bunch:?}: {e}")),
        }
        for b in bunch {
            if seen_s.contains(b) {
                bunches.push(format!("{b} is both contracted and mapped onto a curve"));
            }
        }
    }

    let mut sections = Vec::new();
    for m in &data.sections {
        let s = source.sections.iter().find(|s| s.name == m.source);
        let t = target.sections.iter().find(|s| s.name == m.target);
        match (s, t) {
            (Some(s), Some(t)) => {
                if s.degree != m.degree * t.degree {
                    sections.push(format!(
                        "{} has degree {} over the base, but {} x deg {} = {}",
                        s.name,
                        s.degree,
                        m.degree,
                        t.name,
                        m.degree * t.degree
                    ));
                }
            }
            _ => sections.push(format!("unknown section in {} -> {}", m.source, m.target)),
        }
    }
    for g in [source, target] {
        sections.extend(g.section_degree_violations());
    }

    let checks = vec![
        check("names", names),
        check("injective", injective),
        check("uncovered-set", uncovered),
        check("contracted-bunches", bunches),
        check("section-degrees", sections),
    ];
    let passed = checks.iter().all(|c| c.passed);
    CoverReport { checks, passed }
}
