//! Verification suites behind the command-line front end.
//!
//! Every suite is a list of named checks; reports are sorted by check id so
//! that the output depends only on the configuration.

mod delta;
mod intersection;
mod series;
mod symbolic;
mod torsion;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "report-v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl CheckResult {
    pub fn new(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        CheckResult { id: id.into(), status, detail: detail.into() }
    }

    pub fn skip(id: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult { id: id.into(), status: Status::Skip, detail: detail.into() }
    }

    fn from_result(id: &str, r: crate::Result<(bool, String)>) -> Self {
        match r {
            Ok((ok, detail)) => CheckResult::new(id, ok, detail),
            Err(e) => CheckResult::new(id, false, format!("error: {e}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub k: u8,
    pub seed: u64,
    pub prec: i64,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    pub exit_status: i32,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    pub data: serde_json::Value,
}

impl Report {
    pub fn new(command: impl Into<String>, cfg: &SuiteConfig, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
            }
        }
        Report {
            schema: REPORT_SCHEMA.to_string(),
            command: command.into(),
            k: cfg.k,
            seed: cfg.seed,
            prec: cfg.prec,
            checks,
            exit_status: if summary.fail == 0 { 0 } else { 1 },
            summary,
            data: serde_json::Value::Null,
        }
    }

    pub fn with_data(mut self, data: serde_json::Value) -> Self {
        self.data = data;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} (k = {}, seed = {}, prec = {})\n",
            self.command, self.k, self.seed, self.prec
        );
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out.push_str(&format!("{tag} {}: {}\n", c.id, c.detail));
        }
        if !self.data.is_null() {
            out.push_str(&serde_json::to_string_pretty(&self.data).expect("json"));
            out.push('\n');
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped\n",
            self.summary.pass, self.summary.fail, self.summary.skip
        ));
        out
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub k: u8,
    pub seed: u64,
    pub prec: i64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { k: 2, seed: 0, prec: 12 }
    }
}

impl SuiteConfig {
    /// A generator for one check, independent of scheduling order.
    pub(crate) fn rng(&self, check: &str) -> ChaCha8Rng {
        // FNV-1a keeps per-check streams stable across platforms and releases
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in check.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Symbolic,
    Series,
    Torsion,
    Delta,
    Intersection,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["all", "symbolic", "series", "torsion", "delta", "intersection"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Series, Suite::Torsion, Suite::Delta, Suite::Symbolic, Suite::Intersection],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Suite::All, Suite::Symbolic, Suite::Series, Suite::Torsion, Suite::Delta, Suite::Intersection]
            .iter()
            .position(|s| s == self)
            .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

impl FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "symbolic" => Suite::Symbolic,
            "series" => Suite::Series,
            "torsion" => Suite::Torsion,
            "delta" => Suite::Delta,
            "intersection" => Suite::Intersection,
            other => {
                return Err(crate::Error::Parse(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

type Check = (&'static str, fn(&SuiteConfig) -> Vec<CheckResult>);

fn checks_of(suite: Suite) -> &'static [Check] {
    match suite {
        Suite::Series => series::CHECKS,
        Suite::Torsion => torsion::CHECKS,
        Suite::Delta => delta::CHECKS,
        Suite::Symbolic => symbolic::CHECKS,
        Suite::Intersection => intersection::CHECKS,
        Suite::All => &[],
    }
}

/// Runs a suite; fails on field degrees above 16.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> crate::Result<Report> {
    if cfg.k == 0 || cfg.k > 16 {
        return Err(crate::Error::Unsupported(format!("field degree {} outside 1..=16", cfg.k)));
    }
    let groups: Vec<&Check> = suite.parts().into_iter().flat_map(checks_of).collect();
    let checks: Vec<CheckResult> = groups.par_iter().flat_map(|(_, f)| f(cfg)).collect();
    Ok(Report::new(format!("verify {suite}"), cfg, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nosuch".parse::<Suite>().is_err());
    }

    #[test]
    fn report_round_trips_through_json() {
        let cfg = SuiteConfig::default();
        let r = Report::new("t", &cfg, vec![CheckResult::new("b", true, ""), CheckResult::new("a", false, "x")]);
        assert_eq!(r.checks[0].id, "a");
        assert_eq!(r.exit_status, 1);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
