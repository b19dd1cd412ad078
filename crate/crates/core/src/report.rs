//! Suite reports: a fixed-width text table and a JSON document.
//!
//! Everything except the `elapsed_ms` and `total_ms` fields is a pure
//! function of the grid bounds.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::exprio::print;
use crate::identities::{IdentityError, IdentityId, Outcome, Params, VerificationResult};

/// Readings of the identity statements that the builders commit to.
pub const READINGS: &[(&str, &str)] =
    &[("E5", "built with right-hand exponent n+1 on both factors"), ("E33", "sum over l runs from 0 to n+1")];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub max_n: u32,
    pub max_p: u32,
    pub max_m: u32,
    pub readings: Vec<Reading>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Reading {
    pub id: &'static str,
    pub note: &'static str,
}

impl SuiteConfig {
    pub fn new(max_n: u32, max_p: u32, max_m: u32) -> Self {
        let readings = READINGS.iter().map(|&(id, note)| Reading { id, note }).collect();
        SuiteConfig { max_n, max_p, max_m, readings }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResultRow {
    pub id: IdentityId,
    pub params: Params,
    pub status: Outcome,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub rewrite_steps: u64,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub expected_fail: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub expected_fail: usize,
    pub total_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub version: String,
    pub config: SuiteConfig,
    pub results: Vec<ResultRow>,
    pub summary: Summary,
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

impl ResultRow {
    pub fn from_result(res: &VerificationResult) -> Self {
        ResultRow {
            id: res.id,
            params: res.params,
            status: res.outcome(),
            lhs_terms: res.lhs_terms,
            rhs_terms: res.rhs_terms,
            rewrite_steps: res.rewrite_steps,
            elapsed_ms: millis(res.elapsed),
            residual: (!res.residual.is_zero()).then(|| print(&res.residual)),
            error: None,
        }
    }

    pub fn from_error(id: IdentityId, params: Params, err: &IdentityError) -> Self {
        ResultRow {
            id,
            params,
            status: Outcome::Fail,
            lhs_terms: 0,
            rhs_terms: 0,
            rewrite_steps: 0,
            elapsed_ms: 0.0,
            residual: None,
            error: Some(err.to_string()),
        }
    }
}

impl SuiteReport {
    /// `grid` and `results` are parallel slices.
    pub fn new(
        config: SuiteConfig,
        grid: &[(IdentityId, Params)],
        results: &[Result<VerificationResult, IdentityError>],
        total: Duration,
    ) -> Self {
        let results: Vec<ResultRow> = grid
            .iter()
            .zip(results)
            .map(|((id, params), r)| match r {
                Ok(res) => ResultRow::from_result(res),
                Err(e) => ResultRow::from_error(*id, *params, e),
            })
            .collect();
        let tally = tally(&results);
        SuiteReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            summary: Summary {
                pass: tally.pass,
                fail: tally.fail,
                expected_fail: tally.expected_fail,
                total_ms: millis(total),
            },
            results,
        }
    }

    pub fn has_unexpected_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<8} {:<16} {:<14} {:>6} {:>6} {:>9} {:>10}",
            "id", "params", "status", "lhs", "rhs", "steps", "ms"
        );
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:<8} {:<16} {:<14} {:>6} {:>6} {:>9} {:>10.3}",
                r.id.as_str(),
                r.params.to_string(),
                r.status.as_str(),
                r.lhs_terms,
                r.rhs_terms,
                r.rewrite_steps,
                r.elapsed_ms
            );
            if let Some(e) = &r.error {
                let _ = writeln!(out, "    error: {e}");
            }
        }
        for reading in &self.config.readings {
            let _ = writeln!(out, "note: {} {}", reading.id, reading.note);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} expected-fail, {:.1} ms",
            s.pass, s.fail, s.expected_fail, s.total_ms
        );
        out
    }
}

pub fn tally(rows: &[ResultRow]) -> Tally {
    let mut t = Tally::default();
    for r in rows {
        match r.status {
            Outcome::Pass => t.pass += 1,
            Outcome::Fail => t.fail += 1,
            Outcome::ExpectedFail => t.expected_fail += 1,
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{suite_grid, verify_suite};

    fn small_report() -> SuiteReport {
        let grid = suite_grid(1, 1, 2);
        let results = verify_suite(&grid);
        SuiteReport::new(SuiteConfig::new(1, 1, 2), &grid, &results, Duration::from_millis(5))
    }

    #[test]
    fn summary_matches_rows() {
        let rep = small_report();
        let t = tally(&rep.results);
        assert_eq!((t.pass, t.fail, t.expected_fail), (rep.summary.pass, rep.summary.fail, rep.summary.expected_fail));
        assert_eq!(rep.summary.fail, 0);
        assert_eq!(rep.summary.expected_fail, 1);
        assert!(!rep.has_unexpected_failures());
    }

    #[test]
    fn json_shape() {
        let v: serde_json::Value = serde_json::from_str(&small_report().to_json()).unwrap();
        for key in ["version", "config", "results", "summary"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        let eps = v["results"].as_array().unwrap().iter().find(|r| r["id"] == "E2EPS").unwrap();
        assert_eq!(eps["status"], "expected-fail");
        assert_eq!(eps["params"]["n"], 1);
        assert!(eps["residual"].as_str().unwrap().contains("eps"));
        let e2 = v["results"].as_array().unwrap().iter().find(|r| r["id"] == "E2").unwrap();
        assert_eq!(e2["status"], "pass");
        assert!(e2.get("residual").is_none());
    }

    #[test]
    fn text_table_has_a_row_per_result() {
        let rep = small_report();
        let text = rep.to_text();
        assert_eq!(
            text.lines().filter(|l| l.starts_with('E') || l.starts_with('F') || l.starts_with("BB")).count(),
            rep.results.len()
        );
        assert!(text.contains("expected-fail"));
    }
}
