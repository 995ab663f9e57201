//! Structured verdicts with stable text and JSON renderings.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::invariants::PoincareSeries;
use crate::LieGroup;

/// One named check with its outcome and a short human-readable detail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Full verification report. The JSON field order is part of the output
/// contract: group, m, series, checks, dimension_table.
///
/// Each dimension table row is `[degree, invariant, presented, span]`: the
/// invariant dimension, the dimension of the abstractly presented algebra and
/// the dimension spanned by generator products, all in that degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub group: LieGroup,
    pub m: usize,
    pub series: PoincareSeries,
    pub checks: Vec<CheckResult>,
    pub dimension_table: Vec<[usize; 4]>,
}

impl PresentationReport {
    /// True exactly when every check passed and the dimension table columns
    /// agree in every degree.
    pub fn verdict(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.table_agrees()
    }

    pub fn table_agrees(&self) -> bool {
        self.dimension_table
            .iter()
            .all(|row| row[1] == row[2] && row[1] == row[3])
    }

    pub fn failing_checks(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        if !self.table_agrees() {
            names.push("dimension table");
        }
        names
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

impl fmt::Display for PresentationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.group)?;
        writeln!(f, "m: {}", self.m)?;
        let coeffs: Vec<String> = self
            .series
            .coefficients()
            .iter()
            .map(usize::to_string)
            .collect();
        writeln!(f, "series: {}", coeffs.join(" "))?;
        writeln!(f, "poincare polynomial: {}", self.series)?;
        if !self.checks.is_empty() {
            writeln!(f, "checks:")?;
            for check in &self.checks {
                let mark = if check.pass { "pass" } else { "FAIL" };
                writeln!(f, "  [{mark}] {} — {}", check.name, check.detail)?;
            }
        }
        if !self.dimension_table.is_empty() {
            writeln!(f, "dimension table (degree: invariant presented span):")?;
            for row in &self.dimension_table {
                writeln!(
                    f,
                    "  {:>3}: {:>2} {:>2} {:>2}",
                    row[0], row[1], row[2], row[3]
                )?;
            }
            let verdict = if self.verdict() { "PASS" } else { "FAIL" };
            writeln!(f, "verdict: {verdict}")?;
        }
        Ok(())
    }
}

/// Dump of one echelonized invariant basis, for the `invariants` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub group: LieGroup,
    pub m: usize,
    pub degree: usize,
    pub dimension: usize,
    pub basis: Vec<String>,
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.group)?;
        writeln!(f, "m: {}", self.m)?;
        writeln!(f, "degree: {}", self.degree)?;
        writeln!(f, "dimension: {}", self.dimension)?;
        writeln!(f, "basis:")?;
        for elem in &self.basis {
            writeln!(f, "  {elem}")?;
        }
        Ok(())
    }
}
