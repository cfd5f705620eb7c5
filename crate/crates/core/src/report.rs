//! Machine-readable outcome of a single necessary-condition test.

use serde::{Deserialize, Serialize};

use crate::exactalg::rational::{self, Rational};
use crate::exactalg::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    /// Aggregate verdict: any failure fails, otherwise any inconclusive is
    /// inconclusive.
    pub fn combine(self, other: Verdict) -> Verdict {
        self.max(other)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// A named exact value backing a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    #[serde(with = "rational::as_string")]
    pub value: Rational,
}

/// One instantiated inequality `lhs >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub inequality: String,
    #[serde(with = "rational::as_string")]
    pub lhs: Rational,
    #[serde(with = "rational::as_string")]
    pub rhs: Rational,
    pub holds: bool,
}

impl InequalityCheck {
    pub fn new(inequality: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs >= rhs;
        InequalityCheck { inequality: inequality.into(), lhs, rhs, holds }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestReport {
    pub test: String,
    pub verdict: Verdict,
    /// Least index at which the test is violated; set iff the verdict is a fail.
    pub first_violation: Option<usize>,
    pub witness: Vec<Witness>,
    pub inequalities: Vec<InequalityCheck>,
    /// Every violated index, filled only in exhaustive mode.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub all_violations: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub series: Option<TruncatedSeries>,
}

impl TestReport {
    pub fn pass(test: impl Into<String>) -> Self {
        TestReport {
            test: test.into(),
            verdict: Verdict::Pass,
            first_violation: None,
            witness: Vec::new(),
            inequalities: Vec::new(),
            all_violations: Vec::new(),
            warnings: Vec::new(),
            notes: Vec::new(),
            series: None,
        }
    }

    /// Records a violation at `index`; the first one recorded wins.
    pub fn violate(&mut self, index: usize, label: impl Into<String>, value: Rational) {
        if self.first_violation.is_none() {
            self.verdict = Verdict::Fail;
            self.first_violation = Some(index);
            self.witness.push(Witness { label: label.into(), value });
        }
        if !self.all_violations.contains(&index) {
            self.all_violations.push(index);
        }
    }

    pub fn with_inequality(&mut self, check: InequalityCheck) {
        self.inequalities.push(check);
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Drops the exhaustive violation list unless requested.
    pub fn finish(mut self, exhaustive: bool) -> Self {
        if !exhaustive {
            self.all_violations.clear();
        }
        self
    }
}
