use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::partition::Partition;

/// One violated identity, with enough data to re-check it by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub alpha: Partition,
    pub beta: Option<Partition>,
    pub expected: String,
    pub actual: String,
    /// Every method's or side's value, keyed by label.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
}

impl Failure {
    pub fn new(alpha: &Partition, beta: Option<&Partition>, expected: impl ToString, actual: impl ToString) -> Self {
        Failure {
            alpha: alpha.clone(),
            beta: beta.cloned(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            values: BTreeMap::new(),
        }
    }

    pub fn with_values(mut self, values: BTreeMap<String, String>) -> Self {
        self.values = values;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub alpha: Partition,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub universe: String,
    pub tested: usize,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skipped>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    check: &'a str,
    universe: &'a str,
    status: &'static str,
    tested: usize,
    failures: &'a [Failure],
    skipped: &'a [Skipped],
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, universe: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            universe: universe.into(),
            tested: 0,
            failures: Vec::new(),
            skipped: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_json_value(&self, timings: bool) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            check: &self.check,
            universe: &self.universe,
            status: self.status(),
            tested: self.tested,
            failures: &self.failures,
            skipped: &self.skipped,
            elapsed_ms: timings.then_some(self.elapsed.as_millis()),
        })
        .expect("report serializes")
    }

    /// Human-readable rendering; deterministic unless `timings` is set.
    pub fn render_text(&self, timings: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "check: {}", self.check);
        let _ = writeln!(s, "universe: {}", self.universe);
        let _ = writeln!(s, "status: {}", self.status());
        let _ = writeln!(s, "tested: {}", self.tested);
        let _ = writeln!(s, "failures: {}", self.failures.len());
        let _ = writeln!(s, "skipped: {}", self.skipped.len());
        if timings {
            let _ = writeln!(s, "elapsed_ms: {}", self.elapsed.as_millis());
        }
        for f in &self.failures {
            let _ = write!(s, "  FAIL alpha={}", f.alpha);
            if let Some(b) = &f.beta {
                let _ = write!(s, " beta={b}");
            }
            let _ = write!(s, " expected={} actual={}", f.expected, f.actual);
            for (k, v) in &f.values {
                let _ = write!(s, " {k}={v}");
            }
            s.push('\n');
        }
        for k in &self.skipped {
            let _ = writeln!(s, "  SKIP alpha={} ({})", k.alpha, k.reason);
        }
        s
    }
}
