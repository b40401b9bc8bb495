//! Verification reports: per-identity tallies of exact checks with every
//! failure recorded as the exact values of both sides.

use std::fmt;

use model_zoo::IdentityCheck;
use serde_json::json;

/// One failed check: where it happened and the exact values of both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

/// Tally of one verified identity. A report passes when at least one check
/// ran and none failed; a report with zero checks carries a warning and
/// does not pass.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: String,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
            warnings: Vec::new(),
        }
    }

    /// Records one exact comparison.
    pub fn record<T: PartialEq + fmt::Display>(&mut self, location: impl Into<String>, lhs: &T, rhs: &T) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                location: location.into(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// Records a pre-evaluated identity instance.
    pub fn record_identity(&mut self, check: &IdentityCheck) {
        let loc = format!("{} at n={}", check.name, check.index);
        self.record(loc, &check.lhs, &check.rhs);
    }

    /// Records a check whose success was established by construction (for
    /// example an exact division that did not fail).
    pub fn record_ok(&mut self) {
        self.checked += 1;
    }

    /// Records a failure with a free-form description of both sides.
    pub fn record_failure(&mut self, location: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) {
        self.checked += 1;
        self.failures.push(Failure {
            location: location.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        });
    }

    /// Records that an instance could not be evaluated (missing labels).
    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    /// Appends the zero-checks warning if nothing was verified.
    pub fn finish(mut self) -> Self {
        if self.checked == 0 {
            self.warn("no checks were performed (every instance was skipped)");
        }
        self
    }

    pub fn pass(&self) -> bool {
        self.checked > 0 && self.failures.is_empty()
    }
}

/// JSON form of one report.
pub fn report_to_json(r: &VerificationReport) -> serde_json::Value {
    json!({
        "identity": r.identity,
        "pass": r.pass(),
        "checked": r.checked,
        "skipped": r.skipped,
        "failures": r
            .failures
            .iter()
            .map(|f| json!({ "location": f.location, "lhs": f.lhs, "rhs": f.rhs }))
            .collect::<Vec<_>>(),
        "warnings": r.warnings,
    })
}

/// JSON form of a report batch, with the overall verdict first.
pub fn reports_to_json(rs: &[VerificationReport]) -> serde_json::Value {
    json!({
        "pass": rs.iter().all(|r| r.pass()),
        "reports": rs.iter().map(report_to_json).collect::<Vec<_>>(),
    })
}
