//! Verification reports and the ledger of computed-vs-reference comparisons.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    /// Generator names (or other labels) locating the failing instance.
    pub indices: Vec<String>,
    #[serde(rename = "residual-norm-is-zero")]
    pub residual_is_zero: bool,
    pub residual: Value,
}

impl Failure {
    pub fn new(indices: Vec<String>, residual: Value) -> Self {
        Failure {
            indices,
            residual_is_zero: false,
            residual,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub subject: String,
    pub total: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(check: &str, subject: &str) -> Self {
        VerificationReport {
            check: check.to_string(),
            subject: subject.to_string(),
            total: 0,
            failures: Vec::new(),
        }
    }

    /// Build a report from per-instance outcomes in enumeration order.
    pub fn from_outcomes(
        check: &str,
        subject: &str,
        outcomes: impl IntoIterator<Item = Option<Failure>>,
    ) -> Self {
        let mut r = VerificationReport::new(check, subject);
        for o in outcomes {
            r.total += 1;
            r.failures.extend(o);
        }
        r
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.total += other.total;
        self.failures.extend(other.failures);
    }

    pub fn summary(&self) -> String {
        format!(
            "{} [{}]: {}/{} passed",
            self.check,
            self.subject,
            self.total - self.failures.len(),
            self.total
        )
    }
}

/// One comparison between a computed quantity and a transcribed reference.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub topic: String,
    pub computed: String,
    pub reference: String,
    /// `computed / reference` when it is a constant, otherwise `None`.
    pub ratio: Option<String>,
    pub note: String,
}

impl LedgerEntry {
    pub fn agrees(&self) -> bool {
        self.ratio.as_deref() == Some("1")
    }
}
