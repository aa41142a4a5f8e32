//! Per-lemma verification records.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// `status` is derived: `fail` exactly when a counterexample was recorded.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub lemma_id: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub witnesses: Vec<Value>,
    pub counterexamples: Vec<Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degree_bounds: Vec<Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub search_counts: Vec<Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall-clock seconds; only filled on request so JSON stays reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_seconds: Option<f64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub struct ReportBuilder {
    report: VerificationReport,
    inconclusive: bool,
}

impl ReportBuilder {
    pub fn new(lemma_id: &str) -> Self {
        Self {
            report: VerificationReport {
                lemma_id: lemma_id.into(),
                params: BTreeMap::new(),
                status: Status::Pass,
                witnesses: Vec::new(),
                counterexamples: Vec::new(),
                degree_bounds: Vec::new(),
                search_counts: Vec::new(),
                notes: Vec::new(),
                timing_seconds: None,
            },
            inconclusive: false,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.report.params.insert(key.into(), to_value(value));
        self
    }

    pub fn witness(&mut self, value: impl Serialize) -> &mut Self {
        self.report.witnesses.push(to_value(value));
        self
    }

    pub fn counterexample(&mut self, value: impl Serialize) -> &mut Self {
        self.report.counterexamples.push(to_value(value));
        self
    }

    /// Records a counterexample unless `ok`.
    pub fn require(&mut self, ok: bool, value: impl Serialize) -> &mut Self {
        if !ok {
            self.counterexample(value);
        }
        self
    }

    pub fn error(&mut self, context: &str, err: impl std::fmt::Display) -> &mut Self {
        self.counterexample(serde_json::json!({ "context": context, "error": err.to_string() }))
    }

    pub fn degree_bound(&mut self, value: impl Serialize) -> &mut Self {
        self.report.degree_bounds.push(to_value(value));
        self
    }

    pub fn search_count(&mut self, value: impl Serialize) -> &mut Self {
        self.report.search_counts.push(to_value(value));
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.report.notes.push(note.into());
        self
    }

    pub fn inconclusive(&mut self, reason: impl Into<String>) -> &mut Self {
        self.inconclusive = true;
        self.note(reason)
    }

    pub fn finish(mut self) -> VerificationReport {
        self.report.status = if !self.report.counterexamples.is_empty() {
            Status::Fail
        } else if self.inconclusive {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        self.report
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_counterexamples() {
        let mut b = ReportBuilder::new("x");
        b.witness(1).require(true, "never");
        assert_eq!(b.finish().status, Status::Pass);
        let mut b = ReportBuilder::new("x");
        b.require(false, "bad");
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexamples.len(), 1);
        let mut b = ReportBuilder::new("x");
        b.inconclusive("retry bound hit");
        assert_eq!(b.finish().status, Status::Inconclusive);
    }
}
