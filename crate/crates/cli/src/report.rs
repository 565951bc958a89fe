use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use twistlab_core::twistcore::{CheckReport, Failure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub case: String,
    pub witness: String,
    pub expected: String,
    pub got: String,
}

impl From<Failure> for FailureRecord {
    fn from(f: Failure) -> Self {
        FailureRecord {
            case: f.case,
            witness: f.witness,
            expected: f.expected,
            got: f.got,
        }
    }
}

/// Output of one verification suite. Field order is the serialized order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub cases: usize,
    pub failures: Vec<FailureRecord>,
    pub certificates: BTreeMap<String, i64>,
    pub max_gap: Option<f64>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(suite: &str, seed: u64, samples: usize) -> Report {
        Report {
            suite: suite.to_string(),
            seed,
            samples,
            cases: 0,
            failures: Vec::new(),
            certificates: BTreeMap::new(),
            max_gap: None,
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, check: CheckReport) {
        self.cases += check.cases;
        self.failures
            .extend(check.failures.into_iter().map(FailureRecord::from));
    }

    pub fn fail(&mut self, case: &str, witness: String, expected: String, got: String) {
        self.failures.push(FailureRecord {
            case: case.to_string(),
            witness,
            expected,
            got,
        });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {}: {} cases, {} failures",
            self.suite,
            self.cases,
            self.failures.len()
        );
        if let Some(g) = self.max_gap {
            line.push_str(&format!(", max_gap {g:.3e}"));
        }
        line
    }
}
