use serde::{Deserialize, Serialize};

/// The checked result of one claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub claim: String,
    pub predicate: String,
    pub expected: String,
    pub computed: String,
    pub witness: Option<String>,
    pub algebra_relative: bool,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    pub duration_ms: Option<u64>,
}

/// Outcomes for one catalog entry, user file or theorem suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entry: String,
    pub outcomes: Vec<ClaimOutcome>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn status(&self) -> &'static str {
        if self.failed == 0 {
            "pass"
        } else {
            "fail"
        }
    }
}

impl Report {
    pub fn new(entry: impl Into<String>) -> Self {
        Report {
            entry: entry.into(),
            outcomes: Vec::new(),
        }
    }

    pub fn summary(&self) -> Summary {
        let passed = self.outcomes.iter().filter(|o| o.passed).count();
        Summary {
            passed,
            failed: self.outcomes.len() - passed,
        }
    }

    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    /// Drop timing data so reports compare byte for byte.
    pub fn without_timings(mut self) -> Self {
        for o in &mut self.outcomes {
            o.duration_ms = None;
        }
        self
    }
}
