//! Counters for sweep checks and their conversion into report lines.

use crate::catalog::ClaimOutcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Must never be violated.
    Law,
    /// Looks for an instance; finding one or not is recorded, never failed.
    Search,
}

#[derive(Debug, Clone, Copy)]
pub struct CheckSpec {
    pub suite: &'static str,
    pub id: &'static str,
    pub kind: CheckKind,
    pub statement: &'static str,
}

pub const fn law(suite: &'static str, id: &'static str, statement: &'static str) -> CheckSpec {
    CheckSpec {
        suite,
        id,
        kind: CheckKind::Law,
        statement,
    }
}

pub const fn search(suite: &'static str, id: &'static str, statement: &'static str) -> CheckSpec {
    CheckSpec {
        suite,
        id,
        kind: CheckKind::Search,
        statement,
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    /// Laws: instances where the hypothesis held. Searches: candidates seen.
    pub checked: u64,
    /// Laws: violations. Searches: instances found.
    pub hits: u64,
    /// The first hit in sweep order.
    pub first: Option<String>,
}

impl Tally {
    /// Records one instance of `hypothesis ⇒ conclusion`.
    pub fn law(&mut self, hypothesis: bool, conclusion: bool, describe: impl FnOnce() -> String) {
        if hypothesis {
            self.add(1, !conclusion, describe);
        }
    }

    /// Records `weight` identical instances in one go.
    pub fn add(&mut self, weight: u64, hit: bool, describe: impl FnOnce() -> String) {
        self.checked += weight;
        if hit {
            self.hits += weight;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    pub fn search(&mut self, found: bool, describe: impl FnOnce() -> String) {
        self.add(1, found, describe);
    }

    /// Appends a later shard; the earlier shard's first hit wins.
    pub fn merge(&mut self, later: Tally) {
        self.checked += later.checked;
        self.hits += later.hits;
        if self.first.is_none() {
            self.first = later.first;
        }
    }
}

/// Merges per-shard tally vectors in shard order.
pub fn merge_all(shards: Vec<Vec<Tally>>, width: usize) -> Vec<Tally> {
    let mut total = vec![Tally::default(); width];
    for shard in shards {
        for (acc, t) in total.iter_mut().zip(shard) {
            acc.merge(t);
        }
    }
    total
}

pub fn outcome(spec: &CheckSpec, tally: &Tally, scope: &str) -> ClaimOutcome {
    let (predicate, expected, computed, passed) = match spec.kind {
        CheckKind::Law => (
            "law",
            "0 violations".to_string(),
            format!("{} violations in {} instances", tally.hits, tally.checked),
            tally.hits == 0,
        ),
        CheckKind::Search => (
            "search",
            "-".to_string(),
            if tally.hits > 0 {
                format!("found in {} of {} candidates", tally.hits, tally.checked)
            } else {
                format!("none among {} candidates {scope}", tally.checked)
            },
            true,
        ),
    };
    ClaimOutcome {
        claim: spec.id.to_string(),
        predicate: predicate.to_string(),
        expected,
        computed,
        witness: tally.first.clone(),
        algebra_relative: false,
        passed,
        note: spec.statement.to_string(),
        duration_ms: None,
    }
}
