//! Theorem suites over enumerated finite models, the catalog run, user
//! space files and report emission.
//!
//! A suite is a named group of checks. Laws must never be violated; searches
//! look for instances separating two notions and are recorded either way.

pub mod bispace_suites;
pub mod emit;
pub mod map_suites;
pub mod net_suite;
pub mod spacefile;
pub mod tables;
pub mod tally;

use thiserror::Error;

use crate::catalog::{self, Report};
use crate::exec::Execution;
use crate::finite::MAX_ENUMERATION_POINTS;

pub use emit::{emit_report, emit_reports, parse_machine, Format};
pub use spacefile::{check_user_file, InputError};
use tally::{outcome, CheckSpec, Tally};

/// Suites over bispaces on exactly `n` points.
pub const BISPACE_SUITES: [&str; 12] = [
    "closure-laws",
    "lemma-3.1",
    "C1-iff-C2",
    "inclusions",
    "thm-3.1",
    "thm-3.2",
    "thm-3.3",
    "thm-3.4",
    "thm-3.5",
    "thm-3.6",
    "thm-3.7",
    "remark-3.1",
];

/// Suites over maps between carriers of at most `n` points.
pub const MAP_SUITES: [&str; 11] = [
    "hierarchy",
    "thm-4.1",
    "thm-4.2",
    "thm-4.3",
    "thm-4.4",
    "thm-4.5",
    "thm-4.6",
    "note-4.1",
    "thm-5.1",
    "thm-5.2",
    "thm-5.3",
];

/// Default number of sampled triples when four-point carriers are involved.
pub const DEFAULT_SAMPLES: usize = 20_000;

/// Every suite id, bispace suites first.
pub fn suite_ids() -> Vec<&'static str> {
    BISPACE_SUITES.iter().chain(&MAP_SUITES).copied().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    Exhaustive,
    /// Map triples involving a four-point carrier are drawn at random.
    Sampled {
        seed: u64,
        samples: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: usize,
    pub suites: Vec<String>,
    pub sweep: Sweep,
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("carrier size must be between 1 and {MAX_ENUMERATION_POINTS}, got {0}")]
    Size(usize),
    #[error("unknown suite `{0}`; known suites: {1}")]
    UnknownSuite(String, String),
    #[error("map suites on {0} points sample four-point carriers and need a seed")]
    SeedRequired(usize),
    #[error("a seed only applies to map suites on four points")]
    SeedUnused,
}

impl SuiteConfig {
    /// Builds a config from a suite name (or `all`) and an optional seed.
    /// A seed is accepted exactly when the run samples.
    pub fn new(n: usize, which: &str, seed: Option<u64>, samples: usize, format: Format) -> Result<Self, ConfigError> {
        if n == 0 || n > MAX_ENUMERATION_POINTS {
            return Err(ConfigError::Size(n));
        }
        let suites: Vec<String> = if which == "all" {
            suite_ids().into_iter().map(String::from).collect()
        } else if suite_ids().contains(&which) {
            vec![which.to_string()]
        } else {
            return Err(ConfigError::UnknownSuite(which.to_string(), suite_ids().join(", ")));
        };
        let samples_maps = n > 3 && suites.iter().any(|s| MAP_SUITES.contains(&s.as_str()));
        let sweep = match (samples_maps, seed) {
            (true, Some(seed)) => Sweep::Sampled { seed, samples },
            (true, None) => return Err(ConfigError::SeedRequired(n)),
            (false, Some(_)) => return Err(ConfigError::SeedUnused),
            (false, None) => Sweep::Exhaustive,
        };
        Ok(SuiteConfig {
            n,
            suites,
            sweep,
            format,
        })
    }

    fn wants(&self, checks: &[CheckSpec]) -> bool {
        checks.iter().any(|c| self.suites.iter().any(|s| s == c.suite))
    }
}

fn collect(reports: &mut Vec<Report>, suites: &[String], checks: &[CheckSpec], tallies: &[Tally], scope: &str) {
    for suite in suites {
        let outcomes: Vec<_> = checks
            .iter()
            .zip(tallies)
            .filter(|(c, _)| c.suite == suite)
            .map(|(c, t)| outcome(c, t, scope))
            .collect();
        if !outcomes.is_empty() {
            reports.push(Report {
                entry: suite.clone(),
                outcomes,
            });
        }
    }
}

/// One report per selected suite, in suite-list order.
pub fn run_theorem_suite(config: &SuiteConfig, exec: Execution) -> Vec<Report> {
    let n = config.n;
    let sample = match config.sweep {
        Sweep::Exhaustive => None,
        Sweep::Sampled { seed, samples } => Some((samples, seed)),
    };
    let mut bispace = Vec::new();
    if config.wants(&bispace_suites::CHECKS) {
        let tallies = bispace_suites::sweep(n, exec);
        collect(
            &mut bispace,
            &config.suites,
            &bispace_suites::CHECKS,
            &tallies,
            &format!("on {n} points"),
        );
    }
    let mut maps = Vec::new();
    if config.wants(&map_suites::CHECKS) {
        let mut tallies = if config
            .suites
            .iter()
            .any(|s| s != "thm-4.6" && MAP_SUITES.contains(&s.as_str()))
        {
            map_suites::sweep(n, sample, exec)
        } else {
            map_suites::fresh()
        };
        if config.suites.iter().any(|s| s == "thm-4.6") {
            let nets = net_suite::sweep(n, sample, exec);
            for k in [map_suites::T46, map_suites::T46_C_HOLDS, map_suites::T46_C_FAILS] {
                tallies[k] = nets[k].clone();
            }
        }
        let scope = match sample {
            None => format!("on carriers of at most {n} points"),
            Some((count, seed)) => format!("on carriers of at most 3 points plus {count} samples with seed {seed}"),
        };
        collect(&mut maps, &config.suites, &map_suites::CHECKS, &tallies, &scope);
    }
    let mut reports = Vec::new();
    for suite in &config.suites {
        if let Some(r) = bispace.iter().chain(&maps).find(|r| &r.entry == suite) {
            reports.push(r.clone());
        }
    }
    reports
}

/// Verifies every catalog entry, optionally followed by the negative control.
pub fn run_catalog(exec: Execution, timed: bool, include_negative: bool) -> Vec<Report> {
    let mut entries = catalog::entries();
    if include_negative {
        entries.push(catalog::negative_control());
    }
    catalog::verify_all(&entries, exec, timed)
}
