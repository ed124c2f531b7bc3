//! Acceptance checks, one test per criterion. Each prints a single
//! `criterion N ...: PASS|FAIL` line on stdout (bypassing libtest capture)
//! before asserting, so `cargo test --test acceptance -- --test-threads=1`
//! gives a readable scorecard.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use bispace_lab::catalog::{self, Report};
use bispace_lab::harness::tables::describe_bispace;
use bispace_lab::harness::{run_catalog, run_theorem_suite, Format, SuiteConfig, Sweep, BISPACE_SUITES, MAP_SUITES};
use bispace_lab::maps::{self, CellMap};
use bispace_lab::props;
use bispace_lab::{
    enumerate_spaces, validate_space, Atom, AtomUniverse, Bispace, Cardinality, Execution, FiniteCarrier, FiniteSpace,
    IndexPair, Mask, SchematicFamily, SchematicSpace,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn verdict(n: u8, name: &str, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "criterion {n} {name}: {status} ({detail})").unwrap();
}

fn config(n: usize, suites: &[&str]) -> SuiteConfig {
    SuiteConfig {
        n,
        suites: suites.iter().map(|s| s.to_string()).collect(),
        sweep: Sweep::Exhaustive,
        format: Format::Machine,
    }
}

fn failing(reports: &[Report]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| {
            r.failures()
                .map(move |o| format!("{}/{}: {}", r.entry, o.claim, o.computed))
        })
        .collect()
}

/// The map suites on three points, shared by criteria 5 and 6.
fn map_run() -> &'static (Vec<Report>, Duration) {
    static RUN: OnceLock<(Vec<Report>, Duration)> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let reports = run_theorem_suite(&config(3, &MAP_SUITES), Execution::default());
        (reports, start.elapsed())
    })
}

#[test]
fn criterion_1_catalog_fidelity() {
    let start = Instant::now();
    let reports = run_catalog(Execution::default(), false, false);
    let elapsed = start.elapsed();
    let claims: usize = reports.iter().map(|r| r.outcomes.len()).sum();
    let bad = failing(&reports);
    let ok = reports.len() == 9 && bad.is_empty() && elapsed < Duration::from_secs(1);
    verdict(
        1,
        "catalog fidelity",
        ok,
        &format!(
            "{} entries, {claims} claims, {} failing, {elapsed:.2?}",
            reports.len(),
            bad.len()
        ),
    );
    assert!(ok, "{bad:?}");
}

/// Closure by intersecting the closed supersets, straight from the opens.
fn closure_oracle(opens: &[u64], full: u64, s: u64) -> u64 {
    opens
        .iter()
        .map(|&u| full & !u)
        .filter(|&c| s & !c == 0)
        .fold(full, |acc, c| acc & c)
}

fn limit_oracle(opens: &[u64], full: u64, s: u64) -> u64 {
    (0..64)
        .filter(|&x| full >> x & 1 == 1)
        .filter(|&x| {
            opens
                .iter()
                .filter(|&&u| u >> x & 1 == 1)
                .all(|&u| u & s & !(1 << x) != 0)
        })
        .fold(0, |acc, x| acc | 1 << x)
}

fn schematic_laws(space: &SchematicSpace, ground: Mask) -> usize {
    let subsets: Vec<Mask> = ground.submasks().collect();
    let mut bad = usize::from(!space.closure(Mask::EMPTY).is_empty());
    for &a in &subsets {
        let cl = space.closure(a);
        bad += usize::from(!a.is_subset(cl) || space.closure(cl) != cl || !space.interior(a).is_subset(a));
        for &b in &subsets {
            bad += usize::from(space.closure(a | b) != cl | space.closure(b));
            if a.is_subset(b) {
                bad += usize::from(!cl.is_subset(space.closure(b)));
            }
        }
    }
    bad
}

#[test]
fn criterion_2_closure_laws() {
    let start = Instant::now();
    let mut violations = 0usize;
    let mut checked = 0usize;
    for n in 1..=3 {
        let full = (1u64 << n) - 1;
        for space in enumerate_spaces(n).unwrap() {
            let opens: Vec<u64> = space.opens().iter().map(|o| o.bits()).collect();
            let cl = |s: u64| space.closure(Mask::from_bits(s)).bits();
            for a in 0..=full {
                checked += 1;
                let c = cl(a);
                let mut ok = c == closure_oracle(&opens, full, a)
                    && a & !c == 0
                    && cl(c) == c
                    && c == a | limit_oracle(&opens, full, a)
                    && space.limit_points(Mask::from_bits(a)).bits() == limit_oracle(&opens, full, a);
                for b in 0..=full {
                    ok &= cl(a | b) == c | cl(b);
                    if a & !b == 0 {
                        ok &= c & !cl(b) == 0;
                    }
                }
                violations += usize::from(!ok);
            }
            violations += usize::from(cl(0) != 0);
        }
    }
    let mut spaces = 0;
    for entry in catalog::entries() {
        let bi = &entry.subject.bispace;
        for space in [bi.first(), bi.second()] {
            spaces += 1;
            violations += schematic_laws(space, bi.ground());
        }
    }
    let suite = run_theorem_suite(&config(3, &["closure-laws"]), Execution::default());
    let bad = failing(&suite);
    let elapsed = start.elapsed();
    let ok = violations == 0 && bad.is_empty() && elapsed < Duration::from_secs(10);
    verdict(
        2,
        "closure-operator laws",
        ok,
        &format!(
            "{checked} finite subsets and {spaces} catalog spaces, {violations} violations, suite failures {bad:?}, {elapsed:.2?}"
        ),
    );
    assert!(ok);
}

fn explicit_opens(region: u64, mandatory: u64, full: u64) -> Vec<u64> {
    let mut opens = vec![0, full];
    let mut c = region;
    loop {
        opens.push(c | mandatory);
        if c == 0 {
            break;
        }
        c = (c - 1) & region;
    }
    opens.sort_unstable();
    opens.dedup();
    opens
}

fn finite_bispace(n: usize, a: &[u64], b: &[u64]) -> Bispace<FiniteSpace> {
    let space = |opens: &[u64]| {
        let family: Vec<Mask> = opens.iter().map(|&o| Mask::from_bits(o)).collect();
        validate_space(FiniteCarrier::new(n).unwrap(), &family).unwrap()
    };
    Bispace::new(space(a), space(b)).unwrap()
}

#[test]
fn criterion_3_symbolic_matches_finite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let universes = 60;
    let mut mismatches = Vec::new();
    let mut subsets = 0usize;
    for case in 0..universes {
        let n = rng.gen_range(1..=6);
        let full = (1u64 << n) - 1;
        let atoms = (0..n)
            .map(|k| Atom::new(&format!("p{k}"), Cardinality::Singleton, ""))
            .collect();
        let u = Arc::new(AtomUniverse::new(atoms).unwrap());
        let mut parts = [(0, 0); 2];
        for p in &mut parts {
            let region = rng.gen_range(0..=full);
            *p = (region, rng.gen_range(0..=full) & !region);
        }
        let sym: Vec<SchematicSpace> = parts
            .iter()
            .map(|&(r, m)| {
                let family = SchematicFamily::new(&u, Mask::from_bits(r), Mask::from_bits(m)).unwrap();
                SchematicSpace::new(Arc::clone(&u), family)
            })
            .collect();
        let opens: Vec<Vec<u64>> = parts.iter().map(|&(r, m)| explicit_opens(r, m, full)).collect();
        let sym_bi = Bispace::new(sym[0].clone(), sym[1].clone()).unwrap();
        let fin_bi = finite_bispace(n, &opens[0], &opens[1]);
        for bits in 0..=full {
            subsets += 1;
            let s = Mask::from_bits(bits);
            let same = [fin_bi.first(), fin_bi.second()].iter().zip(&sym).all(|(f, y)| {
                f.is_open(s) == y.is_open(s) && f.closure(s) == y.closure(s) && f.interior(s) == y.interior(s)
            }) && IndexPair::BOTH.iter().all(|&p| {
                props::is_ij_preopen(&fin_bi, p, s) == props::is_ij_preopen(&sym_bi, p, s)
                    && props::is_ij_weakly_preopen(&fin_bi, p, s) == props::is_ij_weakly_preopen(&sym_bi, p, s)
            });
            if !same {
                mismatches.push(format!("case {case}: set {s}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches.is_empty() && elapsed < Duration::from_secs(30);
    verdict(
        3,
        "finite/symbolic equivalence",
        ok,
        &format!(
            "{universes} universes, {subsets} subsets, {} mismatches, {elapsed:.2?}",
            mismatches.len()
        ),
    );
    assert!(ok, "{mismatches:?}");
}

#[test]
fn criterion_4_bispace_suites() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut c1_c2 = true;
    for n in 1..=3 {
        let reports = run_theorem_suite(&config(n, &BISPACE_SUITES), Execution::default());
        assert_eq!(reports.len(), BISPACE_SUITES.len());
        c1_c2 &= reports.iter().find(|r| r.entry == "C1-iff-C2").unwrap().passed();
        bad.extend(failing(&reports).into_iter().map(|f| format!("n={n} {f}")));
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && c1_c2 && elapsed < Duration::from_secs(60);
    verdict(
        4,
        "bispace theorem suites",
        ok,
        &format!(
            "n = 1..3, {} failing checks, C1 ⇔ C2 {}, {elapsed:.2?}",
            bad.len(),
            if c1_c2 { "holds" } else { "fails" }
        ),
    );
    assert!(ok, "{bad:?}");
}

#[test]
fn criterion_5_map_suites() {
    let (reports, elapsed) = map_run();
    let bad = failing(reports);
    let nets = reports.iter().find(|r| r.entry == "thm-4.6").unwrap();
    let net_law = nets.outcomes.iter().find(|o| o.predicate == "law").unwrap();
    let ok = reports.len() == MAP_SUITES.len() && bad.is_empty() && *elapsed < Duration::from_secs(300);
    verdict(
        5,
        "map theorem suites",
        ok,
        &format!(
            "n ≤ 3, {} failing checks, nets: {}, {elapsed:.2?}",
            bad.len(),
            net_law.computed
        ),
    );
    assert!(ok, "{bad:?}");
}

fn opens(s: &Value) -> Bispace<FiniteSpace> {
    let points = s["points"].as_u64().unwrap() as usize;
    let space = |key: &str| {
        let family: Vec<Mask> = s[key]
            .as_array()
            .unwrap()
            .iter()
            .map(|o| {
                o.as_array()
                    .unwrap()
                    .iter()
                    .map(|p| p.as_u64().unwrap() as usize)
                    .collect()
            })
            .collect();
        validate_space(FiniteCarrier::new(points).unwrap(), &family).unwrap()
    };
    Bispace::new(space("first"), space("second")).unwrap()
}

#[test]
fn criterion_6_hierarchy_fixtures() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/hierarchy.json");
    let fixtures: Vec<Value> = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let (reports, _) = map_run();
    let hierarchy = reports.iter().find(|r| r.entry == "hierarchy").unwrap();
    let mut problems = Vec::new();
    let mut gaps = 0;
    for fx in &fixtures {
        let x = opens(&fx["source"]);
        let y = opens(&fx["target"]);
        let assignment: Vec<usize> = fx["assignment"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap() as usize)
            .collect();
        let f = CellMap::finite(
            FiniteCarrier::new(x.ground().len()).unwrap(),
            FiniteCarrier::new(y.ground().len()).unwrap(),
            assignment,
        )
        .unwrap();
        let computed = [
            maps::is_pairwise_continuous(&f, &x, &y).unwrap(),
            maps::is_pairwise_precontinuous(&f, &x, &y).unwrap(),
            maps::is_pairwise_semi_continuous(&f, &x, &y).unwrap(),
            maps::is_pairwise_sp_continuous(&f, &x, &y).unwrap(),
        ];
        let expected =
            ["continuous", "precontinuous", "semi_continuous", "sp_continuous"].map(|k| fx[k].as_bool().unwrap());
        let witness = fx["witness"].as_str().unwrap();
        if computed != expected {
            problems.push(format!("verdicts differ for {witness}"));
        }
        if !witness.starts_with(&format!("X: {} | Y: {} |", describe_bispace(&x), describe_bispace(&y))) {
            problems.push(format!("fixture structures do not match {witness}"));
        }
        for gap in fx["gaps"].as_array().unwrap() {
            gaps += 1;
            let gap = gap.as_str().unwrap();
            match hierarchy.outcomes.iter().find(|o| o.claim == gap) {
                Some(o) if o.witness.as_deref() == Some(witness) => {}
                Some(o) => problems.push(format!("{gap}: search now reports {:?}", o.witness)),
                None => problems.push(format!("{gap}: missing from the suite")),
            }
        }
    }
    let searches = hierarchy.outcomes.iter().filter(|o| o.predicate == "search").count();
    let ok = problems.is_empty() && gaps == searches;
    verdict(
        6,
        "hierarchy strictness fixtures",
        ok,
        &format!(
            "{gaps} of {searches} gaps witnessed on n ≤ 3, {} problems",
            problems.len()
        ),
    );
    assert!(ok, "{problems:?}");
}

#[test]
fn criterion_7_determinism() {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_bispace-lab"))
            .args(["--format", "machine", "suite", "--n", "3", "--which", "all"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let first = run();
    let second = run();
    let ok = !first.is_empty() && first == second;
    verdict(
        7,
        "determinism",
        ok,
        &format!(
            "two runs of `suite --n 3 --which all`, {} bytes each, identical: {}",
            first.len(),
            first == second
        ),
    );
    assert!(ok);
}
