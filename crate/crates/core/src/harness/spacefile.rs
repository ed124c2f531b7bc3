//! User space files.
//!
//! A file is a JSON object whose `kind` is `finite` or `symbolic`. Finite
//! files list open sets as point arrays; symbolic files list atoms and give
//! each structure as a region plus mandatory single points. Both may name
//! sets, describe a map into a second bispace and carry claims. The grammar
//! is written out in the README.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use thiserror::Error;

use crate::backend::SpaceBackend;
use crate::catalog::claims::default_battery;
use crate::catalog::{evaluate, Claim, MapSubject, Report, Subject};
use crate::finite::{validate_space, FiniteCarrier, FiniteSpace};
use crate::maps::CellMap;
use crate::mask::{Mask, MAX_CELLS};
use crate::props::Bispace;
use crate::symbolic::{
    validate_universe_and_families, Atom, AtomUniverse, FamilySpec, SchematicFamily, SchematicSpace,
};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: invalid input\n{}", bullet_list(.problems))]
    Invalid { path: PathBuf, problems: Vec<String> },
}

fn bullet_list(items: &[String]) -> String {
    items.iter().map(|p| format!("  - {p}")).collect::<Vec<_>>().join("\n")
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum Kind {
    Finite,
    Symbolic,
}

#[derive(Deserialize)]
struct Probe {
    kind: Kind,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiniteFile {
    #[allow(dead_code)]
    kind: String,
    points: usize,
    first: Vec<Vec<usize>>,
    second: Vec<Vec<usize>>,
    #[serde(default)]
    sets: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    map: Option<FiniteMapSpec>,
    #[serde(default)]
    claims: Vec<Claim>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiniteMapSpec {
    points: usize,
    first: Vec<Vec<usize>>,
    second: Vec<Vec<usize>>,
    assignment: Vec<usize>,
    #[serde(default)]
    sets: BTreeMap<String, Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SymbolicFile {
    #[allow(dead_code)]
    kind: String,
    atoms: Vec<Atom>,
    first: FamilySpec,
    second: FamilySpec,
    #[serde(default)]
    sets: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    map: Option<SymbolicMapSpec>,
    #[serde(default)]
    claims: Vec<Claim>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SymbolicMapSpec {
    atoms: Vec<Atom>,
    first: FamilySpec,
    second: FamilySpec,
    /// Source atom id to target atom id.
    assignment: BTreeMap<String, String>,
    #[serde(default)]
    sets: BTreeMap<String, Vec<String>>,
}

/// A parsed and validated file.
pub enum UserSubject {
    Finite(Subject<FiniteSpace>, Vec<Claim>),
    Symbolic(Subject<SchematicSpace>, Vec<Claim>),
}

fn parse<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: strip_position(&e),
    })
}

/// serde_json appends " at line L column C"; the position is reported
/// separately.
fn strip_position(e: &serde_json::Error) -> String {
    let text = e.to_string();
    match text.rfind(" at line ") {
        Some(k) => text[..k].to_string(),
        None => text,
    }
}

/// Collects problems instead of stopping at the first one.
struct Problems(Vec<String>);

impl Problems {
    fn push(&mut self, p: impl fmt::Display) {
        self.0.push(p.to_string());
    }

    fn finish<T>(self, path: &Path, value: Option<T>) -> Result<T, InputError> {
        match value {
            Some(v) if self.0.is_empty() => Ok(v),
            _ => Err(InputError::Invalid {
                path: path.to_path_buf(),
                problems: self.0,
            }),
        }
    }
}

fn point_set(points: &[usize], n: usize, what: &str, problems: &mut Problems) -> Option<Mask> {
    match points.iter().find(|&&p| p >= n) {
        Some(p) => {
            problems.push(format!("{what} {points:?} mentions point {p}, outside 0..{n}"));
            None
        }
        None => Some(points.iter().copied().collect()),
    }
}

fn finite_space(n: usize, family: &[Vec<usize>], what: &str, problems: &mut Problems) -> Option<FiniteSpace> {
    let carrier = match FiniteCarrier::new(n) {
        Ok(c) => c,
        Err(e) => {
            problems.push(format!("{what}: {e}"));
            return None;
        }
    };
    let sets: Option<Vec<Mask>> = family
        .iter()
        .map(|s| point_set(s, n, &format!("{what} open set"), problems))
        .collect();
    match validate_space(carrier, &sets?) {
        Ok(s) => Some(s),
        Err(e) => {
            problems.push(format!("{what}: {e}"));
            None
        }
    }
}

fn finite_bispace(
    n: usize,
    first: &[Vec<usize>],
    second: &[Vec<usize>],
    prefix: &str,
    problems: &mut Problems,
) -> Option<Bispace<FiniteSpace>> {
    let a = finite_space(n, first, &format!("{prefix}first"), problems);
    let b = finite_space(n, second, &format!("{prefix}second"), problems);
    Bispace::new(a?, b?).ok()
}

fn finite_sets(
    n: usize,
    sets: &BTreeMap<String, Vec<usize>>,
    prefix: &str,
    problems: &mut Problems,
) -> BTreeMap<String, Mask> {
    let mut out = BTreeMap::new();
    for (name, points) in sets {
        if let Some(s) = point_set(points, n, &format!("{prefix}set `{name}`"), problems) {
            out.insert(name.clone(), s);
        }
    }
    out.entry("X".to_string()).or_insert(Mask::prefix(n.min(MAX_CELLS)));
    out
}

fn build_finite(f: FiniteFile, path: &Path) -> Result<UserSubject, InputError> {
    let mut problems = Problems(Vec::new());
    let bispace = finite_bispace(f.points, &f.first, &f.second, "", &mut problems);
    let sets = finite_sets(f.points, &f.sets, "", &mut problems);
    let map = f.map.and_then(|m| {
        let target = finite_bispace(m.points, &m.first, &m.second, "map.", &mut problems);
        let sets = finite_sets(m.points, &m.sets, "map.", &mut problems);
        let carriers = FiniteCarrier::new(f.points)
            .ok()
            .zip(FiniteCarrier::new(m.points).ok())?;
        let map = CellMap::finite(carriers.0, carriers.1, m.assignment)
            .map_err(|e| problems.push(format!("map.assignment: {e}")))
            .ok()?;
        Some(MapSubject {
            map,
            target: target?,
            sets,
        })
    });
    let subject = bispace.map(|bispace| Subject { bispace, sets, map });
    let subject = problems.finish(path, subject)?;
    Ok(UserSubject::Finite(subject, f.claims))
}

fn universe(
    atoms: &[Atom],
    first: &FamilySpec,
    second: &FamilySpec,
    prefix: &str,
    problems: &mut Problems,
) -> Option<(Arc<AtomUniverse>, Bispace<SchematicSpace>)> {
    let families = [
        (format!("{prefix}first"), first.clone()),
        (format!("{prefix}second"), second.clone()),
    ];
    let diagnostics = validate_universe_and_families(atoms, &families);
    if !diagnostics.is_empty() {
        for d in diagnostics {
            problems.push(format!(
                "{prefix}{}: {}",
                d.subject.trim_start_matches(prefix),
                d.message
            ));
        }
        return None;
    }
    let u = Arc::new(AtomUniverse::new(atoms.to_vec()).ok()?);
    let space = |spec: &FamilySpec| {
        SchematicFamily::from_ids(&u, &spec.region, &spec.mandatory)
            .ok()
            .map(|family| SchematicSpace::new(Arc::clone(&u), family))
    };
    let bi = Bispace::new(space(first)?, space(second)?).ok()?;
    Some((u, bi))
}

fn symbolic_sets(
    u: &AtomUniverse,
    sets: &BTreeMap<String, Vec<String>>,
    prefix: &str,
    problems: &mut Problems,
) -> BTreeMap<String, Mask> {
    let mut out = BTreeMap::new();
    for (name, ids) in sets {
        match u.set(ids) {
            Ok(s) => {
                out.insert(name.clone(), s);
            }
            Err(e) => problems.push(format!("{prefix}set `{name}`: {e}")),
        }
    }
    out.entry("X".to_string()).or_insert(u.all());
    out
}

fn build_symbolic(f: SymbolicFile, path: &Path) -> Result<UserSubject, InputError> {
    let mut problems = Problems(Vec::new());
    let source = universe(&f.atoms, &f.first, &f.second, "", &mut problems);
    let sets = source
        .as_ref()
        .map(|(u, _)| symbolic_sets(u, &f.sets, "", &mut problems))
        .unwrap_or_default();
    let map = match (&source, f.map) {
        (Some((su, _)), Some(m)) => {
            universe(&m.atoms, &m.first, &m.second, "map.", &mut problems).and_then(|(tu, target)| {
                let sets = symbolic_sets(&tu, &m.sets, "map.", &mut problems);
                let pairs: Vec<(&str, &str)> = m.assignment.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
                let map = CellMap::atoms(su, &tu, &pairs)
                    .map_err(|e| problems.push(format!("map.assignment: {e}")))
                    .ok()?;
                Some(MapSubject { map, target, sets })
            })
        }
        _ => None,
    };
    let subject = source.map(|(_, bispace)| Subject { bispace, sets, map });
    let subject = problems.finish(path, subject)?;
    Ok(UserSubject::Symbolic(subject, f.claims))
}

/// Parses and validates a space file held in memory; `path` is only used
/// in diagnostics.
pub fn parse_space_file(path: &Path, text: &str) -> Result<UserSubject, InputError> {
    match parse::<Probe>(path, text)?.kind {
        Kind::Finite => build_finite(parse(path, text)?, path),
        Kind::Symbolic => build_symbolic(parse(path, text)?, path),
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn run<B: SpaceBackend>(
    subject: &Subject<B>,
    claims: Vec<Claim>,
    entry: String,
    path: &Path,
) -> Result<Report, InputError> {
    let claims = if claims.is_empty() {
        default_battery(subject)
    } else {
        claims
    };
    let outcomes: Vec<_> = claims.iter().map(|c| evaluate(subject, c, false)).collect();
    let problems: Vec<String> = outcomes
        .iter()
        .filter_map(|o| {
            o.computed
                .strip_prefix("error: ")
                .map(|m| format!("claim `{}`: {m}", o.claim))
        })
        .collect();
    if !problems.is_empty() {
        return Err(InputError::Invalid {
            path: path.to_path_buf(),
            problems,
        });
    }
    Ok(Report { entry, outcomes })
}

/// Evaluates a space file's claims, followed by those in `claims` (a JSON
/// array of claims). Without any claims the default battery runs.
pub fn check_user_file(path: &Path, claims: Option<&Path>) -> Result<Report, InputError> {
    let subject = parse_space_file(path, &read(path)?)?;
    let extra: Vec<Claim> = match claims {
        Some(p) => parse(p, &read(p)?)?,
        None => Vec::new(),
    };
    let entry = path.display().to_string();
    match subject {
        UserSubject::Finite(s, mut c) => {
            c.extend(extra);
            run(&s, c, entry, path)
        }
        UserSubject::Symbolic(s, mut c) => {
            c.extend(extra);
            run(&s, c, entry, path)
        }
    }
}
