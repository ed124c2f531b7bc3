//! A small claim language shared by the built-in catalog and user files.
//!
//! A claim names a predicate, its arguments and optionally the value it is
//! expected to take. Claims without an expectation are informational: they
//! are evaluated and reported but cannot fail.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::backend::SpaceBackend;
use crate::maps::{self, CellMap, MapError};
use crate::mask::Mask;
use crate::props::{self, Bispace, IndexPair, Openness, Side};

use super::report::ClaimOutcome;

/// One member of a literal set: a point index or a cell name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellRef {
    Index(usize),
    Name(String),
}

/// A named set of the subject, or a literal list of cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SetRef {
    Named(String),
    Cells(Vec<CellRef>),
}

impl SetRef {
    pub fn named(name: &str) -> Self {
        SetRef::Named(name.to_string())
    }

    pub fn cells(names: &[&str]) -> Self {
        SetRef::Cells(names.iter().map(|n| CellRef::Name(n.to_string())).collect())
    }

    pub fn points(points: &[usize]) -> Self {
        SetRef::Cells(points.iter().map(|&p| CellRef::Index(p)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Expected {
    Bool(bool),
    Set(SetRef),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "predicate", rename_all = "snake_case")]
pub enum Check {
    Countable {
        set: SetRef,
    },
    Open {
        space: Side,
        set: SetRef,
    },
    Closure {
        space: Side,
        set: SetRef,
    },
    Interior {
        space: Side,
        set: SetRef,
    },
    /// Some open set of `space` between `lower` and `upper`; expect a set
    /// for the canonical witness or a bool for existence.
    OpenBetween {
        space: Side,
        lower: SetRef,
        upper: SetRef,
    },
    Preopen {
        space: Side,
        set: SetRef,
    },
    WeaklyPreopen {
        space: Side,
        set: SetRef,
    },
    IjPreopen {
        pair: IndexPair,
        set: SetRef,
    },
    IjWeaklyPreopen {
        pair: IndexPair,
        set: SetRef,
    },
    PairwisePreopen {
        set: SetRef,
    },
    IjSemiopen {
        pair: IndexPair,
        set: SetRef,
    },
    IjSemipreopen {
        pair: IndexPair,
        set: SetRef,
    },
    /// Whether `witness` certifies `set` as semipreopen.
    SemipreopenCertificate {
        pair: IndexPair,
        witness: SetRef,
        set: SetRef,
    },
    IjPreclosed {
        pair: IndexPair,
        set: SetRef,
    },
    IjSemipreclosed {
        pair: IndexPair,
        set: SetRef,
    },
    Pcl {
        pair: IndexPair,
        set: SetRef,
    },
    Spcl {
        pair: IndexPair,
        set: SetRef,
    },
    ClosedSupersetsInInterior {
        pair: IndexPair,
        set: SetRef,
    },
    /// Preimage of a target set.
    Preimage {
        set: SetRef,
    },
    /// Image of a source set; the expectation is read in the target.
    Image {
        set: SetRef,
    },
    PairwiseContinuous,
    PairwisePrecontinuous,
    PairwiseSemiContinuous,
    PairwiseSpContinuous,
    PairwiseOpenMap,
    /// `f(cl A) ⊆ cl f(A)` in the given coordinate.
    ClosurePreserving {
        space: Side,
        set: SetRef,
    },
    /// [`Check::ClosurePreserving`] for every representable set.
    ClosurePreservingAll {
        space: Side,
    },
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::Countable { .. } => "countable",
            Check::Open { .. } => "open",
            Check::Closure { .. } => "closure",
            Check::Interior { .. } => "interior",
            Check::OpenBetween { .. } => "open_between",
            Check::Preopen { .. } => "preopen",
            Check::WeaklyPreopen { .. } => "weakly_preopen",
            Check::IjPreopen { .. } => "ij_preopen",
            Check::IjWeaklyPreopen { .. } => "ij_weakly_preopen",
            Check::PairwisePreopen { .. } => "pairwise_preopen",
            Check::IjSemiopen { .. } => "ij_semiopen",
            Check::IjSemipreopen { .. } => "ij_semipreopen",
            Check::SemipreopenCertificate { .. } => "semipreopen_certificate",
            Check::IjPreclosed { .. } => "ij_preclosed",
            Check::IjSemipreclosed { .. } => "ij_semipreclosed",
            Check::Pcl { .. } => "pcl",
            Check::Spcl { .. } => "spcl",
            Check::ClosedSupersetsInInterior { .. } => "closed_supersets_in_interior",
            Check::Preimage { .. } => "preimage",
            Check::Image { .. } => "image",
            Check::PairwiseContinuous => "pairwise_continuous",
            Check::PairwisePrecontinuous => "pairwise_precontinuous",
            Check::PairwiseSemiContinuous => "pairwise_semi_continuous",
            Check::PairwiseSpContinuous => "pairwise_sp_continuous",
            Check::PairwiseOpenMap => "pairwise_open_map",
            Check::ClosurePreserving { .. } => "closure_preserving",
            Check::ClosurePreservingAll { .. } => "closure_preserving_all",
        }
    }

    /// Whether the predicate quantifies over representable sets of the
    /// source, and so is exact only when those are all subsets.
    pub fn searches_algebra(&self) -> bool {
        matches!(
            self,
            Check::IjSemipreopen { .. }
                | Check::IjSemipreclosed { .. }
                | Check::Pcl { .. }
                | Check::Spcl { .. }
                | Check::PairwiseSpContinuous
                | Check::ClosurePreservingAll { .. }
        )
    }

    fn needs_map(&self) -> bool {
        matches!(
            self,
            Check::Preimage { .. }
                | Check::Image { .. }
                | Check::PairwiseContinuous
                | Check::PairwisePrecontinuous
                | Check::PairwiseSemiContinuous
                | Check::PairwiseSpContinuous
                | Check::PairwiseOpenMap
                | Check::ClosurePreserving { .. }
                | Check::ClosurePreservingAll { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    #[serde(flatten)]
    pub check: Check,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Claim {
    pub fn new(id: &str, check: Check, expected: Option<Expected>) -> Self {
        Claim {
            id: id.to_string(),
            check,
            expected,
            note: String::new(),
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = note.to_string();
        self
    }
}

/// A map together with its target bispace and the target's named sets.
#[derive(Debug, Clone)]
pub struct MapSubject<B> {
    pub map: CellMap,
    pub target: Bispace<B>,
    pub sets: BTreeMap<String, Mask>,
}

/// What claims are evaluated against.
#[derive(Debug, Clone)]
pub struct Subject<B> {
    pub bispace: Bispace<B>,
    pub sets: BTreeMap<String, Mask>,
    pub map: Option<MapSubject<B>>,
}

impl<B: SpaceBackend> Subject<B> {
    pub fn new(bispace: Bispace<B>) -> Self {
        Subject {
            bispace,
            sets: BTreeMap::new(),
            map: None,
        }
    }

    pub fn with_set(mut self, name: &str, set: Mask) -> Self {
        self.sets.insert(name.to_string(), set);
        self
    }

    pub fn with_map(mut self, map: MapSubject<B>) -> Self {
        self.map = Some(map);
        self
    }

    fn realm(&self, realm: Realm) -> Result<(&Bispace<B>, &BTreeMap<String, Mask>), String> {
        match realm {
            Realm::Source => Ok((&self.bispace, &self.sets)),
            Realm::Target => self
                .map
                .as_ref()
                .map(|m| (&m.target, &m.sets))
                .ok_or_else(|| "this claim needs a map".to_string()),
        }
    }

    /// Resolves a set reference in the source or target.
    pub fn resolve(&self, set: &SetRef, realm: Realm) -> Result<Mask, String> {
        let (bi, names) = self.realm(realm)?;
        match set {
            SetRef::Named(name) => names.get(name).copied().ok_or_else(|| format!("unknown set `{name}`")),
            SetRef::Cells(cells) => {
                let mut out = Mask::EMPTY;
                for cell in cells {
                    let index = match cell {
                        CellRef::Index(i) if bi.ground().contains(*i) => Some(*i),
                        CellRef::Index(_) => None,
                        CellRef::Name(n) => bi.first().cell_index(n),
                    };
                    match index {
                        Some(i) => out.insert(i),
                        None => return Err(format!("unknown cell `{}`", cell_text(cell))),
                    }
                }
                Ok(out)
            }
        }
    }

    fn describe(&self, set: Mask, realm: Realm) -> String {
        match self.realm(realm) {
            Ok((bi, _)) => bi.describe(set),
            Err(_) => set.to_string(),
        }
    }
}

fn cell_text(cell: &CellRef) -> String {
    match cell {
        CellRef::Index(i) => i.to_string(),
        CellRef::Name(n) => n.clone(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Realm {
    Source,
    Target,
}

enum Value {
    Bool(bool),
    Set(Mask, Realm),
    Found(Option<Mask>),
}

struct Evaluation {
    value: Value,
    witness: Option<String>,
}

impl Evaluation {
    fn plain(value: Value) -> Self {
        Evaluation { value, witness: None }
    }
}

fn map_err(e: MapError) -> String {
    e.to_string()
}

fn evaluate_check<B: SpaceBackend>(subject: &Subject<B>, check: &Check) -> Result<Evaluation, String> {
    use Realm::Source;
    let bi = &subject.bispace;
    let src = |s: &SetRef| subject.resolve(s, Source);
    let witnessed = |w: Option<Mask>| Evaluation {
        value: Value::Bool(w.is_some()),
        witness: w.map(|w| bi.describe(w)),
    };
    if check.needs_map() && subject.map.is_none() {
        return Err("this claim needs a map".to_string());
    }
    let eval = match check {
        Check::Countable { set } => Evaluation::plain(Value::Bool(bi.first().is_countable(src(set)?))),
        Check::Open { space, set } => Evaluation::plain(Value::Bool(bi.space(*space).is_open(src(set)?))),
        Check::Closure { space, set } => Evaluation::plain(Value::Set(bi.space(*space).closure(src(set)?), Source)),
        Check::Interior { space, set } => Evaluation::plain(Value::Set(bi.space(*space).interior(src(set)?), Source)),
        Check::OpenBetween { space, lower, upper } => {
            let found = props::open_between(bi.space(*space), src(lower)?, src(upper)?).map_err(|e| e.to_string())?;
            Evaluation::plain(Value::Found(found))
        }
        Check::Preopen { space, set } => witnessed(props::preopen_witness(bi.space(*space), src(set)?)),
        Check::WeaklyPreopen { space, set } => {
            Evaluation::plain(Value::Bool(props::is_weakly_preopen(bi.space(*space), src(set)?)))
        }
        Check::IjPreopen { pair, set } => witnessed(props::ij_preopen_witness(bi, *pair, src(set)?)),
        Check::IjWeaklyPreopen { pair, set } => {
            Evaluation::plain(Value::Bool(props::is_ij_weakly_preopen(bi, *pair, src(set)?)))
        }
        Check::PairwisePreopen { set } => Evaluation::plain(Value::Bool(props::is_pairwise_preopen(bi, src(set)?))),
        Check::IjSemiopen { pair, set } => Evaluation::plain(Value::Bool(props::is_ij_semiopen(bi, *pair, src(set)?))),
        Check::IjSemipreopen { pair, set } => witnessed(props::ij_semipreopen_witness(bi, *pair, src(set)?)),
        Check::SemipreopenCertificate { pair, witness, set } => Evaluation::plain(Value::Bool(
            props::certifies_semipreopen(bi, *pair, src(witness)?, src(set)?),
        )),
        Check::IjPreclosed { pair, set } => {
            let a = src(set)?;
            witnessed(props::ij_preopen_witness(bi, *pair, bi.ground() - a))
        }
        Check::IjSemipreclosed { pair, set } => {
            Evaluation::plain(Value::Bool(props::is_ij_semipreclosed(bi, *pair, src(set)?)))
        }
        Check::Pcl { pair, set } => Evaluation::plain(Value::Set(props::pcl(bi, *pair, src(set)?), Source)),
        Check::Spcl { pair, set } => Evaluation::plain(Value::Set(props::spcl(bi, *pair, src(set)?), Source)),
        Check::ClosedSupersetsInInterior { pair, set } => {
            Evaluation::plain(Value::Bool(props::closed_supersets_in_interior(bi, *pair, src(set)?)))
        }
        _ => return evaluate_map_check(subject, check),
    };
    Ok(eval)
}

fn evaluate_map_check<B: SpaceBackend>(subject: &Subject<B>, check: &Check) -> Result<Evaluation, String> {
    let m = subject.map.as_ref().ok_or("this claim needs a map")?;
    let (x, y, f) = (&subject.bispace, &m.target, &m.map);
    let graded = |kind: Openness| -> Result<Evaluation, String> {
        let holds = maps::preimage_condition(f, x, y, kind).map_err(map_err)?;
        let witness = if holds {
            None
        } else {
            first_failing_trace(f, x, y, kind)
        };
        Ok(Evaluation {
            value: Value::Bool(holds),
            witness,
        })
    };
    match check {
        Check::Preimage { set } => {
            let v = subject.resolve(set, Realm::Target)?;
            Ok(Evaluation::plain(Value::Set(f.preimage(v), Realm::Source)))
        }
        Check::Image { set } => {
            let a = subject.resolve(set, Realm::Source)?;
            Ok(Evaluation::plain(Value::Set(f.image(a), Realm::Target)))
        }
        Check::PairwiseContinuous => graded(Openness::Open),
        Check::PairwisePrecontinuous => graded(Openness::Preopen),
        Check::PairwiseSemiContinuous => graded(Openness::Semiopen),
        Check::PairwiseSpContinuous => graded(Openness::Semipreopen),
        Check::PairwiseOpenMap => Ok(Evaluation::plain(Value::Bool(
            maps::is_pairwise_open_map(f, x, y).map_err(map_err)?,
        ))),
        Check::ClosurePreserving { space, set } => {
            let a = subject.resolve(set, Realm::Source)?;
            Ok(Evaluation::plain(Value::Bool(maps::check_closure_preservation(
                f,
                x.space(*space),
                y.space(*space),
                a,
            ))))
        }
        Check::ClosurePreservingAll { space } => {
            let failing = x
                .algebra_sets()
                .into_iter()
                .find(|&a| !maps::check_closure_preservation(f, x.space(*space), y.space(*space), a));
            Ok(Evaluation {
                value: Value::Bool(failing.is_none()),
                witness: failing.map(|a| x.describe(a)),
            })
        }
        _ => unreachable!("set predicates are handled by evaluate_check"),
    }
}

/// A `σ_i`-open trace whose preimage lacks the grade, rendered for reports.
fn first_failing_trace<B: SpaceBackend>(f: &CellMap, x: &Bispace<B>, y: &Bispace<B>, kind: Openness) -> Option<String> {
    Side::BOTH.iter().find_map(|&side| {
        let idx = IndexPair::opening(side);
        y.space(side)
            .open_traces(f.image(f.source()))
            .into_iter()
            .find(|&v| !kind.holds(x, idx, f.preimage(v)))
            .map(|v| {
                format!(
                    "σ{} open {} pulls back to {}",
                    side.number(),
                    y.describe(v),
                    x.describe(f.preimage(v))
                )
            })
    })
}

fn render<B: SpaceBackend>(subject: &Subject<B>, value: &Value) -> String {
    match value {
        Value::Bool(b) => b.to_string(),
        Value::Set(s, realm) => subject.describe(*s, *realm),
        Value::Found(Some(s)) => subject.describe(*s, Realm::Source),
        Value::Found(None) => "none".to_string(),
    }
}

fn compare<B: SpaceBackend>(
    subject: &Subject<B>,
    value: &Value,
    expected: &Expected,
) -> Result<(bool, String), String> {
    let realm = match value {
        Value::Set(_, realm) => *realm,
        _ => Realm::Source,
    };
    match (value, expected) {
        (Value::Bool(b), Expected::Bool(e)) => Ok((b == e, e.to_string())),
        (Value::Found(found), Expected::Bool(e)) => Ok((found.is_some() == *e, e.to_string())),
        (Value::Set(..), Expected::Bool(_)) => Err("expected a set, found a boolean".to_string()),
        (Value::Bool(_), Expected::Set(_)) => Err("expected a boolean, found a set".to_string()),
        (Value::Set(s, _), Expected::Set(e)) => {
            let e = subject.resolve(e, realm)?;
            Ok((*s == e, subject.describe(e, realm)))
        }
        (Value::Found(found), Expected::Set(e)) => {
            let e = subject.resolve(e, realm)?;
            Ok((*found == Some(e), subject.describe(e, realm)))
        }
    }
}

/// Evaluates one claim; errors in the claim itself become failed outcomes.
pub fn evaluate<B: SpaceBackend>(subject: &Subject<B>, claim: &Claim, timed: bool) -> ClaimOutcome {
    let start = Instant::now();
    let evaluation = evaluate_check(subject, &claim.check);
    let duration_ms = timed.then(|| start.elapsed().as_millis() as u64);
    let algebra_relative = claim.check.searches_algebra() && !subject.bispace.algebra_is_exact();
    let mut outcome = ClaimOutcome {
        claim: claim.id.clone(),
        predicate: claim.check.name().to_string(),
        expected: "-".to_string(),
        computed: String::new(),
        witness: None,
        algebra_relative,
        passed: true,
        note: claim.note.clone(),
        duration_ms,
    };
    match evaluation {
        Err(e) => {
            outcome.computed = format!("error: {e}");
            outcome.passed = false;
        }
        Ok(eval) => {
            outcome.computed = render(subject, &eval.value);
            outcome.witness = eval.witness;
            if let Some(expected) = &claim.expected {
                match compare(subject, &eval.value, expected) {
                    Ok((passed, shown)) => {
                        outcome.passed = passed;
                        outcome.expected = shown;
                    }
                    Err(e) => {
                        outcome.passed = false;
                        outcome.expected = format!("error: {e}");
                    }
                }
            }
        }
    }
    outcome
}

/// Claims evaluated for a user file that states none.
pub fn default_battery<B: SpaceBackend>(subject: &Subject<B>) -> Vec<Claim> {
    let mut claims = Vec::new();
    for name in subject.sets.keys() {
        let set = SetRef::named(name);
        for pair in IndexPair::BOTH {
            let tag = format!("{name}-{}{}", pair.i().number(), pair.j().number());
            claims.push(Claim::new(
                &format!("{tag}-preopen"),
                Check::IjPreopen { pair, set: set.clone() },
                None,
            ));
            claims.push(Claim::new(
                &format!("{tag}-weakly-preopen"),
                Check::IjWeaklyPreopen { pair, set: set.clone() },
                None,
            ));
            claims.push(Claim::new(
                &format!("{tag}-semiopen"),
                Check::IjSemiopen { pair, set: set.clone() },
                None,
            ));
            claims.push(Claim::new(
                &format!("{tag}-semipreopen"),
                Check::IjSemipreopen { pair, set: set.clone() },
                None,
            ));
            claims.push(Claim::new(
                &format!("{tag}-pcl"),
                Check::Pcl { pair, set: set.clone() },
                None,
            ));
        }
    }
    if subject.map.is_some() {
        for check in [
            Check::PairwiseContinuous,
            Check::PairwisePrecontinuous,
            Check::PairwiseSemiContinuous,
            Check::PairwiseSpContinuous,
            Check::PairwiseOpenMap,
        ] {
            let id = check.name().replace('_', "-");
            claims.push(Claim::new(&id, check, None));
        }
    }
    claims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{validate_space, FiniteCarrier, FiniteSpace};

    fn sierpinski_subject() -> Subject<FiniteSpace> {
        let c = FiniteCarrier::new(2).unwrap();
        let s = validate_space(c, &[Mask::EMPTY, Mask::singleton(0), Mask::prefix(2)]).unwrap();
        Subject::new(Bispace::new(s, FiniteSpace::indiscrete(c)).unwrap()).with_set("A", Mask::singleton(0))
    }

    #[test]
    fn claims_round_trip_through_json() {
        let claim = Claim::new(
            "a",
            Check::IjPreopen {
                pair: IndexPair::OneTwo,
                set: SetRef::named("A"),
            },
            Some(Expected::Bool(true)),
        );
        let text = serde_json::to_string(&claim).unwrap();
        assert_eq!(
            text,
            r#"{"id":"a","predicate":"ij_preopen","pair":[1,2],"set":"A","expected":true}"#
        );
        assert_eq!(serde_json::from_str::<Claim>(&text).unwrap(), claim);

        let literal: Claim =
            serde_json::from_str(r#"{"id":"b","predicate":"closure","space":2,"set":[1],"expected":[0,1]}"#).unwrap();
        assert_eq!(literal.expected, Some(Expected::Set(SetRef::points(&[0, 1]))));
    }

    #[test]
    fn outcomes_compare_against_expectations() {
        let subject = sierpinski_subject();
        let ok = evaluate(
            &subject,
            &Claim::new(
                "cl",
                Check::Closure {
                    space: Side::Second,
                    set: SetRef::named("A"),
                },
                Some(Expected::Set(SetRef::points(&[0, 1]))),
            ),
            false,
        );
        assert!(ok.passed, "{ok:?}");
        assert_eq!(ok.computed, "{0,1}");

        let wrong = evaluate(
            &subject,
            &Claim::new(
                "open",
                Check::Open {
                    space: Side::Second,
                    set: SetRef::named("A"),
                },
                Some(Expected::Bool(true)),
            ),
            false,
        );
        assert!(!wrong.passed);
        assert_eq!(wrong.duration_ms, None);
    }

    #[test]
    fn bad_references_fail_the_claim() {
        let subject = sierpinski_subject();
        let out = evaluate(
            &subject,
            &Claim::new(
                "x",
                Check::Countable {
                    set: SetRef::named("B"),
                },
                None,
            ),
            false,
        );
        assert!(!out.passed);
        assert!(out.computed.contains("unknown set `B`"));
        let out = evaluate(&subject, &Claim::new("m", Check::PairwiseOpenMap, None), false);
        assert!(out.computed.contains("needs a map"));
    }

    #[test]
    fn open_between_accepts_existence_or_witness() {
        let subject = sierpinski_subject();
        let check = Check::OpenBetween {
            space: Side::First,
            lower: SetRef::named("A"),
            upper: SetRef::points(&[0, 1]),
        };
        let exists = evaluate(
            &subject,
            &Claim::new("e", check.clone(), Some(Expected::Bool(true))),
            false,
        );
        assert!(exists.passed);
        let exact = evaluate(
            &subject,
            &Claim::new("w", check, Some(Expected::Set(SetRef::points(&[0])))),
            false,
        );
        assert!(exact.passed);
    }
}
