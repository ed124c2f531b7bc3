//! Schematic open families over cardinality-tagged atoms.
//!
//! A universe splits an abstract ground set into finitely many atoms, each
//! tagged as a single point, a countably infinite set or an uncountable set.
//! Representable sets are atom unions. A schematic family with region `R`
//! and mandatory points `P` denotes the open family
//!
//! ```text
//! {X, ∅} ∪ { C ∪ P : C a countable subset of R }
//! ```
//!
//! where `C` ranges over *all* countable point sets, not only atom unions.
//! Such a family is closed under countable unions and finite intersections
//! because `(C₁ ∪ P) ∩ (C₂ ∪ P) = (C₁ ∩ C₂) ∪ P` and a countable union of
//! countable sets is countable. When `R` holds an uncountable atom the family
//! is not closed under arbitrary unions, which is what separates these spaces
//! from topologies.
//!
//! Closure, interior and the open-set existentials are decided in closed form.
//! Each formula below accounts for `C` splitting atoms, so the answers are
//! exact statements about the full family evaluated on atom unions.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::backend::SpaceBackend;
use crate::finite::{self, FiniteSpace};
use crate::mask::{Mask, SymSet, MAX_CELLS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cardinality {
    /// Exactly one point.
    Singleton,
    CountablyInfinite,
    Uncountable,
}

impl Cardinality {
    pub fn is_countable(self) -> bool {
        !matches!(self, Cardinality::Uncountable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atom {
    pub id: String,
    pub cardinality: Cardinality,
    #[serde(default)]
    pub label: String,
}

impl Atom {
    pub fn new(id: &str, cardinality: Cardinality, label: &str) -> Self {
        Atom {
            id: id.to_owned(),
            cardinality,
            label: label.to_owned(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("universe has no atoms")]
    EmptyUniverse,
    #[error("universe has {0} atoms, at most {MAX_CELLS} are supported")]
    TooManyAtoms(usize),
    #[error("atom id `{0}` appears more than once")]
    DuplicateAtom(String),
    #[error("unknown atom id `{0}`")]
    UnknownAtom(String),
    #[error("region and mandatory points overlap in atoms {0:?}")]
    Overlap(Vec<String>),
    #[error("mandatory atoms {0:?} are not single points")]
    NonSingletonMandatory(Vec<String>),
    #[error("atoms {0:?} are not single points")]
    NotAllSingletons(Vec<String>),
}

/// An ordered list of pairwise disjoint atoms covering the ground set.
///
/// Disjointness and coverage are modelling obligations of whoever writes the
/// atoms down; only id uniqueness is checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomUniverse {
    atoms: Vec<Atom>,
}

impl AtomUniverse {
    pub fn new(atoms: Vec<Atom>) -> Result<Self, SymbolicError> {
        if atoms.is_empty() {
            return Err(SymbolicError::EmptyUniverse);
        }
        if atoms.len() > MAX_CELLS {
            return Err(SymbolicError::TooManyAtoms(atoms.len()));
        }
        let mut seen = HashSet::new();
        for atom in &atoms {
            if !seen.insert(atom.id.as_str()) {
                return Err(SymbolicError::DuplicateAtom(atom.id.clone()));
            }
        }
        Ok(AtomUniverse { atoms })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// The whole ground set.
    pub fn all(&self) -> SymSet {
        Mask::prefix(self.atoms.len())
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a.id == id)
    }

    pub fn atom(&self, index: usize) -> &Atom {
        &self.atoms[index]
    }

    /// The atom union named by `ids`.
    pub fn set<S: AsRef<str>>(&self, ids: &[S]) -> Result<SymSet, SymbolicError> {
        ids.iter()
            .map(|id| {
                self.index_of(id.as_ref())
                    .ok_or_else(|| SymbolicError::UnknownAtom(id.as_ref().to_owned()))
            })
            .collect()
    }

    pub fn ids(&self, s: SymSet) -> Vec<String> {
        s.iter().map(|i| self.atoms[i].id.clone()).collect()
    }

    fn with_cardinality(&self, pred: impl Fn(Cardinality) -> bool) -> SymSet {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(_, a)| pred(a.cardinality))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn singletons(&self) -> SymSet {
        self.with_cardinality(|c| c == Cardinality::Singleton)
    }

    pub fn uncountable(&self) -> SymSet {
        self.with_cardinality(|c| c == Cardinality::Uncountable)
    }

    pub fn is_countable(&self, s: SymSet) -> bool {
        !s.meets(self.uncountable())
    }
}

/// True iff `s` contains no uncountable atom.
pub fn is_countable(universe: &AtomUniverse, s: SymSet) -> bool {
    universe.is_countable(s)
}

/// Region `R` and mandatory single points `P` of a schematic open family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchematicFamily {
    region: SymSet,
    mandatory: SymSet,
}

impl SchematicFamily {
    pub fn new(universe: &AtomUniverse, region: SymSet, mandatory: SymSet) -> Result<Self, SymbolicError> {
        let outside = (region | mandatory) - universe.all();
        if let Some(i) = outside.first() {
            return Err(SymbolicError::UnknownAtom(format!("#{i}")));
        }
        let overlap = region & mandatory;
        if !overlap.is_empty() {
            return Err(SymbolicError::Overlap(universe.ids(overlap)));
        }
        let fat = mandatory - universe.singletons();
        if !fat.is_empty() {
            return Err(SymbolicError::NonSingletonMandatory(universe.ids(fat)));
        }
        Ok(SchematicFamily { region, mandatory })
    }

    pub fn from_ids<S: AsRef<str>>(
        universe: &AtomUniverse,
        region: &[S],
        mandatory: &[S],
    ) -> Result<Self, SymbolicError> {
        Self::new(universe, universe.set(region)?, universe.set(mandatory)?)
    }

    pub fn region(&self) -> SymSet {
        self.region
    }

    pub fn mandatory(&self) -> SymSet {
        self.mandatory
    }
}

/// A family described by atom ids, as written in catalog entries and files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub region: Vec<String>,
    #[serde(default)]
    pub mandatory: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub subject: String,
    pub message: String,
    pub atoms: Vec<String>,
}

/// Check a universe and named families, collecting every violation.
pub fn validate_universe_and_families(atoms: &[Atom], families: &[(String, FamilySpec)]) -> Vec<Diagnostic> {
    let universe = match AtomUniverse::new(atoms.to_vec()) {
        Ok(u) => u,
        Err(e) => {
            let atoms = match &e {
                SymbolicError::DuplicateAtom(id) => vec![id.clone()],
                _ => Vec::new(),
            };
            return vec![Diagnostic {
                subject: "universe".into(),
                message: e.to_string(),
                atoms,
            }];
        }
    };
    let mut out = Vec::new();
    for (name, spec) in families {
        let mut resolve = |ids: &[String]| -> SymSet {
            let mut s = Mask::EMPTY;
            for id in ids {
                match universe.index_of(id) {
                    Some(i) => s.insert(i),
                    None => out.push(Diagnostic {
                        subject: name.clone(),
                        message: SymbolicError::UnknownAtom(id.clone()).to_string(),
                        atoms: vec![id.clone()],
                    }),
                }
            }
            s
        };
        let region = resolve(&spec.region);
        let mandatory = resolve(&spec.mandatory);
        let overlap = region & mandatory;
        if !overlap.is_empty() {
            let ids = universe.ids(overlap);
            out.push(Diagnostic {
                subject: name.clone(),
                message: SymbolicError::Overlap(ids.clone()).to_string(),
                atoms: ids,
            });
        }
        let fat = mandatory - universe.singletons();
        if !fat.is_empty() {
            let ids = universe.ids(fat);
            out.push(Diagnostic {
                subject: name.clone(),
                message: SymbolicError::NonSingletonMandatory(ids.clone()).to_string(),
                atoms: ids,
            });
        }
    }
    out
}

/// A schematic family on a ground set of atoms.
///
/// The ground set is the whole universe unless the space is a trace.
#[derive(Debug, Clone)]
pub struct SchematicSpace {
    universe: Arc<AtomUniverse>,
    ground: SymSet,
    family: SchematicFamily,
}

impl PartialEq for SchematicSpace {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe)
            && self.ground == other.ground
            && self.family == other.family
    }
}

impl SchematicSpace {
    pub fn new(universe: Arc<AtomUniverse>, family: SchematicFamily) -> Self {
        let ground = universe.all();
        SchematicSpace {
            universe,
            ground,
            family,
        }
    }

    pub fn universe(&self) -> &Arc<AtomUniverse> {
        &self.universe
    }

    pub fn family(&self) -> SchematicFamily {
        self.family
    }

    fn region(&self) -> SymSet {
        self.family.region
    }

    fn mandatory(&self) -> SymSet {
        self.family.mandatory
    }

    fn countable(&self, s: SymSet) -> bool {
        self.universe.is_countable(s)
    }

    /// `s = X`, `s = ∅`, or `s = C ∪ P` with `C` a countable part of `R`.
    pub fn is_open(&self, s: SymSet) -> bool {
        if s == self.ground || s.is_empty() {
            return true;
        }
        let (r, p) = (self.region(), self.mandatory());
        p.is_subset(s) && (s - p).is_subset(r) && self.countable(s - p)
    }

    /// The closed supersets of a nonempty `s` are `X` and `X − (C ∪ P)` with
    /// `(C ∪ P) ∩ s = ∅`. If `P` meets `s` only `X` remains; otherwise every
    /// point of `R − s` lies in some admissible `C`, so the intersection is
    /// `X − ((R − s) ∪ P)`.
    pub fn closure(&self, s: SymSet) -> SymSet {
        if s.is_empty() {
            return Mask::EMPTY;
        }
        if self.mandatory().meets(s) {
            return self.ground;
        }
        self.ground - ((self.region() - s) | self.mandatory())
    }

    /// Every open `C ∪ P` inside `s ≠ X` needs `P ⊆ s`, and the countable
    /// `C ⊆ R ∩ s` sweep out all of `R ∩ s`.
    pub fn interior(&self, s: SymSet) -> SymSet {
        if s == self.ground {
            return self.ground;
        }
        if self.mandatory().is_subset(s) {
            (self.region() & s) | self.mandatory()
        } else {
            Mask::EMPTY
        }
    }

    /// Materialise the family as an explicit finite space.
    ///
    /// Only possible when every atom of the ground set is a single point, in
    /// which case every subset of the region is countable.
    pub fn materialize(&self) -> Result<FiniteSpace, SymbolicError> {
        let fat = self.ground - self.universe.singletons();
        if !fat.is_empty() {
            return Err(SymbolicError::NotAllSingletons(self.universe.ids(fat)));
        }
        let mut opens = vec![Mask::EMPTY, self.ground];
        opens.extend(self.region().submasks().map(|c| c | self.mandatory()));
        Ok(finite::validate_on(self.ground, &opens).expect("schematic families satisfy the open-set axioms"))
    }
}

impl SpaceBackend for SchematicSpace {
    fn ground(&self) -> Mask {
        self.ground
    }

    fn is_open(&self, s: Mask) -> bool {
        SchematicSpace::is_open(self, s)
    }

    fn closure(&self, s: Mask) -> Mask {
        SchematicSpace::closure(self, s)
    }

    fn interior(&self, s: Mask) -> Mask {
        SchematicSpace::interior(self, s)
    }

    /// `∅` when `lower` is empty; otherwise the least member `C ∪ P` above
    /// `lower` is `lower ∪ P`, which exists iff `lower − P` is a countable part
    /// of `R`; failing that only `X` can serve.
    fn open_witness(&self, lower: Mask, upper: Mask) -> Option<Mask> {
        if lower.is_empty() {
            return Some(Mask::EMPTY);
        }
        let (r, p) = (self.region(), self.mandatory());
        let core = lower - p;
        if p.is_subset(upper) && core.is_subset(r) && self.countable(core) {
            return Some(lower | p);
        }
        (upper == self.ground).then_some(self.ground)
    }

    /// Besides the trivial cases `a = ∅` and `a = X`, a witness is a nonempty
    /// `O = C ∪ P_o ⊆ a` with `C` a countable part of `R_o ∩ a`. Either `O`
    /// meets `P_c`, making its closure `X`, or the closure is
    /// `X − ((R_c − O) ∪ P_c)` and must contain `a`, which forces
    /// `a ∩ P_c = ∅` and `a ∩ R_c ⊆ O`.
    fn semiopen_in(opener: &Self, closer: &Self, a: Mask) -> bool {
        if a.is_empty() || a == opener.ground {
            return true;
        }
        let (ro, po) = (opener.region(), opener.mandatory());
        let (rc, pc) = (closer.region(), closer.mandatory());
        if !po.is_subset(a) {
            return false;
        }
        let available = ro & a;
        if pc.meets(po | available) {
            return true;
        }
        let needed = (a & rc) - po;
        !a.meets(pc) && needed.is_subset(ro) && opener.countable(needed) && !(needed | po | available).is_empty()
    }

    /// Nontrivial closed supersets are `X − (C ∪ P_c)` with `C` a countable
    /// part of `R_c − a`, and exist iff `P_c` misses `a` and `P_c ∪ (R_c − a)`
    /// is nonempty. Each interior is `(R_o ∩ G) ∪ P_o` when `P_o ⊆ G`, so
    /// all of them absorb `a` iff `P_o` avoids every removable point and
    /// `a ⊆ R_o ∪ P_o`.
    fn closed_supersets_absorbed(closer: &Self, opener: &Self, a: Mask) -> bool {
        if a.is_empty() {
            return true;
        }
        let (ro, po) = (opener.region(), opener.mandatory());
        let (rc, pc) = (closer.region(), closer.mandatory());
        let removable = pc | (rc - a);
        if pc.meets(a) || removable.is_empty() {
            return true;
        }
        !po.meets(removable) && a.is_subset(ro | po)
    }

    fn subspace(&self, y: Mask) -> Self {
        let y = y & self.ground;
        SchematicSpace {
            universe: Arc::clone(&self.universe),
            ground: y,
            family: SchematicFamily {
                region: self.region() & y,
                mandatory: self.mandatory() & y,
            },
        }
    }

    fn open_traces(&self, t: Mask) -> Vec<Mask> {
        debug_assert!(
            t.is_subset(self.universe.singletons()),
            "traces are only enumerable on single-point atoms"
        );
        let t = t & self.ground;
        let base = self.mandatory() & t;
        let mut traces = vec![Mask::EMPTY, t];
        traces.extend((self.region() & t).submasks().map(|s| base | s));
        traces.sort_by(|a, b| a.canonical_cmp(b));
        traces.dedup();
        traces
    }

    fn open_footprints(&self) -> Vec<Mask> {
        let mut prints = vec![Mask::EMPTY, self.ground];
        prints.extend(self.region().submasks().map(|s| self.mandatory() | s));
        prints.sort_by(|a, b| a.canonical_cmp(b));
        prints.dedup();
        prints
    }

    fn algebra_is_exact(&self) -> bool {
        self.ground.is_subset(self.universe.singletons())
    }

    fn is_countable(&self, s: Mask) -> bool {
        self.countable(s)
    }

    fn cell_name(&self, cell: usize) -> String {
        self.universe.atom(cell).id.clone()
    }

    fn cell_index(&self, name: &str) -> Option<usize> {
        self.universe.index_of(name).filter(|&i| self.ground.contains(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Cardinality::*;

    /// The single space of the irrationals-in-[1,2] example.
    fn irrationals_space() -> (SchematicSpace, SymSet, SymSet) {
        let u = Arc::new(
            AtomUniverse::new(vec![
                Atom::new("sqrt2", Singleton, "√2"),
                Atom::new("irr", Uncountable, "irrationals in [1,2] other than √2"),
                Atom::new("q", CountablyInfinite, "rationals in [1,2]"),
            ])
            .unwrap(),
        );
        let fam = SchematicFamily::from_ids(&u, &["sqrt2", "irr"], &[]).unwrap();
        let a = u.set(&["sqrt2", "irr"]).unwrap();
        let b = u.set(&["irr"]).unwrap();
        (SchematicSpace::new(u, fam), a, b)
    }

    #[test]
    fn countability_follows_atom_tags() {
        let (s, a, _) = irrationals_space();
        let u = s.universe();
        assert!(is_countable(u, u.set(&["q"]).unwrap()));
        assert!(!is_countable(u, a));
        assert!(is_countable(u, Mask::EMPTY));
    }

    #[test]
    fn closure_of_irrationals_without_sqrt2() {
        let (s, _, b) = irrationals_space();
        let u = s.universe().clone();
        assert_eq!(s.closure(b), u.all().without(u.index_of("sqrt2").unwrap()));
        assert_eq!(s.interior(s.closure(b)), b);
        assert_eq!(s.closure(Mask::EMPTY), Mask::EMPTY);
    }

    #[test]
    fn openness_needs_countable_core() {
        let (s, a, _) = irrationals_space();
        let u = s.universe().clone();
        assert!(s.is_open(u.set(&["sqrt2"]).unwrap()));
        assert!(!s.is_open(a));
        assert!(!s.is_open(u.set(&["q"]).unwrap()));
        assert!(s.is_open(u.all()));
    }

    #[test]
    fn family_invariants_are_enforced() {
        let (s, _, _) = irrationals_space();
        let u = s.universe();
        assert_eq!(
            SchematicFamily::from_ids(u, &["sqrt2", "irr"], &["sqrt2"]).unwrap_err(),
            SymbolicError::Overlap(vec!["sqrt2".into()])
        );
        assert_eq!(
            SchematicFamily::from_ids(u, &["sqrt2"], &["q"]).unwrap_err(),
            SymbolicError::NonSingletonMandatory(vec!["q".into()])
        );
        assert_eq!(
            SchematicFamily::from_ids(u, &["nope"], &[]).unwrap_err(),
            SymbolicError::UnknownAtom("nope".into())
        );
    }

    #[test]
    fn universe_rejects_duplicates() {
        let err = AtomUniverse::new(vec![Atom::new("a", Singleton, ""), Atom::new("a", Uncountable, "")]).unwrap_err();
        assert_eq!(err, SymbolicError::DuplicateAtom("a".into()));
        assert_eq!(AtomUniverse::new(vec![]).unwrap_err(), SymbolicError::EmptyUniverse);
    }

    #[test]
    fn validation_collects_diagnostics() {
        let atoms = vec![
            Atom::new("zero", Singleton, "0"),
            Atom::new("one", Singleton, "1"),
            Atom::new("q01", CountablyInfinite, "rationals in (0,1)"),
            Atom::new("sqrt2", Singleton, "√2"),
            Atom::new("rest", Uncountable, "everything else"),
        ];
        let good = FamilySpec {
            region: vec!["zero".into(), "one".into(), "q01".into()],
            mandatory: vec!["sqrt2".into()],
        };
        assert!(validate_universe_and_families(&atoms, &[("tau1".into(), good)]).is_empty());

        let overlapping = FamilySpec {
            region: vec!["zero".into(), "sqrt2".into()],
            mandatory: vec!["sqrt2".into()],
        };
        let fat = FamilySpec {
            region: vec![],
            mandatory: vec!["q01".into()],
        };
        let diags = validate_universe_and_families(&atoms, &[("bad1".into(), overlapping), ("bad2".into(), fat)]);
        assert_eq!(diags.len(), 2);
        assert_eq!(diags[0].subject, "bad1");
        assert_eq!(diags[0].atoms, vec!["sqrt2".to_string()]);
        assert_eq!(diags[1].atoms, vec!["q01".to_string()]);
    }

    #[test]
    fn materialize_requires_single_points() {
        let (s, _, _) = irrationals_space();
        assert!(matches!(s.materialize(), Err(SymbolicError::NotAllSingletons(_))));
    }
}
