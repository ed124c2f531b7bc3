//! Encoded worked examples with their expected verdicts.
//!
//! Every entry is a schematic bispace (or a map between two) over a small
//! universe of cardinality-tagged atoms. Sets indexed by uncountably many
//! points, such as a union of singletons over all irrationals, are checked as
//! a pair of claims: one on a designated single-point atom standing for any
//! member, one on the full union.

pub mod claims;
pub mod report;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::exec::Execution;
use crate::maps::CellMap;
use crate::mask::Mask;
use crate::props::{Bispace, IndexPair, Side};
use crate::symbolic::{Atom, AtomUniverse, Cardinality, SchematicFamily, SchematicSpace};

pub use claims::{evaluate, CellRef, Check, Claim, Expected, MapSubject, Realm, SetRef, Subject};
pub use report::{ClaimOutcome, Report, Summary};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no catalog entry `{0}`")]
    UnknownEntry(String),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    /// Where the construction comes from and how it was cut into atoms.
    pub provenance: String,
    pub universe: Arc<AtomUniverse>,
    pub subject: Subject<SchematicSpace>,
    pub claims: Vec<Claim>,
}

pub const ENTRY_IDS: [&str; 9] = [
    "ex-3.1", "ex-3.2", "ex-3.3", "ex-3.4", "ex-3.5", "ex-3.6", "ex-3.7", "ex-3.8", "ex-4.1",
];

pub fn build_example(id: &str) -> Result<CatalogEntry, CatalogError> {
    Ok(match id {
        "ex-3.1" => ex_3_1(),
        "ex-3.2" => ex_3_2(),
        "ex-3.3" => ex_3_3(),
        "ex-3.4" => ex_3_4(),
        "ex-3.5" => ex_3_5(),
        "ex-3.6" => ex_3_6(),
        "ex-3.7" => ex_3_7(),
        "ex-3.8" => ex_3_8(),
        "ex-4.1" => ex_4_1(),
        other => return Err(CatalogError::UnknownEntry(other.to_string())),
    })
}

pub fn entries() -> Vec<CatalogEntry> {
    ENTRY_IDS
        .iter()
        .map(|id| build_example(id).expect("listed ids are known"))
        .collect()
}

pub fn verify_entry(entry: &CatalogEntry, timed: bool) -> Report {
    Report {
        entry: entry.id.to_string(),
        outcomes: entry
            .claims
            .iter()
            .map(|c| evaluate(&entry.subject, c, timed))
            .collect(),
    }
}

/// Verifies entries one per worker; reports come back in entry order.
pub fn verify_all(entries: &[CatalogEntry], exec: Execution, timed: bool) -> Vec<Report> {
    exec.install(|| exec.map(entries, |e| verify_entry(e, timed)))
}

/// The first entry with one expectation inverted. It must fail.
pub fn negative_control() -> CatalogEntry {
    let mut entry = ex_3_1();
    entry.id = "negative-control";
    entry.provenance = "copy of ex-3.1 with the verdict on B's preopenness inverted".into();
    let claim = entry
        .claims
        .iter_mut()
        .find(|c| c.id == "B-not-preopen")
        .expect("ex-3.1 states B is not preopen");
    claim.expected = Some(Expected::Bool(true));
    entry
}

// ---- construction helpers

use Cardinality::{CountablyInfinite as Countable, Singleton, Uncountable};

fn universe(atoms: &[(&str, Cardinality, &str)]) -> Arc<AtomUniverse> {
    Arc::new(
        AtomUniverse::new(atoms.iter().map(|&(id, c, label)| Atom::new(id, c, label)).collect())
            .expect("catalog universes are well formed"),
    )
}

fn space(u: &Arc<AtomUniverse>, region: &[&str], mandatory: &[&str]) -> SchematicSpace {
    let family = SchematicFamily::from_ids(u, region, mandatory).expect("catalog families are well formed");
    SchematicSpace::new(Arc::clone(u), family)
}

fn sets(u: &AtomUniverse, named: &[(&str, &[&str])]) -> BTreeMap<String, Mask> {
    let mut out: BTreeMap<String, Mask> = named
        .iter()
        .map(|&(name, ids)| (name.to_string(), u.set(ids).expect("catalog sets name known atoms")))
        .collect();
    out.insert("X".into(), u.all());
    out
}

fn subject(u: &Arc<AtomUniverse>, bi: Bispace<SchematicSpace>, named: &[(&str, &[&str])]) -> Subject<SchematicSpace> {
    Subject {
        bispace: bi,
        sets: sets(u, named),
        map: None,
    }
}

fn holds(id: &str, check: Check, value: bool) -> Claim {
    Claim::new(id, check, Some(Expected::Bool(value)))
}

fn equals(id: &str, check: Check, set: &str) -> Claim {
    Claim::new(id, check, Some(Expected::Set(SetRef::named(set))))
}

fn named(name: &str) -> SetRef {
    SetRef::named(name)
}

const ONE: Side = Side::First;
const TWO: Side = Side::Second;
const P12: IndexPair = IndexPair::OneTwo;
const P21: IndexPair = IndexPair::TwoOne;

// ---- entries

fn ex_3_1() -> CatalogEntry {
    let u = universe(&[
        ("sqrt2", Singleton, "√2"),
        ("irr", Uncountable, "irrationals of [1,2] other than √2"),
        ("q", Countable, "rationals of [1,2]"),
    ]);
    let tau = space(&u, &["sqrt2", "irr"], &[]);
    let subject = subject(
        &u,
        Bispace::doubled(tau),
        &[("A", &["sqrt2", "irr"]), ("B", &["irr"]), ("clB", &["irr", "q"])],
    );
    let claims = vec![
        holds("A-uncountable", Check::Countable { set: named("A") }, false),
        holds(
            "A-not-open",
            Check::Open {
                space: ONE,
                set: named("A"),
            },
            false,
        ),
        equals(
            "A-dense",
            Check::Closure {
                space: ONE,
                set: named("A"),
            },
            "X",
        ),
        equals(
            "A-only-X-between",
            Check::OpenBetween {
                space: ONE,
                lower: named("A"),
                upper: named("X"),
            },
            "X",
        ),
        holds(
            "A-preopen",
            Check::Preopen {
                space: ONE,
                set: named("A"),
            },
            true,
        ),
        holds(
            "A-weakly-preopen",
            Check::WeaklyPreopen {
                space: ONE,
                set: named("A"),
            },
            true,
        ),
        equals(
            "B-closure",
            Check::Closure {
                space: ONE,
                set: named("B"),
            },
            "clB",
        ),
        equals(
            "B-interior-of-closure",
            Check::Interior {
                space: ONE,
                set: named("clB"),
            },
            "B",
        ),
        holds(
            "B-weakly-preopen",
            Check::WeaklyPreopen {
                space: ONE,
                set: named("B"),
            },
            true,
        ),
        holds(
            "B-no-open-between",
            Check::OpenBetween {
                space: ONE,
                lower: named("B"),
                upper: named("clB"),
            },
            false,
        ),
        holds(
            "B-not-preopen",
            Check::Preopen {
                space: ONE,
                set: named("B"),
            },
            false,
        ),
    ];
    CatalogEntry {
        id: "ex-3.1",
        provenance: "One σ-space on [1,2] whose nontrivial opens are the countable sets of \
                     irrationals, taken twice as a bispace. A is all irrationals; B drops √2, \
                     which is kept as its own atom so B is a union of atoms. B is weakly \
                     preopen without being preopen."
            .into(),
        universe: u,
        subject,
        claims,
    }
}

fn universe_3_2() -> Arc<AtomUniverse> {
    universe(&[
        ("s", Singleton, "a designated irrational of [0,1]"),
        ("irr01", Uncountable, "the other irrationals of [0,1]"),
        ("irr12", Uncountable, "irrationals of (1,2]"),
        ("q01", Countable, "rationals of [0,1]"),
        ("q12", Countable, "rationals of (1,2]"),
    ])
}

fn bispace_3_2(u: &Arc<AtomUniverse>) -> Bispace<SchematicSpace> {
    Bispace::new(space(u, &["s", "irr01"], &[]), space(u, &["irr12"], &[]))
        .expect("both families live on the same universe")
}

const SETS_3_2: &[(&str, &[&str])] = &[
    ("A", &["s", "irr01"]),
    ("S", &["s"]),
    ("cl2A", &["s", "irr01", "q01", "q12"]),
    ("Ac", &["irr12", "q01", "q12"]),
];

fn ex_3_2() -> CatalogEntry {
    let u = universe_3_2();
    let subject = subject(&u, bispace_3_2(&u), SETS_3_2);
    let claims = vec![
        holds("A-uncountable", Check::Countable { set: named("A") }, false),
        holds(
            "A-not-tau1-open",
            Check::Open {
                space: ONE,
                set: named("A"),
            },
            false,
        ),
        equals(
            "A-tau2-closure",
            Check::Closure {
                space: TWO,
                set: named("A"),
            },
            "cl2A",
        ),
        holds(
            "no-tau1-open-between",
            Check::OpenBetween {
                space: ONE,
                lower: named("A"),
                upper: named("cl2A"),
            },
            false,
        ),
        holds(
            "A-not-12-preopen",
            Check::IjPreopen {
                pair: P12,
                set: named("A"),
            },
            false,
        ),
        equals(
            "tau1-interior",
            Check::Interior {
                space: ONE,
                set: named("cl2A"),
            },
            "A",
        ),
        holds(
            "A-12-weakly-preopen",
            Check::IjWeaklyPreopen {
                pair: P12,
                set: named("A"),
            },
            true,
        ),
        holds(
            "A-not-pairwise-preopen",
            Check::PairwisePreopen { set: named("A") },
            false,
        ),
        holds(
            "complement-not-12-preclosed",
            Check::IjPreclosed {
                pair: P12,
                set: named("Ac"),
            },
            false,
        ),
    ];
    CatalogEntry {
        id: "ex-3.2",
        provenance: "X = [0,2]; τ1 opens are countable sets of irrationals of [0,1], τ2 opens \
                     countable sets of irrationals of (1,2]. A, the irrationals of [0,1], meets \
                     the weak condition A ⊆ τ1 int τ2 cl A but has no τ1-open set between A and \
                     τ2 cl A, so the two conditions come apart outside topologies."
            .into(),
        universe: u,
        subject,
        claims,
    }
}

fn ex_3_3() -> CatalogEntry {
    let u = universe(&[
        ("sqrt3", Singleton, "√3"),
        ("three_halves", Singleton, "3/2"),
        ("five_halves", Singleton, "5/2"),
        ("irr_lo", Uncountable, "irrationals of [1,√3)"),
        ("irr_hi", Uncountable, "irrationals of (√3,3]"),
        ("q", Countable, "rationals of [1,3] other than 3/2 and 5/2"),
    ]);
    let bi = Bispace::new(
        space(&u, &["irr_lo", "sqrt3"], &["five_halves"]),
        space(&u, &["irr_hi", "sqrt3"], &["three_halves"]),
    )
    .expect("same universe");
    let subject = subject(
        &u,
        bi,
        &[
            ("A", &["sqrt3"]),
            ("cl1A", &["sqrt3", "three_halves", "irr_hi", "q"]),
            ("cl2A", &["sqrt3", "five_halves", "irr_lo", "q"]),
            ("U", &["sqrt3", "five_halves"]),
            ("V", &["sqrt3", "three_halves"]),
        ],
    );
    let claims = vec![
        equals(
            "tau1-closure",
            Check::Closure {
                space: ONE,
                set: named("A"),
            },
            "cl1A",
        ),
        equals(
            "tau2-closure",
            Check::Closure {
                space: TWO,
                set: named("A"),
            },
            "cl2A",
        ),
        holds(
            "U-tau1-open",
            Check::Open {
                space: ONE,
                set: named("U"),
            },
            true,
        ),
        holds(
            "V-tau2-open",
            Check::Open {
                space: TWO,
                set: named("V"),
            },
            true,
        ),
        equals(
            "12-witness",
            Check::OpenBetween {
                space: ONE,
                lower: named("A"),
                upper: named("cl2A"),
            },
            "U",
        ),
        equals(
            "21-witness",
            Check::OpenBetween {
                space: TWO,
                lower: named("A"),
                upper: named("cl1A"),
            },
            "V",
        ),
        holds(
            "A-12-preopen",
            Check::IjPreopen {
                pair: P12,
                set: named("A"),
            },
            true,
        ),
        holds(
            "A-21-preopen",
            Check::IjPreopen {
                pair: P21,
                set: named("A"),
            },
            true,
        ),
        holds("A-pairwise-preopen", Check::PairwisePreopen { set: named("A") }, true),
        holds(
            "A-not-tau1-preopen",
            Check::Preopen {
                space: ONE,
                set: named("A"),
            },
            false,
        ),
        holds(
            "A-not-tau2-preopen",
            Check::Preopen {
                space: TWO,
                set: named("A"),
            },
            false,
        ),
    ];
    CatalogEntry {
        id: "ex-3.3",
        provenance: "X = [1,3]; τ1 opens are countable sets of irrationals of [1,√3] together \
                     with 5/2, τ2 opens countable sets of irrationals of [√3,3] together with \
                     3/2. A = {√3} is preopen for both index pairs but preopen in neither \
                     single space. √3 is placed in both regions, which is what the stated \
                     closure values require."
            .into(),
        universe: u,
        subject,
        claims,
    }
}

fn universe_3_4() -> Arc<AtomUniverse> {
    universe(&[
        ("zero", Singleton, "0"),
        ("one", Singleton, "1"),
        ("q01", Countable, "rationals of (0,1)"),
        ("sqrt2", Singleton, "√2"),
        ("sqrt3", Singleton, "√3"),
        ("irr02", Uncountable, "irrationals of [0,2] other than √2 and √3"),
        ("irr23", Uncountable, "irrationals of (2,3]"),
        ("q13", Countable, "rationals of (1,3]"),
    ])
}

fn bispace_3_4(u: &Arc<AtomUniverse>) -> Bispace<SchematicSpace> {
    Bispace::new(space(u, &["zero", "one", "q01"], &["sqrt2"]), space(u, &["irr23"], &[])).expect("same universe")
}

const SETS_3_4: &[(&str, &[&str])] = &[
    ("A", &["zero", "one"]),
    ("B", &["zero", "one", "sqrt3"]),
    ("U", &["zero", "one", "sqrt2"]),
    ("cl2A", &["zero", "one", "q01", "sqrt2", "sqrt3", "irr02", "q13"]),
];

fn ex_3_4() -> CatalogEntry {
    let u = universe_3_4();
    let subject = subject(&u, bispace_3_4(&u), SETS_3_4);
    let claims = vec![
        equals(
            "A-tau2-closure",
            Check::Closure {
                space: TWO,
                set: named("A"),
            },
            "cl2A",
        ),
        holds(
            "U-tau1-open",
            Check::Open {
                space: ONE,
                set: named("U"),
            },
            true,
        ),
        equals(
            "witness",
            Check::OpenBetween {
                space: ONE,
                lower: named("A"),
                upper: named("cl2A"),
            },
            "U",
        ),
        holds(
            "A-12-preopen",
            Check::IjPreopen {
                pair: P12,
                set: named("A"),
            },
            true,
        ),
        holds(
            "A-not-tau1-open",
            Check::Open {
                space: ONE,
                set: named("A"),
            },
            false,
        ),
    ];
    CatalogEntry {
        id: "ex-3.4",
        provenance: "X = [0,3]; τ1 opens are countable sets of rationals of [0,1] together \
                     with √2, τ2 opens countable sets of irrationals of (2,3]. A = {0,1} sits \
                     inside the τ1-open {0,1,√2} within τ2 cl A, so it is (1,2)-preopen \
                     without being τ1-open."
            .into(),
        universe: u,
        subject,
        claims,
    }
}

fn ex_3_5() -> CatalogEntry {
    let u = universe_3_4();
    let subject = subject(&u, bispace_3_4(&u), SETS_3_4);
    let claims = vec![
        holds(
            "B-not-12-preopen",
            Check::IjPreopen {
                pair: P12,
                set: named("B"),
            },
            false,
        ),
        holds(
            "B-not-12-semiopen",
            Check::IjSemiopen {
                pair: P12,
                set: named("B"),
            },
            false,
        ),
        holds(
            "A-12-preopen",
            Check::IjPreopen {
                pair: P12,
                set: named("A"),
            },
            true,
        ),
        holds(
            "A-certifies-B",
            Check::SemipreopenCertificate {
                pair: P12,
                witness: named("A"),
                set: named("B"),
            },
            true,
        ),
        holds(
            "B-12-semipreopen",
            Check::IjSemipreopen {
                pair: P12,
                set: named("B"),
            },
            true,
        ),
    ];
    CatalogEntry {
        id: "ex-3.5",
        provenance: "Same bispace as ex-3.4. B = {0,1,√3} is not (1,2)-preopen, but the \
                     preopen A = {0,1} satisfies A ⊆ B ⊆ τ2 cl A, so B is (1,2)-semipreopen. \
                     The search reports the smallest certificate, {0}; the claim on A checks \
                     the stated one directly."
            .into(),
        universe: u,
        subject,
        claims,
    }
}

fn ex_3_6() -> CatalogEntry {
    let u = universe_3_2();
    let subject = subject(&u, bispace_3_2(&u), SETS_3_2);
    let claims = vec![
        holds(
            "closed-supersets-absorb-A",
            Check::ClosedSupersetsInInterior {
                pair: P12,
                set: named("A"),
            },
            true,
        ),
        holds(
            "A-not-12-preopen",
            Check::IjPreopen {
                pair: P12,
                set: named("A"),
            },
            false,
        ),
    ];
    CatalogEntry {
        id: "ex-3.6",
        provenance: "Bispace of ex-3.2. Every τ2-closed G ⊇ A has A ⊆ τ1 int G, yet A is not \
                     (1,2)-preopen, so that interior condition does not characterise \
                     preopenness in a bispace."
            .into(),
        universe: u,
        subject,
        claims,
    }
}

fn ex_3_7() -> CatalogEntry {
    let u = universe_3_2();
    let subject = subject(&u, bispace_3_2(&u), SETS_3_2);
    let claims = vec![
        holds(
            "singleton-tau1-open",
            Check::Open {
                space: ONE,
                set: named("S"),
            },
            true,
        ),
        holds(
            "singleton-12-preopen",
            Check::IjPreopen {
                pair: P12,
                set: named("S"),
            },
            true,
        ),
        holds(
            "union-not-12-preopen",
            Check::IjPreopen {
                pair: P12,
                set: named("A"),
            },
            false,
        ),
    ];
    CatalogEntry {
        id: "ex-3.7",
        provenance: "Bispace of ex-3.2. Each irrational singleton of [0,1] is (1,2)-preopen, \
                     but their union A is not: preopen sets are not closed under arbitrary \
                     unions. The singleton s stands for every member of the family and A is \
                     the full union."
            .into(),
        universe: u,
        subject,
        claims,
    }
}

fn ex_3_8() -> CatalogEntry {
    let u = universe(&[
        ("s", Singleton, "a designated irrational of [0,1]"),
        ("irr01", Uncountable, "the other irrationals of [0,1]"),
        ("three_halves", Singleton, "3/2"),
        ("q", Countable, "rationals of [0,3] other than 3/2"),
        ("irr12", Uncountable, "irrationals of (1,2)"),
        ("irr23", Uncountable, "irrationals of [2,3]"),
    ]);
    let bi = Bispace::new(
        space(&u, &["s", "irr01"], &["three_halves"]),
        space(&u, &["irr23"], &[]),
    )
    .expect("same universe");
    let subject = subject(
        &u,
        bi,
        &[
            ("S", &["s"]),
            ("W", &["s", "three_halves"]),
            ("A", &["s", "irr01"]),
            ("cl2", &["s", "irr01", "three_halves", "q", "irr12"]),
        ],
    );
    let claims = vec![
        holds(
            "singleton-not-tau1-open",
            Check::Open {
                space: ONE,
                set: named("S"),
            },
            false,
        ),
        equals(
            "singleton-tau2-closure",
            Check::Closure {
                space: TWO,
                set: named("S"),
            },
            "cl2",
        ),
        holds(
            "W-tau1-open",
            Check::Open {
                space: ONE,
                set: named("W"),
            },
            true,
        ),
        equals(
            "singleton-witness",
            Check::OpenBetween {
                space: ONE,
                lower: named("S"),
                upper: named("cl2"),
            },
            "W",
        ),
        holds(
            "singleton-12-preopen",
            Check::IjPreopen {
                pair: P12,
                set: named("S"),
            },
            true,
        ),
        equals(
            "union-tau2-closure",
            Check::Closure {
                space: TWO,
                set: named("A"),
            },
            "cl2",
        ),
        holds(
            "union-no-open-between",
            Check::OpenBetween {
                space: ONE,
                lower: named("A"),
                upper: named("cl2"),
            },
            false,
        ),
        holds(
            "union-not-12-preopen",
            Check::IjPreopen {
                pair: P12,
                set: named("A"),
            },
            false,
        ),
    ];
    CatalogEntry {
        id: "ex-3.8",
        provenance: "X = [0,3]; τ1 opens are countable sets of irrationals of [0,1] together \
                     with 3/2, τ2 opens countable sets of irrationals of [2,3]. Singletons of \
                     irrationals in [0,1] are no longer τ1-open but are still (1,2)-preopen \
                     through {x, 3/2}; their union is not. s stands for every member and A is \
                     the full union."
            .into(),
        universe: u,
        subject,
        claims,
    }
}

fn ex_4_1() -> CatalogEntry {
    let x = universe(&[
        ("x0", Singleton, "a designated irrational of [0,1]"),
        ("irr", Uncountable, "the other irrationals of [0,1]"),
        ("q", Countable, "rationals of [0,1]"),
    ]);
    let y = universe(&[
        ("sqrt2", Singleton, "√2"),
        ("three_halves", Singleton, "3/2"),
        ("irr_y", Uncountable, "irrationals of [1,2] other than √2"),
        ("q_y", Countable, "rationals of [1,2] other than 3/2"),
    ]);
    let source = Bispace::doubled(space(&x, &["x0", "irr"], &[]));
    let target = Bispace::doubled(space(&y, &["sqrt2", "irr_y"], &[]));
    let map = CellMap::atoms(&x, &y, &[("x0", "sqrt2"), ("irr", "sqrt2"), ("q", "three_halves")])
        .expect("every source atom has a single-point image");
    let mut subject = subject(
        &x,
        source,
        &[
            ("Q", &["q"]),
            ("x0", &["x0"]),
            ("irrationals", &["x0", "irr"]),
            ("mixed", &["q", "x0"]),
        ],
    );
    subject.map = Some(MapSubject {
        map,
        target,
        sets: sets(&y, &[("root2", &["sqrt2"]), ("half3", &["three_halves"])]),
    });
    let claims = vec![
        equals("root2-preimage", Check::Preimage { set: named("root2") }, "irrationals"),
        holds(
            "preimage-not-open",
            Check::Open {
                space: ONE,
                set: named("irrationals"),
            },
            false,
        ),
        holds("not-continuous", Check::PairwiseContinuous, false),
        equals(
            "case-I-closure",
            Check::Closure {
                space: ONE,
                set: named("Q"),
            },
            "Q",
        ),
        equals("case-I-image", Check::Image { set: named("Q") }, "half3"),
        holds(
            "case-I-preserved",
            Check::ClosurePreserving {
                space: ONE,
                set: named("Q"),
            },
            true,
        ),
        equals(
            "case-II-closure",
            Check::Closure {
                space: ONE,
                set: named("x0"),
            },
            "mixed",
        ),
        holds(
            "case-II-preserved",
            Check::ClosurePreserving {
                space: ONE,
                set: named("x0"),
            },
            true,
        ),
        holds(
            "case-II-all-irrationals",
            Check::ClosurePreserving {
                space: ONE,
                set: named("irrationals"),
            },
            true,
        ),
        equals(
            "case-III-closure",
            Check::Closure {
                space: ONE,
                set: named("mixed"),
            },
            "mixed",
        ),
        holds(
            "case-III-preserved",
            Check::ClosurePreserving {
                space: ONE,
                set: named("mixed"),
            },
            true,
        ),
        holds("preserved-everywhere", Check::ClosurePreservingAll { space: ONE }, true),
        holds("precontinuous", Check::PairwisePrecontinuous, true)
            .with_note("engine computation; the source states no verdict"),
        holds("not-semi-continuous", Check::PairwiseSemiContinuous, false)
            .with_note("engine computation; the source states no verdict"),
        holds("sp-continuous", Check::PairwiseSpContinuous, true)
            .with_note("engine computation; the source states no verdict"),
        holds("not-open-map", Check::PairwiseOpenMap, false)
            .with_note("engine computation; the source states no verdict"),
    ];
    CatalogEntry {
        id: "ex-4.1",
        provenance: "f : [0,1] → [1,2] sends irrationals to √2 and rationals to 3/2; both \
                     sides carry the σ-space of countable irrational sets, doubled into a \
                     bispace. f is not continuous since the preimage of {√2} is all \
                     irrationals, but f(cl A) ⊆ cl f(A) holds for rational, irrational and \
                     mixed A. x0 stands for an arbitrary irrational."
            .into(),
        universe: x,
        subject,
        claims,
    }
}
