//! The worked examples recomputed straight from the predicates, without
//! going through the catalog's claim lists.

use bispace_lab::catalog::{build_example, CatalogEntry};
use bispace_lab::maps;
use bispace_lab::props::{self, Bispace};
use bispace_lab::{IndexPair, Mask, SchematicSpace, Side, SpaceBackend};

const P12: IndexPair = IndexPair::OneTwo;
const P21: IndexPair = IndexPair::TwoOne;

struct Ex {
    entry: CatalogEntry,
}

impl Ex {
    fn new(id: &str) -> Self {
        Ex {
            entry: build_example(id).unwrap(),
        }
    }

    fn set(&self, ids: &[&str]) -> Mask {
        self.entry.universe.set(ids).unwrap()
    }

    fn all(&self) -> Mask {
        self.entry.universe.all()
    }

    fn bi(&self) -> &Bispace<SchematicSpace> {
        &self.entry.subject.bispace
    }

    fn one(&self) -> &SchematicSpace {
        self.bi().space(Side::First)
    }

    fn two(&self) -> &SchematicSpace {
        self.bi().space(Side::Second)
    }
}

#[test]
fn ex_3_1_weakly_preopen_but_not_preopen() {
    let ex = Ex::new("ex-3.1");
    let a = ex.set(&["sqrt2", "irr"]);
    let b = ex.set(&["irr"]);
    assert_eq!(ex.one().closure(b), ex.all() - ex.set(&["sqrt2"]));
    assert_eq!(ex.one().interior(ex.one().closure(b)), b);
    assert_eq!(props::preopen_witness(ex.one(), a), Some(ex.all()));
    assert!(props::is_weakly_preopen(ex.one(), b));
    assert!(!props::is_preopen(ex.one(), b));
}

#[test]
fn ex_3_2_weak_condition_without_preopenness() {
    let ex = Ex::new("ex-3.2");
    let a = ex.set(&["s", "irr01"]);
    assert!(!ex.one().is_countable(a));
    assert!(!ex.one().is_open(a));
    let cl2 = ex.two().closure(a);
    assert_eq!(cl2, ex.set(&["s", "irr01", "q01", "q12"]));
    assert_eq!(ex.one().interior(cl2), a);
    assert!(props::is_ij_weakly_preopen(ex.bi(), P12, a));
    assert_eq!(props::ij_preopen_witness(ex.bi(), P12, a), None);
    assert!(!props::is_pairwise_preopen(ex.bi(), a));
}

#[test]
fn ex_3_3_pairwise_but_not_individually_preopen() {
    let ex = Ex::new("ex-3.3");
    let a = ex.set(&["sqrt3"]);
    let u = ex.set(&["sqrt3", "five_halves"]);
    assert!(ex.one().is_open(u));
    assert_eq!(ex.one().closure(a), ex.all() - ex.set(&["irr_lo", "five_halves"]));
    assert_eq!(props::ij_preopen_witness(ex.bi(), P12, a), Some(u));
    assert_eq!(
        props::ij_preopen_witness(ex.bi(), P21, a),
        Some(ex.set(&["sqrt3", "three_halves"]))
    );
    assert!(props::is_pairwise_preopen(ex.bi(), a));
    assert!(!props::is_preopen(ex.one(), a));
    assert!(!props::is_preopen(ex.two(), a));
}

#[test]
fn ex_3_4_preopen_but_not_open() {
    let ex = Ex::new("ex-3.4");
    let a = ex.set(&["zero", "one"]);
    assert!(!ex.one().is_open(a));
    assert_eq!(ex.two().closure(a), ex.all() - ex.set(&["irr23"]));
    assert_eq!(
        props::ij_preopen_witness(ex.bi(), P12, a),
        Some(ex.set(&["zero", "one", "sqrt2"]))
    );
}

#[test]
fn ex_3_5_semipreopen_but_neither_preopen_nor_semiopen() {
    let ex = Ex::new("ex-3.5");
    let b = ex.set(&["zero", "one", "sqrt3"]);
    let a = ex.set(&["zero", "one"]);
    assert!(!props::is_ij_preopen(ex.bi(), P12, b));
    assert!(!props::is_ij_semiopen(ex.bi(), P12, b));
    assert!(props::certifies_semipreopen(ex.bi(), P12, a, b));
    assert!(props::is_ij_semipreopen(ex.bi(), P12, b));
}

#[test]
fn ex_3_6_interior_condition_without_preopenness() {
    let ex = Ex::new("ex-3.6");
    let a = ex.set(&["s", "irr01"]);
    assert!(props::closed_supersets_in_interior(ex.bi(), P12, a));
    assert!(!props::is_ij_preopen(ex.bi(), P12, a));
}

#[test]
fn ex_3_7_and_3_8_unions_of_preopen_singletons() {
    for id in ["ex-3.7", "ex-3.8"] {
        let ex = Ex::new(id);
        let s = ex.set(&["s"]);
        let union = ex.set(&["s", "irr01"]);
        assert!(props::is_ij_preopen(ex.bi(), P12, s), "{id}");
        assert!(!props::is_ij_preopen(ex.bi(), P12, union), "{id}");
    }
    let ex = Ex::new("ex-3.8");
    assert!(!ex.one().is_open(ex.set(&["s"])));
}

#[test]
fn ex_4_1_preserves_closures_without_continuity() {
    let ex = Ex::new("ex-4.1");
    let m = ex.entry.subject.map.as_ref().unwrap();
    let target = m.target.space(Side::First);
    let root2 = target.cell_index("sqrt2").unwrap();
    assert_eq!(m.map.preimage(Mask::singleton(root2)), ex.set(&["x0", "irr"]));
    assert!(target.is_open(Mask::singleton(root2)));
    assert!(!ex.one().is_open(ex.set(&["x0", "irr"])));
    assert!(!maps::is_pairwise_continuous(&m.map, ex.bi(), &m.target).unwrap());
    // rationals only, irrationals only, and a mix of both
    for a in [
        ex.set(&["q"]),
        ex.set(&["x0"]),
        ex.set(&["x0", "irr"]),
        ex.set(&["x0", "q"]),
        ex.all(),
    ] {
        assert!(maps::check_closure_preservation(&m.map, ex.one(), target, a));
    }
}
