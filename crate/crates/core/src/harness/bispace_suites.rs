//! Sweeps over every bispace on `n` points and every subset, plus the
//! catalog bispaces for the statements that hold for every backend.

use crate::catalog;
use crate::exec::Execution;
use crate::finite::{enumerate_spaces, FiniteSpace};
use crate::mask::Mask;
use crate::props::{self, Bispace, Side};
use crate::symbolic::SchematicSpace;

use super::tables::{bispaces, describe_space, BispaceTable, PAIRS};
use super::tally::{law, merge_all, search, CheckSpec, Tally};

pub const CHECKS: [CheckSpec; 40] = [
    // closure-laws
    law("closure-laws", "extensive", "S ⊆ cl S"),
    law("closure-laws", "idempotent", "cl cl S = cl S"),
    law("closure-laws", "additive", "cl(A ∪ B) = cl A ∪ cl B"),
    law("closure-laws", "monotone", "A ⊆ B ⇒ cl A ⊆ cl B"),
    law("closure-laws", "empty", "cl ∅ = ∅"),
    law("closure-laws", "limit-points", "cl S = S ∪ (limit points of S)"),
    law("closure-laws", "interior-duality", "int S = X − cl(X − S)"),
    law(
        "closure-laws",
        "catalog-laws",
        "on every atom union of every catalog space: extensive, idempotent, additive, monotone, cl ∅ = ∅, int S ⊆ S, int monotone",
    ),
    // lemma-3.1
    law("lemma-3.1", "finite", "B open ⇒ cl A ∩ B ⊆ cl(A ∩ B)"),
    law("lemma-3.1", "catalog", "B open ⇒ cl A ∩ B ⊆ cl(A ∩ B), catalog spaces"),
    // C1-iff-C2
    law("C1-iff-C2", "C1-implies-C2", "(i,j)-preopen ⇒ A ⊆ τi int τj cl A"),
    law("C1-iff-C2", "C2-implies-C1", "A ⊆ τi int τj cl A ⇒ (i,j)-preopen, on finite models"),
    law("C1-iff-C2", "catalog-C1-implies-C2", "(i,j)-preopen ⇒ A ⊆ τi int τj cl A, catalog bispaces"),
    search("C1-iff-C2", "catalog-C2-without-C1", "weak condition without preopenness in a catalog bispace"),
    // inclusions
    law("inclusions", "open-is-preopen", "τi-open ⇒ (i,j)-preopen"),
    law("inclusions", "preopen-is-semipreopen", "(i,j)-preopen ⇒ (i,j)-semipreopen"),
    law("inclusions", "semiopen-is-semipreopen", "(i,j)-semiopen ⇒ (i,j)-semipreopen"),
    // thm-3.1
    law("thm-3.1", "a", "U (i,j)-preopen, A ⊆ U ⊆ τj cl A ⇒ A (i,j)-preopen"),
    law("thm-3.1", "b", "U (i,j)-semipreopen, U ⊆ A ⊆ τj cl U ⇒ A (i,j)-semipreopen"),
    // thm-3.2
    law("thm-3.2", "forward", "A (i,j)-preopen ⇒ A ⊆ τi int G for every τj-closed G ⊇ A"),
    law("thm-3.2", "converse-finite", "the converse, on finite models"),
    law("thm-3.2", "catalog-forward", "the forward direction on catalog bispaces"),
    search("thm-3.2", "catalog-converse-failure", "interior condition without preopenness in a catalog bispace"),
    // thm-3.3
    law("thm-3.3", "preopen-pairs", "union of two (i,j)-preopen sets is (i,j)-preopen"),
    law("thm-3.3", "semipreopen-pairs", "union of two (i,j)-semipreopen sets is (i,j)-semipreopen"),
    law("thm-3.3", "preopen-all", "union of all (i,j)-preopen sets is (i,j)-preopen"),
    law("thm-3.3", "semipreopen-all", "union of all (i,j)-semipreopen sets is (i,j)-semipreopen"),
    // thm-3.4
    law("thm-3.4", "preopen", "A (i,j)-preopen, B ∈ τ1 ∩ τ2 ⇒ A ∩ B (i,j)-preopen"),
    law("thm-3.4", "semipreopen", "A (i,j)-semipreopen, B ∈ τ1 ∩ τ2 ⇒ A ∩ B (i,j)-semipreopen"),
    // thm-3.5
    law("thm-3.5", "restrict-preopen", "A ⊆ Y, A (i,j)-preopen in X ⇒ preopen in the subbispace Y"),
    law("thm-3.5", "restrict-semipreopen", "A ⊆ Y, A (i,j)-semipreopen in X ⇒ semipreopen in Y"),
    law("thm-3.5", "extend-preopen", "Y τi-open, A preopen in Y ⇒ A (i,j)-preopen in X"),
    law("thm-3.5", "extend-semipreopen", "Y τi-open, A semipreopen in Y ⇒ A (i,j)-semipreopen in X"),
    law("thm-3.5", "relative-closure", "A ⊆ Y ⇒ cl in τi/Y of A = τi cl A ∩ Y"),
    // thm-3.6
    law("thm-3.6", "characterization", "x ∈ pcl A ⇔ every (i,j)-preopen U ∋ x meets A"),
    law("thm-3.6", "monotone", "A ⊆ B ⇒ pcl A ⊆ pcl B"),
    // thm-3.7
    law("thm-3.7", "characterization", "x ∈ spcl A ⇔ every (i,j)-semipreopen U ∋ x meets A"),
    law("thm-3.7", "monotone", "A ⊆ B ⇒ spcl A ⊆ spcl B"),
    // remark-3.1
    search("remark-3.1", "preopen-intersection-gap", "two (i,j)-preopen sets whose intersection is not"),
    search("remark-3.1", "semipreopen-intersection-gap", "two (i,j)-semipreopen sets whose intersection is not"),
];

const EXTENSIVE: usize = 0;
const IDEMPOTENT: usize = 1;
const ADDITIVE: usize = 2;
const MONOTONE: usize = 3;
const EMPTY: usize = 4;
const LIMIT_POINTS: usize = 5;
const INTERIOR_DUALITY: usize = 6;
const CATALOG_LAWS: usize = 7;
const LEMMA: usize = 8;
const LEMMA_CATALOG: usize = 9;
const C1_C2: usize = 10;
const C2_C1: usize = 11;
const CAT_C1_C2: usize = 12;
const CAT_C2_NOT_C1: usize = 13;
const OPEN_PRE: usize = 14;
const PRE_SP: usize = 15;
const SEMI_SP: usize = 16;
const T31A: usize = 17;
const T31B: usize = 18;
const T32: usize = 19;
const T32_CONVERSE: usize = 20;
const T32_CATALOG: usize = 21;
const T32_CATALOG_GAP: usize = 22;
const T33_PRE: usize = 23;
const T33_SP: usize = 24;
const T33_PRE_ALL: usize = 25;
const T33_SP_ALL: usize = 26;
const T34_PRE: usize = 27;
const T34_SP: usize = 28;
const T35_RESTRICT_PRE: usize = 29;
const T35_RESTRICT_SP: usize = 30;
const T35_EXTEND_PRE: usize = 31;
const T35_EXTEND_SP: usize = 32;
const T35_RELATIVE: usize = 33;
const T36_CHAR: usize = 34;
const T36_MONO: usize = 35;
const T37_CHAR: usize = 36;
const T37_MONO: usize = 37;
const R31_PRE: usize = 38;
const R31_SP: usize = 39;

fn fresh() -> Vec<Tally> {
    vec![Tally::default(); CHECKS.len()]
}

fn space_checks(space: &FiniteSpace) -> Vec<Tally> {
    let mut t = fresh();
    let g = space.points();
    let d = |s: String| format!("τ={} {s}", describe_space(space));
    t[EMPTY].law(true, space.closure(Mask::EMPTY).is_empty(), || d(String::new()));
    for a in g.submasks() {
        let cl = space.closure(a);
        t[EXTENSIVE].law(true, a.is_subset(cl), || d(format!("S={a}")));
        t[IDEMPOTENT].law(true, space.closure(cl) == cl, || d(format!("S={a}")));
        t[LIMIT_POINTS].law(true, cl == a | space.limit_points(a), || d(format!("S={a}")));
        t[INTERIOR_DUALITY].law(true, space.interior(a) == g - space.closure(g - a), || {
            d(format!("S={a}"))
        });
        for b in g.submasks() {
            t[ADDITIVE].law(true, space.closure(a | b) == cl | space.closure(b), || {
                d(format!("A={a} B={b}"))
            });
            t[MONOTONE].law(a.is_subset(b), cl.is_subset(space.closure(b)), || {
                d(format!("A={a} B={b}"))
            });
            t[LEMMA].law(space.is_open(b), (cl & b).is_subset(space.closure(a & b)), || {
                d(format!("A={a} B={b}"))
            });
        }
    }
    t
}

fn bispace_checks(bi: &Bispace<FiniteSpace>) -> Vec<Tally> {
    let mut t = fresh();
    let tab = BispaceTable::new(bi.clone());
    let g = tab.ground;
    let subsets: Vec<Mask> = g.submasks().collect();
    let biopen = |b: Mask| tab.open[0].get(b) && tab.open[1].get(b);
    for (k, &idx) in PAIRS.iter().enumerate() {
        let j = 1 - k;
        let cl_j = |a: Mask| tab.closure[j][a.bits() as usize];
        let pre = |a: Mask| tab.preopen[k].get(a);
        let sp = |a: Mask| tab.semipreopen[k].get(a);
        let d = |s: String| format!("{} pair {idx} {s}", tab.describe());

        let mut all_pre = Mask::EMPTY;
        let mut all_sp = Mask::EMPTY;
        for &a in &subsets {
            let da = || d(format!("A={a}"));
            let weak = tab.weakly_preopen[k].get(a);
            t[C1_C2].law(pre(a), weak, da);
            t[C2_C1].law(weak, pre(a), da);
            t[OPEN_PRE].law(tab.open[k].get(a), pre(a), da);
            t[PRE_SP].law(pre(a), sp(a), da);
            t[SEMI_SP].law(tab.semiopen[k].get(a), sp(a), da);

            let absorbed = props::closed_supersets_in_interior(bi, idx, a);
            t[T32].law(pre(a), absorbed, da);
            t[T32_CONVERSE].law(absorbed, pre(a), da);

            if pre(a) {
                all_pre = all_pre | a;
            }
            if sp(a) {
                all_sp = all_sp | a;
            }

            let pcl = tab.pcl[k][a.bits() as usize];
            let spcl = tab.spcl[k][a.bits() as usize];
            for x in g.iter() {
                let meets_all = |flag: &dyn Fn(Mask) -> bool| {
                    subsets
                        .iter()
                        .filter(|u| u.contains(x) && flag(**u))
                        .all(|u| u.meets(a))
                };
                t[T36_CHAR].law(true, pcl.contains(x) == meets_all(&pre), || d(format!("A={a} x={x}")));
                t[T37_CHAR].law(true, spcl.contains(x) == meets_all(&sp), || d(format!("A={a} x={x}")));
            }

            for &u in &subsets {
                let du = || d(format!("A={a} U={u}"));
                t[T31A].law(pre(u) && a.is_subset(u) && u.is_subset(cl_j(a)), pre(a), du);
                t[T31B].law(sp(u) && u.is_subset(a) && a.is_subset(cl_j(u)), sp(a), du);

                let b = u;
                let db = || d(format!("A={a} B={b}"));
                t[T33_PRE].law(pre(a) && pre(b), pre(a | b), db);
                t[T33_SP].law(sp(a) && sp(b), sp(a | b), db);
                t[T34_PRE].law(pre(a) && biopen(b), pre(a & b), db);
                t[T34_SP].law(sp(a) && biopen(b), sp(a & b), db);
                t[R31_PRE].search(pre(a) && pre(b) && !pre(a & b), db);
                t[R31_SP].search(sp(a) && sp(b) && !sp(a & b), db);
                t[T36_MONO].law(a.is_subset(b), pcl.is_subset(tab.pcl[k][b.bits() as usize]), db);
                t[T37_MONO].law(a.is_subset(b), spcl.is_subset(tab.spcl[k][b.bits() as usize]), db);
            }
        }
        t[T33_PRE_ALL].law(true, pre(all_pre), || d(format!("union={all_pre}")));
        t[T33_SP_ALL].law(true, sp(all_sp), || d(format!("union={all_sp}")));

        for &y in &subsets {
            let sub = props::subspace(bi, y);
            let y_open = tab.open[k].get(y);
            for a in y.submasks() {
                let dy = || d(format!("Y={y} A={a}"));
                let pre_y = props::is_ij_preopen(&sub, idx, a);
                let sp_y = props::is_ij_semipreopen(&sub, idx, a);
                t[T35_RESTRICT_PRE].law(pre(a), pre_y, dy);
                t[T35_RESTRICT_SP].law(sp(a), sp_y, dy);
                t[T35_EXTEND_PRE].law(y_open && pre_y, pre(a), dy);
                t[T35_EXTEND_SP].law(y_open && sp_y, sp(a), dy);
                let side = Side::BOTH[k];
                t[T35_RELATIVE].law(true, sub.space(side).closure(a) == bi.space(side).closure(a) & y, dy);
            }
        }
    }
    t
}

/// Every distinct space and bispace appearing in the catalog.
fn catalog_structures() -> Vec<(String, Bispace<SchematicSpace>)> {
    let mut out = Vec::new();
    for entry in catalog::entries() {
        out.push((entry.id.to_string(), entry.subject.bispace.clone()));
        if let Some(m) = &entry.subject.map {
            out.push((format!("{} target", entry.id), m.target.clone()));
        }
    }
    out
}

fn catalog_checks(t: &mut [Tally]) {
    for (name, bi) in catalog_structures() {
        let algebra = bi.algebra_sets();
        for side in Side::BOTH {
            let s = bi.space(side);
            let d = |msg: String| format!("{name} τ{} {msg}", side.number());
            t[CATALOG_LAWS].law(true, s.closure(Mask::EMPTY).is_empty(), || d("cl ∅ ≠ ∅".into()));
            for &a in &algebra {
                let cl = s.closure(a);
                let int = s.interior(a);
                let single = a.is_subset(cl) && s.closure(cl) == cl && int.is_subset(a);
                t[CATALOG_LAWS].law(true, single, || d(format!("S={}", bi.describe(a))));
                for &b in &algebra {
                    let clb = s.closure(b);
                    let ok = s.closure(a | b) == cl | clb
                        && (!a.is_subset(b) || (cl.is_subset(clb) && int.is_subset(s.interior(b))));
                    t[CATALOG_LAWS].law(true, ok, || d(format!("A={} B={}", bi.describe(a), bi.describe(b))));
                    t[LEMMA_CATALOG].law(s.is_open(b), (cl & b).is_subset(s.closure(a & b)), || {
                        d(format!("A={} B={}", bi.describe(a), bi.describe(b)))
                    });
                }
            }
        }
        for idx in PAIRS {
            for &a in &algebra {
                let d = || format!("{name} pair {idx} A={}", bi.describe(a));
                let pre = props::is_ij_preopen(&bi, idx, a);
                let weak = props::is_ij_weakly_preopen(&bi, idx, a);
                let absorbed = props::closed_supersets_in_interior(&bi, idx, a);
                t[CAT_C1_C2].law(pre, weak, d);
                t[CAT_C2_NOT_C1].search(weak && !pre, d);
                t[T32_CATALOG].law(pre, absorbed, d);
                t[T32_CATALOG_GAP].search(absorbed && !pre, d);
            }
        }
    }
}

/// Runs every bispace check on carriers of exactly `n` points.
pub fn sweep(n: usize, exec: Execution) -> Vec<Tally> {
    let spaces = enumerate_spaces(n).expect("caller validated n");
    let pairs = bispaces(&spaces);
    let (singles, doubles) = exec.install(|| (exec.map(&spaces, space_checks), exec.map(&pairs, bispace_checks)));
    let mut shards = singles;
    shards.extend(doubles);
    let mut total = merge_all(shards, CHECKS.len());
    catalog_checks(&mut total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::tally::CheckKind;

    #[test]
    fn laws_hold_on_two_points() {
        let tallies = sweep(2, Execution::Sequential);
        for (spec, t) in CHECKS.iter().zip(&tallies) {
            if spec.kind == CheckKind::Law {
                assert_eq!(t.hits, 0, "{} {}: {:?}", spec.suite, spec.id, t.first);
                assert!(t.checked > 0, "{} {} never applied", spec.suite, spec.id);
            }
        }
        assert!(tallies[CAT_C2_NOT_C1].hits > 0);
        assert!(tallies[T32_CATALOG_GAP].hits > 0);
    }
}
