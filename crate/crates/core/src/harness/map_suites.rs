//! Sweeps over (source bispace, target bispace, map) triples.
//!
//! Carriers of at most three points are covered exhaustively. When four
//! points are requested, triples involving a four-point carrier are drawn
//! with a seeded generator on top of the exhaustive part.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::exec::Execution;
use crate::finite::{enumerate_spaces, FiniteSpace};
use crate::maps::{self, CellMap};
use crate::mask::Mask;
use crate::props::{Bispace, Side};

use super::tables::{bispaces, BispaceTable, MapTable};
use super::tally::{law, merge_all, search, CheckSpec, Tally};

pub const CHECKS: [CheckSpec; 33] = [
    // hierarchy
    law(
        "hierarchy",
        "continuous-is-semi",
        "pairwise continuous ⇒ pairwise semi continuous",
    ),
    law(
        "hierarchy",
        "continuous-is-pre",
        "pairwise continuous ⇒ pairwise precontinuous",
    ),
    law(
        "hierarchy",
        "semi-is-sp",
        "pairwise semi continuous ⇒ pairwise sp-continuous",
    ),
    law(
        "hierarchy",
        "pre-is-sp",
        "pairwise precontinuous ⇒ pairwise sp-continuous",
    ),
    search("hierarchy", "pre-not-continuous", "precontinuous but not continuous"),
    search("hierarchy", "semi-not-continuous", "semi continuous but not continuous"),
    search("hierarchy", "sp-not-semi", "sp-continuous but not semi continuous"),
    search("hierarchy", "sp-not-pre", "sp-continuous but not precontinuous"),
    search("hierarchy", "pre-not-semi", "precontinuous but not semi continuous"),
    search("hierarchy", "semi-not-pre", "semi continuous but not precontinuous"),
    // thm-4.1
    law(
        "thm-4.1",
        "preopen-images",
        "continuous and open ⇒ images of (i,j)-preopen sets are (i,j)-preopen",
    ),
    law(
        "thm-4.1",
        "semipreopen-images",
        "continuous and open ⇒ images of (i,j)-semipreopen sets are (i,j)-semipreopen",
    ),
    // thm-4.2
    law(
        "thm-4.2",
        "preopen-preimages",
        "precontinuous and open ⇒ preimages of (i,j)-preopen sets are (i,j)-preopen",
    ),
    law(
        "thm-4.2",
        "semipreopen-preimages",
        "precontinuous and open ⇒ preimages of (i,j)-semipreopen sets are (i,j)-semipreopen",
    ),
    // thm-4.3
    law(
        "thm-4.3",
        "characterization",
        "precontinuous ⇔ preimages of σi-closed sets are (i,j)-preclosed",
    ),
    // thm-4.4
    law(
        "thm-4.4",
        "neighbourhoods",
        "(i,j)-precontinuous ⇒ each σi-open V ∋ f(x) has an (i,j)-preopen U ∋ x with f(U) ⊆ V",
    ),
    law(
        "thm-4.4",
        "closure-image",
        "(i,j)-precontinuous ⇒ f(pcl A) ⊆ σi cl f(A)",
    ),
    law(
        "thm-4.4",
        "closure-preimage",
        "(i,j)-precontinuous ⇒ pcl f⁻¹(B) ⊆ f⁻¹(σi cl B)",
    ),
    law(
        "thm-4.4",
        "converse-neighbourhoods",
        "on finite models the neighbourhood property gives (i,j)-precontinuity",
    ),
    law(
        "thm-4.4",
        "converse-closure-image",
        "on finite models f(pcl A) ⊆ σi cl f(A) for all A gives (i,j)-precontinuity",
    ),
    law(
        "thm-4.4",
        "converse-closure-preimage",
        "on finite models pcl f⁻¹(B) ⊆ f⁻¹(σi cl B) for all B gives (i,j)-precontinuity",
    ),
    // thm-4.5
    law(
        "thm-4.5",
        "restriction",
        "precontinuous, A ∈ τ1 ∩ τ2 ⇒ the restriction to A is precontinuous",
    ),
    // thm-5.1
    law(
        "thm-5.1",
        "characterization",
        "sp-continuous ⇔ preimages of σi-closed sets are (i,j)-semipreclosed",
    ),
    // thm-5.2
    law(
        "thm-5.2",
        "neighbourhoods",
        "(i,j)-sp-continuous ⇒ each σi-open V ∋ f(x) has an (i,j)-semipreopen U ∋ x with f(U) ⊆ V",
    ),
    law(
        "thm-5.2",
        "closure-image",
        "(i,j)-sp-continuous ⇒ f(spcl A) ⊆ σi cl f(A)",
    ),
    law(
        "thm-5.2",
        "closure-preimage",
        "(i,j)-sp-continuous ⇒ spcl f⁻¹(B) ⊆ f⁻¹(σi cl B)",
    ),
    // thm-5.3
    law(
        "thm-5.3",
        "restriction",
        "sp-continuous, A ∈ τ1 ∩ τ2 ⇒ the restriction to A is sp-continuous",
    ),
    // note-4.1
    law(
        "note-4.1",
        "continuity-preserves-closure",
        "τi→σi continuous ⇒ f(cl A) ⊆ cl f(A) for all A",
    ),
    law(
        "note-4.1",
        "converse-finite",
        "on finite models f(cl A) ⊆ cl f(A) for all A gives τi→σi continuity",
    ),
    search(
        "note-4.1",
        "catalog-closure-without-continuity",
        "catalog map preserving closures of all atom unions without being continuous",
    ),
    // thm-4.6
    law(
        "thm-4.6",
        "net-images-converge",
        "(i,j)-precontinuous with condition C ⇒ images of τi-convergent nets converge in σi",
    ),
    search(
        "thm-4.6",
        "condition-C-holds",
        "(i,j)-precontinuous map satisfying condition C",
    ),
    search(
        "thm-4.6",
        "condition-C-fails",
        "(i,j)-precontinuous map violating condition C",
    ),
];

const CONT_SEMI: usize = 0;
const CONT_PRE: usize = 1;
const SEMI_SP: usize = 2;
const PRE_SP: usize = 3;
const PRE_NOT_CONT: usize = 4;
const SEMI_NOT_CONT: usize = 5;
const SP_NOT_SEMI: usize = 6;
const SP_NOT_PRE: usize = 7;
const PRE_NOT_SEMI: usize = 8;
const SEMI_NOT_PRE: usize = 9;
const T41_PRE: usize = 10;
const T41_SP: usize = 11;
const T42_PRE: usize = 12;
const T42_SP: usize = 13;
const T43: usize = 14;
const T44_NB: usize = 15;
const T44_IMAGE: usize = 16;
const T44_PREIMAGE: usize = 17;
const T44_CONV_NB: usize = 18;
const T44_CONV_IMAGE: usize = 19;
const T44_CONV_PREIMAGE: usize = 20;
const T45: usize = 21;
const T51: usize = 22;
const T52_NB: usize = 23;
const T52_IMAGE: usize = 24;
const T52_PREIMAGE: usize = 25;
const T53: usize = 26;
const N41: usize = 27;
const N41_CONVERSE: usize = 28;
const N41_CATALOG: usize = 29;
pub(crate) const T46: usize = 30;
pub(crate) const T46_C_HOLDS: usize = 31;
pub(crate) const T46_C_FAILS: usize = 32;

pub(crate) fn fresh() -> Vec<Tally> {
    vec![Tally::default(); CHECKS.len()]
}

fn all(flags: [bool; 2]) -> bool {
    flags[0] && flags[1]
}

/// The three consequences for one index, with `graded` and `closure_kind`
/// standing for (preopen, pcl) or (semipreopen, spcl).
fn consequences(
    x: &BispaceTable,
    y: &BispaceTable,
    f: &MapTable,
    k: usize,
    interior_kind: &[Mask],
    closure_kind: &[Mask],
) -> [bool; 3] {
    let neighbourhoods = y.opens[k].iter().all(|&v| {
        let w = f.preimage(v);
        w.is_subset(interior_kind[w.bits() as usize])
    });
    let image = x.ground.submasks().all(|a| {
        f.image(closure_kind[a.bits() as usize])
            .is_subset(y.closure[k][f.image(a).bits() as usize])
    });
    let preimage = y
        .ground
        .submasks()
        .all(|b| closure_kind[f.preimage(b).bits() as usize].is_subset(f.preimage(y.closure[k][b.bits() as usize])));
    [neighbourhoods, image, preimage]
}

/// Per index pair: continuity, precontinuity, semi continuity,
/// sp-continuity and openness of `f`, read off the tables.
fn graded(x: &BispaceTable, y: &BispaceTable, f: &MapTable) -> [[bool; 2]; 5] {
    let grade = |flags: &[super::tables::Flags; 2], k: usize| y.opens[k].iter().all(|&v| flags[k].get(f.preimage(v)));
    [
        [grade(&x.open, 0), grade(&x.open, 1)],
        [grade(&x.preopen, 0), grade(&x.preopen, 1)],
        [grade(&x.semiopen, 0), grade(&x.semiopen, 1)],
        [grade(&x.semipreopen, 0), grade(&x.semipreopen, 1)],
        [0, 1].map(|k| x.opens[k].iter().all(|&u| y.open[k].get(f.image(u)))),
    ]
}

/// The pairwise verdicts of [`graded`], in the order of [`generic_verdicts`].
pub fn table_verdicts(x: &BispaceTable, y: &BispaceTable, f: &MapTable) -> [bool; 5] {
    graded(x, y, f).map(all)
}

fn triple(x: &BispaceTable, y: &BispaceTable, f: &MapTable, t: &mut [Tally]) {
    let d = || format!("X: {} | Y: {} | {}", x.describe(), y.describe(), f.describe());
    let xs = x.ground;
    let ys = y.ground;
    let [cont, pre, semi, sp, open_map] = graded(x, y, f);
    let (c, p, s, q, o) = (all(cont), all(pre), all(semi), all(sp), all(open_map));

    t[CONT_SEMI].law(c, s, d);
    t[CONT_PRE].law(c, p, d);
    t[SEMI_SP].law(s, q, d);
    t[PRE_SP].law(p, q, d);
    t[PRE_NOT_CONT].search(p && !c, d);
    t[SEMI_NOT_CONT].search(s && !c, d);
    t[SP_NOT_SEMI].search(q && !s, d);
    t[SP_NOT_PRE].search(q && !p, d);
    t[PRE_NOT_SEMI].search(p && !s, d);
    t[SEMI_NOT_PRE].search(s && !p, d);

    for k in 0..2 {
        let dk = |s: String| format!("{} k={} {s}", d(), k + 1);
        if c && o {
            for a in xs.submasks() {
                let da = || dk(format!("A={a}"));
                t[T41_PRE].law(x.preopen[k].get(a), y.preopen[k].get(f.image(a)), da);
                t[T41_SP].law(x.semipreopen[k].get(a), y.semipreopen[k].get(f.image(a)), da);
            }
        }
        if p && o {
            for b in ys.submasks() {
                let db = || dk(format!("B={b}"));
                t[T42_PRE].law(y.preopen[k].get(b), x.preopen[k].get(f.preimage(b)), db);
                t[T42_SP].law(y.semipreopen[k].get(b), x.semipreopen[k].get(f.preimage(b)), db);
            }
        }

        let [nb, image, preimage] = consequences(x, y, f, k, &x.pint[k], &x.pcl[k]);
        let dk0 = || dk(String::new());
        t[T44_NB].law(pre[k], nb, dk0);
        t[T44_IMAGE].law(pre[k], image, dk0);
        t[T44_PREIMAGE].law(pre[k], preimage, dk0);
        t[T44_CONV_NB].law(nb, pre[k], dk0);
        t[T44_CONV_IMAGE].law(image, pre[k], dk0);
        t[T44_CONV_PREIMAGE].law(preimage, pre[k], dk0);

        let [nb, image, preimage] = consequences(x, y, f, k, &x.spint[k], &x.spcl[k]);
        t[T52_NB].law(sp[k], nb, dk0);
        t[T52_IMAGE].law(sp[k], image, dk0);
        t[T52_PREIMAGE].law(sp[k], preimage, dk0);

        let preserves = xs.submasks().all(|a| {
            f.image(x.closure[k][a.bits() as usize])
                .is_subset(y.closure[k][f.image(a).bits() as usize])
        });
        t[N41].law(cont[k], preserves, dk0);
        t[N41_CONVERSE].law(preserves, cont[k], dk0);
    }

    let closed_graded = |flags: &[super::tables::Flags; 2]| {
        (0..2).all(|k| y.opens[k].iter().all(|&v| flags[k].get(xs - f.preimage(v))))
    };
    t[T43].law(true, p == closed_graded(&x.preclosed), d);
    t[T51].law(true, q == closed_graded(&x.semipreclosed), d);

    if p || q {
        for sub in &x.subspaces {
            let restricted = |flags: &[super::tables::Flags; 2]| {
                (0..2).all(|k| y.opens[k].iter().all(|&v| flags[k].get(f.preimage(v) & sub.domain)))
            };
            let ds = || format!("{} A={}", d(), sub.domain);
            t[T45].law(p, restricted(&sub.preopen), ds);
            t[T53].law(q, restricted(&sub.semipreopen), ds);
        }
    }
}

/// Tables for every bispace on 1..=max points, indexed by size.
fn tables_by_size(max: usize, exec: Execution) -> Vec<Vec<BispaceTable>> {
    let mut out = vec![Vec::new()];
    for n in 1..=max {
        let pairs = bispaces(&enumerate_spaces(n).expect("n within range"));
        out.push(exec.map(&pairs, |bi| BispaceTable::new(bi.clone()).with_subspaces()));
    }
    out
}

fn exhaustive(max: usize, exec: Execution) -> Vec<Tally> {
    let tables = tables_by_size(max, exec);
    let maps: Vec<Vec<Vec<MapTable>>> = (0..=max)
        .map(|ns| {
            (0..=max)
                .map(|nt| {
                    if ns * nt == 0 {
                        Vec::new()
                    } else {
                        MapTable::all(ns, nt)
                    }
                })
                .collect()
        })
        .collect();
    let mut shards = Vec::new();
    for (ns, xs) in tables.iter().enumerate().skip(1) {
        for nt in 1..=max {
            shards.extend((0..xs.len()).map(|i| (ns, nt, i)));
        }
    }
    let results = exec.map(&shards, |&(ns, nt, i)| {
        let mut t = fresh();
        let x = &tables[ns][i];
        for y in &tables[nt] {
            for f in &maps[ns][nt] {
                triple(x, y, f, &mut t);
            }
        }
        t
    });
    merge_all(results, CHECKS.len())
}

/// Carrier sizes for a sampled triple: at least one side has `max` points.
pub(crate) fn sampled_sizes(rng: &mut ChaCha8Rng, max: usize) -> (usize, usize) {
    let options: Vec<(usize, usize)> = (1..=max)
        .flat_map(|a| (1..=max).map(move |b| (a, b)))
        .filter(|&(a, b)| a == max || b == max)
        .collect();
    options[rng.gen_range(0..options.len())]
}

pub(crate) fn random_bispace(rng: &mut ChaCha8Rng, spaces: &[FiniteSpace]) -> Bispace<FiniteSpace> {
    let a = rng.gen_range(0..spaces.len());
    let b = rng.gen_range(0..spaces.len());
    Bispace::new(spaces[a].clone(), spaces[b].clone()).expect("same carrier")
}

pub(crate) fn random_map(rng: &mut ChaCha8Rng, ns: usize, nt: usize) -> MapTable {
    MapTable::new(ns, nt, (0..ns).map(|_| rng.gen_range(0..nt)).collect())
}

fn sampled(max: usize, samples: usize, seed: u64, exec: Execution) -> Vec<Tally> {
    let spaces: Vec<Vec<FiniteSpace>> = (0..=max)
        .map(|n| {
            if n == 0 {
                Vec::new()
            } else {
                enumerate_spaces(n).expect("n within range")
            }
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<_> = (0..samples)
        .map(|_| {
            let (ns, nt) = sampled_sizes(&mut rng, max);
            let x = random_bispace(&mut rng, &spaces[ns]);
            let y = random_bispace(&mut rng, &spaces[nt]);
            (x, y, random_map(&mut rng, ns, nt))
        })
        .collect();
    let results = exec.map(&draws, |(x, y, f)| {
        let mut t = fresh();
        let x = BispaceTable::new(x.clone()).with_subspaces();
        let y = BispaceTable::new(y.clone());
        triple(&x, &y, f, &mut t);
        t
    });
    merge_all(results, CHECKS.len())
}

/// The catalog map's closure behaviour, through the generic predicates.
fn catalog_checks(t: &mut [Tally]) {
    for entry in catalog::entries() {
        let Some(m) = &entry.subject.map else { continue };
        let x = &entry.subject.bispace;
        let preserves = Side::BOTH.iter().all(|&side| {
            x.algebra_sets()
                .into_iter()
                .all(|a| maps::check_closure_preservation(&m.map, x.space(side), m.target.space(side), a))
        });
        let continuous = maps::is_pairwise_continuous(&m.map, x, &m.target).unwrap_or(true);
        t[N41_CATALOG].search(preserves && !continuous, || entry.id.to_string());
    }
}

/// Every map suite except the net sweep. `sample` is `(count, seed)` and
/// only used when `max` is 4.
pub fn sweep(max: usize, sample: Option<(usize, u64)>, exec: Execution) -> Vec<Tally> {
    let exhaustive_max = max.min(3);
    let mut total = exec.install(|| exhaustive(exhaustive_max, exec));
    if max > exhaustive_max {
        if let Some((count, seed)) = sample {
            let more = exec.install(|| sampled(max, count, seed, exec));
            for (acc, t) in total.iter_mut().zip(more) {
                acc.merge(t);
            }
        }
    }
    catalog_checks(&mut total);
    total
}

/// Cross-checks one triple's table-driven verdicts against the generic map
/// predicates. Used by tests.
pub fn generic_verdicts(x: &Bispace<FiniteSpace>, y: &Bispace<FiniteSpace>, f: &MapTable) -> [bool; 5] {
    let map = CellMap::finite(
        crate::finite::FiniteCarrier::new(x.ground().len()).expect("small"),
        crate::finite::FiniteCarrier::new(y.ground().len()).expect("small"),
        f.assignment.clone(),
    )
    .expect("valid map");
    [
        maps::is_pairwise_continuous(&map, x, y).expect("matching carriers"),
        maps::is_pairwise_precontinuous(&map, x, y).expect("matching carriers"),
        maps::is_pairwise_semi_continuous(&map, x, y).expect("matching carriers"),
        maps::is_pairwise_sp_continuous(&map, x, y).expect("matching carriers"),
        maps::is_pairwise_open_map(&map, x, y).expect("matching carriers"),
    ]
}
