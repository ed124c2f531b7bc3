//! Per-bispace lookup tables for the finite sweeps.
//!
//! Every entry is produced by the generic predicates in [`crate::props`];
//! the tables only cache them so that map sweeps, which revisit the same
//! bispace for every target and every map, stay cheap.

use crate::finite::FiniteSpace;
use crate::mask::Mask;
use crate::props::{self, Bispace, IndexPair, Side};

/// One bit per subset of a carrier of at most six points, indexed by the
/// subset's bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Flags(u64);

impl Flags {
    pub fn get(self, s: Mask) -> bool {
        self.0 >> s.bits() & 1 == 1
    }

    fn set(&mut self, s: Mask) {
        self.0 |= 1 << s.bits();
    }

    fn collect(ground: Mask, pred: impl Fn(Mask) -> bool) -> Self {
        let mut flags = Flags::default();
        for s in ground.submasks() {
            if pred(s) {
                flags.set(s);
            }
        }
        flags
    }
}

/// Index 0 is side 1 or pair (1,2); index 1 is side 2 or pair (2,1). The
/// pair with index `k` opens in the space with index `k`.
pub const PAIRS: [IndexPair; 2] = [IndexPair::OneTwo, IndexPair::TwoOne];

/// Preopen and semipreopen flags of one bi-open subspace.
#[derive(Debug, Clone)]
pub struct SubspaceFlags {
    pub domain: Mask,
    pub preopen: [Flags; 2],
    pub semipreopen: [Flags; 2],
}

#[derive(Debug, Clone)]
pub struct BispaceTable {
    pub bispace: Bispace<FiniteSpace>,
    pub ground: Mask,
    pub opens: [Vec<Mask>; 2],
    pub open: [Flags; 2],
    pub closure: [Vec<Mask>; 2],
    pub interior: [Vec<Mask>; 2],
    pub preopen: [Flags; 2],
    pub weakly_preopen: [Flags; 2],
    pub semiopen: [Flags; 2],
    pub semipreopen: [Flags; 2],
    pub preclosed: [Flags; 2],
    pub semipreclosed: [Flags; 2],
    pub pcl: [Vec<Mask>; 2],
    pub spcl: [Vec<Mask>; 2],
    /// Union of the preopen subsets of each set.
    pub pint: [Vec<Mask>; 2],
    /// Union of the semipreopen subsets of each set.
    pub spint: [Vec<Mask>; 2],
    /// Filled by [`BispaceTable::with_subspaces`].
    pub subspaces: Vec<SubspaceFlags>,
}

fn per_subset(ground: Mask, f: impl Fn(Mask) -> Mask) -> Vec<Mask> {
    let mut out = vec![Mask::EMPTY; 1 << ground.span()];
    for s in ground.submasks() {
        out[s.bits() as usize] = f(s);
    }
    out
}

fn union_of_flagged(ground: Mask, flags: Flags) -> Vec<Mask> {
    per_subset(ground, |s| {
        s.submasks()
            .filter(|&u| flags.get(u))
            .fold(Mask::EMPTY, |acc, u| acc | u)
    })
}

impl BispaceTable {
    pub fn new(bispace: Bispace<FiniteSpace>) -> Self {
        let g = bispace.ground();
        let sides = Side::BOTH;
        let space = |k: usize| bispace.space(sides[k]);
        let both = |f: &dyn Fn(usize) -> Flags| [f(0), f(1)];
        let both_sets = |f: &dyn Fn(usize) -> Vec<Mask>| [f(0), f(1)];

        let preopen = both(&|k| Flags::collect(g, |a| props::is_ij_preopen(&bispace, PAIRS[k], a)));
        let semipreopen = both(&|k| Flags::collect(g, |a| props::is_ij_semipreopen(&bispace, PAIRS[k], a)));
        BispaceTable {
            ground: g,
            opens: [space(0).opens().to_vec(), space(1).opens().to_vec()],
            open: both(&|k| Flags::collect(g, |a| space(k).is_open(a))),
            closure: both_sets(&|k| per_subset(g, |a| space(k).closure(a))),
            interior: both_sets(&|k| per_subset(g, |a| space(k).interior(a))),
            preopen,
            weakly_preopen: both(&|k| Flags::collect(g, |a| props::is_ij_weakly_preopen(&bispace, PAIRS[k], a))),
            semiopen: both(&|k| Flags::collect(g, |a| props::is_ij_semiopen(&bispace, PAIRS[k], a))),
            semipreopen,
            preclosed: both(&|k| Flags::collect(g, |a| props::is_ij_preclosed(&bispace, PAIRS[k], a))),
            semipreclosed: both(&|k| Flags::collect(g, |a| props::is_ij_semipreclosed(&bispace, PAIRS[k], a))),
            pcl: both_sets(&|k| per_subset(g, |a| props::pcl(&bispace, PAIRS[k], a))),
            spcl: both_sets(&|k| per_subset(g, |a| props::spcl(&bispace, PAIRS[k], a))),
            pint: [union_of_flagged(g, preopen[0]), union_of_flagged(g, preopen[1])],
            spint: [union_of_flagged(g, semipreopen[0]), union_of_flagged(g, semipreopen[1])],
            subspaces: Vec::new(),
            bispace,
        }
    }

    /// Adds flags for every subspace on a set open in both structures.
    pub fn with_subspaces(mut self) -> Self {
        let g = self.ground;
        self.subspaces = g
            .submasks()
            .filter(|&d| self.open[0].get(d) && self.open[1].get(d))
            .map(|d| {
                let sub = props::subspace(&self.bispace, d);
                let flags = |semi: bool, k: usize| {
                    Flags::collect(d, |a| {
                        if semi {
                            props::is_ij_semipreopen(&sub, PAIRS[k], a)
                        } else {
                            props::is_ij_preopen(&sub, PAIRS[k], a)
                        }
                    })
                };
                SubspaceFlags {
                    domain: d,
                    preopen: [flags(false, 0), flags(false, 1)],
                    semipreopen: [flags(true, 0), flags(true, 1)],
                }
            })
            .collect();
        self
    }

    pub fn describe(&self) -> String {
        describe_bispace(&self.bispace)
    }
}

pub fn describe_space(space: &FiniteSpace) -> String {
    let opens: Vec<String> = space.opens().iter().map(|o| o.to_string()).collect();
    format!("[{}]", opens.join(","))
}

pub fn describe_bispace(bi: &Bispace<FiniteSpace>) -> String {
    format!("τ1={} τ2={}", describe_space(bi.first()), describe_space(bi.second()))
}

/// All ordered pairs of `spaces`, first coordinate varying slowest.
pub fn bispaces(spaces: &[FiniteSpace]) -> Vec<Bispace<FiniteSpace>> {
    spaces
        .iter()
        .flat_map(|a| {
            spaces
                .iter()
                .map(move |b| Bispace::new(a.clone(), b.clone()).expect("same carrier"))
        })
        .collect()
}

/// A point map with its image and preimage tables.
#[derive(Debug, Clone)]
pub struct MapTable {
    pub assignment: Vec<usize>,
    pub image: Vec<Mask>,
    pub preimage: Vec<Mask>,
}

impl MapTable {
    pub fn new(source: usize, target: usize, assignment: Vec<usize>) -> Self {
        let xs = Mask::prefix(source);
        let ys = Mask::prefix(target);
        let image = per_subset(xs, |a| a.iter().map(|p| assignment[p]).collect());
        let preimage = per_subset(ys, |b| xs.iter().filter(|&p| b.contains(assignment[p])).collect());
        MapTable {
            assignment,
            image,
            preimage,
        }
    }

    pub fn image(&self, a: Mask) -> Mask {
        self.image[a.bits() as usize]
    }

    pub fn preimage(&self, b: Mask) -> Mask {
        self.preimage[b.bits() as usize]
    }

    /// Every map from `source` points to `target` points, in lexicographic
    /// order of assignments.
    pub fn all(source: usize, target: usize) -> Vec<MapTable> {
        let count = target.pow(source as u32);
        (0..count)
            .map(|mut code| {
                let mut assignment = vec![0; source];
                for slot in assignment.iter_mut().rev() {
                    *slot = code % target;
                    code /= target;
                }
                MapTable::new(source, target, assignment)
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .enumerate()
            .map(|(p, q)| format!("{p}↦{q}"))
            .collect();
        format!("f=[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{enumerate_spaces, FiniteCarrier};

    #[test]
    fn maps_are_enumerated_in_order() {
        let maps = MapTable::all(2, 3);
        assert_eq!(maps.len(), 9);
        assert_eq!(maps[0].assignment, vec![0, 0]);
        assert_eq!(maps[1].assignment, vec![0, 1]);
        assert_eq!(maps[8].assignment, vec![2, 2]);
        assert_eq!(maps[5].preimage(Mask::singleton(2)), Mask::singleton(1));
    }

    #[test]
    fn tables_agree_with_predicates() {
        let spaces = enumerate_spaces(2).unwrap();
        for bi in bispaces(&spaces) {
            let t = BispaceTable::new(bi.clone());
            for a in bi.ground().submasks() {
                for (k, &idx) in PAIRS.iter().enumerate() {
                    assert_eq!(t.preopen[k].get(a), props::is_ij_preopen(&bi, idx, a));
                    assert_eq!(t.pcl[k][a.bits() as usize], props::pcl(&bi, idx, a));
                }
            }
        }
    }

    #[test]
    fn discrete_subspaces_cover_every_subset() {
        let c = FiniteCarrier::new(2).unwrap();
        let d = FiniteSpace::discrete(c);
        let t = BispaceTable::new(Bispace::doubled(d)).with_subspaces();
        assert_eq!(t.subspaces.len(), 4);
    }
}
