//! σ-spaces on finite carriers.
//!
//! On a finite carrier countable unions are finite unions, so the σ-axioms
//! reduce to the topology axioms and every space here is a topological space.
//! The gap between the two preopenness conditions therefore never shows up in
//! this module; the schematic backend in [`crate::symbolic`] is where it does.

use thiserror::Error;

use crate::backend::SpaceBackend;
use crate::mask::{Mask, PointSet, MAX_CELLS};

/// Largest carrier [`enumerate_spaces`] accepts.
pub const MAX_ENUMERATION_POINTS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("carrier size {0} is outside 1..={MAX_CELLS}")]
    CarrierSize(usize),
    #[error("set {set} is not contained in the carrier {carrier}")]
    NotInCarrier { set: PointSet, carrier: PointSet },
    #[error("the empty set is missing from the open family")]
    MissingEmpty,
    #[error("the carrier {0} is missing from the open family")]
    MissingCarrier(PointSet),
    #[error("union of {a} and {b} is not in the open family")]
    UnionMissing { a: PointSet, b: PointSet },
    #[error("intersection of {a} and {b} is not in the open family")]
    IntersectionMissing { a: PointSet, b: PointSet },
    #[error("enumeration supports carriers of 1..={MAX_ENUMERATION_POINTS} points, got {0}")]
    EnumerationRange(usize),
}

/// The points `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteCarrier {
    n: usize,
}

impl FiniteCarrier {
    pub fn new(n: usize) -> Result<Self, SpaceError> {
        if n == 0 || n > MAX_CELLS {
            return Err(SpaceError::CarrierSize(n));
        }
        Ok(FiniteCarrier { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> PointSet {
        Mask::prefix(self.n)
    }
}

/// An explicit open family, canonically ordered and duplicate free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    ground: PointSet,
    opens: Vec<PointSet>,
    // raw bits of `opens`, sorted numerically for membership tests
    lookup: Vec<u64>,
}

/// Check the open-set axioms for `family` over `carrier`.
///
/// Duplicates are dropped and the family is put in canonical order. The
/// first violated axiom is reported together with the sets that witness it.
pub fn validate_space(carrier: FiniteCarrier, family: &[PointSet]) -> Result<FiniteSpace, SpaceError> {
    validate_on(carrier.points(), family)
}

pub(crate) fn validate_on(ground: PointSet, family: &[PointSet]) -> Result<FiniteSpace, SpaceError> {
    if let Some(&set) = family.iter().find(|s| !s.is_subset(ground)) {
        return Err(SpaceError::NotInCarrier { set, carrier: ground });
    }
    if !family.contains(&Mask::EMPTY) {
        return Err(SpaceError::MissingEmpty);
    }
    if !family.contains(&ground) {
        return Err(SpaceError::MissingCarrier(ground));
    }
    let space = FiniteSpace::from_parts(ground, family.to_vec());
    for (k, &a) in space.opens.iter().enumerate() {
        for &b in &space.opens[k + 1..] {
            if !space.is_open(a | b) {
                return Err(SpaceError::UnionMissing { a, b });
            }
            if !space.is_open(a & b) {
                return Err(SpaceError::IntersectionMissing { a, b });
            }
        }
    }
    Ok(space)
}

impl FiniteSpace {
    /// Builds without checking the axioms; `opens` may be unsorted and may
    /// contain duplicates.
    fn from_parts(ground: PointSet, mut opens: Vec<PointSet>) -> Self {
        opens.sort_by(|a, b| a.canonical_cmp(b));
        opens.dedup();
        let mut lookup: Vec<u64> = opens.iter().map(|m| m.bits()).collect();
        lookup.sort_unstable();
        FiniteSpace { ground, opens, lookup }
    }

    pub fn indiscrete(carrier: FiniteCarrier) -> Self {
        Self::from_parts(carrier.points(), vec![Mask::EMPTY, carrier.points()])
    }

    pub fn discrete(carrier: FiniteCarrier) -> Self {
        Self::from_parts(carrier.points(), carrier.points().submasks().collect())
    }

    pub fn points(&self) -> PointSet {
        self.ground
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.lookup.binary_search(&s.bits()).is_ok()
    }

    /// Intersection of the closed sets containing `s`.
    pub fn closure(&self, s: PointSet) -> PointSet {
        let avoiding = self
            .opens
            .iter()
            .filter(|u| !u.meets(s))
            .fold(Mask::EMPTY, |acc, &u| acc | u);
        self.ground - avoiding
    }

    /// Union of the open sets inside `s`.
    pub fn interior(&self, s: PointSet) -> PointSet {
        self.opens
            .iter()
            .filter(|u| u.is_subset(s))
            .fold(Mask::EMPTY, |acc, &u| acc | u)
    }

    /// Points every open neighbourhood of which meets `s` away from the point.
    pub fn limit_points(&self, s: PointSet) -> PointSet {
        self.ground
            .iter()
            .filter(|&x| {
                let rest = s.without(x);
                self.opens.iter().filter(|u| u.contains(x)).all(|u| u.meets(rest))
            })
            .collect()
    }
}

impl SpaceBackend for FiniteSpace {
    fn ground(&self) -> Mask {
        self.ground
    }

    fn is_open(&self, s: Mask) -> bool {
        FiniteSpace::is_open(self, s)
    }

    fn closure(&self, s: Mask) -> Mask {
        FiniteSpace::closure(self, s)
    }

    fn interior(&self, s: Mask) -> Mask {
        FiniteSpace::interior(self, s)
    }

    fn open_witness(&self, lower: Mask, upper: Mask) -> Option<Mask> {
        self.opens
            .iter()
            .copied()
            .find(|u| lower.is_subset(*u) && u.is_subset(upper))
    }

    fn semiopen_in(opener: &Self, closer: &Self, a: Mask) -> bool {
        opener
            .opens
            .iter()
            .any(|&o| o.is_subset(a) && a.is_subset(closer.closure(o)))
    }

    fn closed_supersets_absorbed(closer: &Self, opener: &Self, a: Mask) -> bool {
        closer
            .opens
            .iter()
            .filter(|u| !u.meets(a))
            .all(|&u| a.is_subset(opener.interior(closer.ground - u)))
    }

    fn subspace(&self, y: Mask) -> Self {
        let y = y & self.ground;
        FiniteSpace::from_parts(y, self.opens.iter().map(|&u| u & y).collect())
    }

    fn open_traces(&self, t: Mask) -> Vec<Mask> {
        let mut traces: Vec<Mask> = self.opens.iter().map(|&u| u & t).collect();
        traces.sort_by(|a, b| a.canonical_cmp(b));
        traces.dedup();
        traces
    }

    fn open_footprints(&self) -> Vec<Mask> {
        self.opens.clone()
    }

    fn algebra_is_exact(&self) -> bool {
        true
    }

    fn cell_name(&self, cell: usize) -> String {
        cell.to_string()
    }

    fn cell_index(&self, name: &str) -> Option<usize> {
        name.parse::<usize>().ok().filter(|&i| self.ground.contains(i))
    }
}

/// Every σ-space (equivalently, topology) on `n` points, in canonical order.
///
/// Spaces are generated from preorders: on a finite set the open families
/// closed under union and intersection are exactly the up-set families of
/// preorders, and distinct preorders give distinct families.
pub fn enumerate_spaces(n: usize) -> Result<Vec<FiniteSpace>, SpaceError> {
    if n == 0 || n > MAX_ENUMERATION_POINTS {
        return Err(SpaceError::EnumerationRange(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let ground = Mask::prefix(n);
    let mut spaces = Vec::new();
    for pattern in 0u64..(1u64 << pairs.len()) {
        // up[x] = points above x
        let mut up: Vec<Mask> = (0..n).map(Mask::singleton).collect();
        for (bit, &(x, y)) in pairs.iter().enumerate() {
            if pattern >> bit & 1 == 1 {
                up[x].insert(y);
            }
        }
        let transitive = (0..n).all(|x| up[x].iter().all(|y| up[y].is_subset(up[x])));
        if !transitive {
            continue;
        }
        let opens: Vec<Mask> = ground
            .submasks()
            .filter(|u| u.iter().all(|x| up[x].is_subset(*u)))
            .collect();
        spaces.push(FiniteSpace::from_parts(ground, opens));
    }
    spaces.sort_by(|a, b| {
        a.opens.len().cmp(&b.opens.len()).then_with(|| {
            a.opens
                .iter()
                .zip(&b.opens)
                .map(|(x, y)| x.canonical_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    Ok(spaces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[usize]) -> Mask {
        points.iter().copied().collect()
    }

    fn carrier(n: usize) -> FiniteCarrier {
        FiniteCarrier::new(n).unwrap()
    }

    fn sierpinski() -> FiniteSpace {
        validate_space(carrier(2), &[set(&[]), set(&[0]), set(&[0, 1])]).unwrap()
    }

    #[test]
    fn minimal_and_sierpinski_families_validate() {
        let indiscrete = validate_space(carrier(2), &[set(&[]), set(&[0, 1])]).unwrap();
        assert_eq!(indiscrete.opens().len(), 2);
        assert_eq!(sierpinski().opens(), &[set(&[]), set(&[0]), set(&[0, 1])]);
    }

    #[test]
    fn missing_union_is_reported_with_witnesses() {
        let err = validate_space(carrier(3), &[set(&[]), set(&[0]), set(&[1]), set(&[0, 1, 2])]).unwrap_err();
        assert_eq!(
            err,
            SpaceError::UnionMissing {
                a: set(&[0]),
                b: set(&[1])
            }
        );
    }

    #[test]
    fn missing_intersection_is_reported() {
        let err = validate_space(carrier(3), &[set(&[]), set(&[0, 1]), set(&[1, 2]), set(&[0, 1, 2])]).unwrap_err();
        assert_eq!(
            err,
            SpaceError::IntersectionMissing {
                a: set(&[0, 1]),
                b: set(&[1, 2])
            }
        );
    }

    #[test]
    fn axioms_three_and_four_are_enforced() {
        assert_eq!(
            validate_space(carrier(2), &[set(&[0, 1])]).unwrap_err(),
            SpaceError::MissingEmpty
        );
        assert_eq!(
            validate_space(carrier(2), &[set(&[])]).unwrap_err(),
            SpaceError::MissingCarrier(set(&[0, 1]))
        );
        assert!(matches!(
            validate_space(carrier(2), &[set(&[]), set(&[0, 1]), set(&[5])]),
            Err(SpaceError::NotInCarrier { .. })
        ));
        assert_eq!(FiniteCarrier::new(0).unwrap_err(), SpaceError::CarrierSize(0));
    }

    #[test]
    fn duplicates_are_dropped_and_order_is_canonical() {
        let s = validate_space(carrier(2), &[set(&[0, 1]), set(&[0]), set(&[]), set(&[0])]).unwrap();
        assert_eq!(s.opens(), sierpinski().opens());
    }

    #[test]
    fn closure_examples() {
        let indiscrete = FiniteSpace::indiscrete(carrier(2));
        assert_eq!(indiscrete.closure(set(&[0])), set(&[0, 1]));
        assert_eq!(sierpinski().closure(Mask::EMPTY), Mask::EMPTY);
        let discrete = FiniteSpace::discrete(carrier(3));
        assert_eq!(discrete.closure(set(&[0, 2])), set(&[0, 2]));
    }

    #[test]
    fn interior_examples() {
        let indiscrete = FiniteSpace::indiscrete(carrier(2));
        assert_eq!(indiscrete.interior(set(&[0, 1])), set(&[0, 1]));
        assert_eq!(indiscrete.interior(set(&[0])), Mask::EMPTY);
        assert_eq!(sierpinski().interior(set(&[0])), set(&[0]));
    }

    #[test]
    fn limit_point_examples() {
        // 0 is not a limit point of {0}: its only neighbourhood misses {0} − {0}
        let indiscrete = FiniteSpace::indiscrete(carrier(2));
        assert_eq!(indiscrete.limit_points(set(&[0])), set(&[1]));
        assert_eq!(indiscrete.limit_points(set(&[0, 1])), set(&[0, 1]));
        let discrete = FiniteSpace::discrete(carrier(3));
        for s in discrete.points().submasks() {
            assert_eq!(discrete.limit_points(s), Mask::EMPTY);
        }
        assert_eq!(sierpinski().limit_points(set(&[0])), set(&[1]));
    }

    #[test]
    fn enumeration_range_is_checked() {
        assert_eq!(enumerate_spaces(0).unwrap_err(), SpaceError::EnumerationRange(0));
        assert_eq!(enumerate_spaces(5).unwrap_err(), SpaceError::EnumerationRange(5));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_spaces(1).unwrap().len(), 1);
        assert_eq!(enumerate_spaces(2).unwrap().len(), 4);
    }

    #[test]
    fn subspace_traces_the_family() {
        let s = sierpinski();
        let sub = s.subspace(set(&[1]));
        assert_eq!(sub.points(), set(&[1]));
        assert_eq!(sub.opens(), &[set(&[]), set(&[1])]);
    }
}
