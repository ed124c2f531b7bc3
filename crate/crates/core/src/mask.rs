//! Fixed-width subsets of a small indexed ground set.
//!
//! Both backends index their cells (points of a finite carrier, atoms of a
//! symbolic universe) by `0..64`, so a single 64-bit mask type serves as
//! `PointSet` and `SymSet` alike.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};

/// Largest number of cells a carrier or universe may hold.
///
/// Every algebra-quantified predicate walks all `2^cells` subsets, so the cap
/// is set by that cost rather than by the mask width.
pub const MAX_CELLS: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mask(u64);

/// A subset of a finite carrier.
pub type PointSet = Mask;
/// A union of atoms of an [`AtomUniverse`](crate::symbolic::AtomUniverse).
pub type SymSet = Mask;

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub const fn from_bits(bits: u64) -> Self {
        Mask(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The mask `{0, .., n-1}`.
    pub fn prefix(n: usize) -> Self {
        assert!(n <= 64, "mask width is 64 cells");
        if n == 64 {
            Mask(u64::MAX)
        } else {
            Mask((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < 64, "cell index {i} out of range");
        Mask(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        *self = *self | Mask::singleton(i);
    }

    pub fn with(self, i: usize) -> Self {
        self | Mask::singleton(i)
    }

    pub fn without(self, i: usize) -> Self {
        self - Mask::singleton(i)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Mask) -> bool {
        self.0 & other.0 != 0
    }

    /// One past the highest member, or 0 for the empty mask.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    pub fn first(self) -> Option<usize> {
        self.iter().next()
    }

    /// All subsets of `self`, in increasing numeric order.
    pub fn submasks(self) -> Submasks {
        Submasks {
            universe: self.0,
            next: Some(0),
        }
    }

    /// All subsets of `self` in canonical order (see [`Mask::canonical_cmp`]).
    pub fn submasks_canonical(self) -> Vec<Mask> {
        let mut all: Vec<Mask> = self.submasks().collect();
        all.sort_by(|a, b| a.canonical_cmp(b));
        all
    }

    /// Cardinality first, then the sorted member lists lexicographically.
    pub fn canonical_cmp(&self, other: &Mask) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for Mask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Mask::EMPTY, |acc, i| acc | Mask::singleton(i))
    }
}

impl BitOr for Mask {
    type Output = Mask;
    fn bitor(self, rhs: Mask) -> Mask {
        Mask(self.0 | rhs.0)
    }
}

impl BitAnd for Mask {
    type Output = Mask;
    fn bitand(self, rhs: Mask) -> Mask {
        Mask(self.0 & rhs.0)
    }
}

impl Sub for Mask {
    type Output = Mask;
    fn sub(self, rhs: Mask) -> Mask {
        Mask(self.0 & !rhs.0)
    }
}

impl Not for Mask {
    type Output = Mask;
    fn not(self) -> Mask {
        Mask(!self.0)
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

pub struct Submasks {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        let current = self.next?;
        self.next = if current == self.universe {
            None
        } else {
            // next submask in increasing order
            Some((current | !self.universe).wrapping_add(1) & self.universe)
        };
        Some(Mask(current))
    }
}
