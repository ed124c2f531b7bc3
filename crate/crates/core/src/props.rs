//! Preopen-family predicates on bispaces, generic over [`SpaceBackend`].
//!
//! Every predicate of the form "there is an open `U` with `A ⊆ U ⊆ …`" goes
//! through [`SpaceBackend::open_witness`], so each backend decides that
//! existential exactly once. Predicates whose witness is itself a preopen set
//! (semipreopen, preclosures) search the representable sets only; on
//! schematic backends those verdicts are relative to the atom algebra and
//! [`Bispace::algebra_is_exact`] reports as much.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::backend::SpaceBackend;
use crate::mask::Mask;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropError {
    #[error("the two structures live on different carriers ({0} vs {1})")]
    CarrierMismatch(Mask, Mask),
    #[error("lower bound {lower} is not contained in upper bound {upper}")]
    NotSubset { lower: Mask, upper: Mask },
    #[error("index pair ({0},{1}) must be (1,2) or (2,1)")]
    BadIndexPair(u8, u8),
    #[error("space index {0} must be 1 or 2")]
    BadSide(u8),
}

/// Which of the two structures of a bispace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::First, Side::Second];

    pub fn other(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Side::First => 1,
            Side::Second => 2,
        }
    }
}

impl TryFrom<u8> for Side {
    type Error = PropError;
    fn try_from(k: u8) -> Result<Self, PropError> {
        match k {
            1 => Ok(Side::First),
            2 => Ok(Side::Second),
            _ => Err(PropError::BadSide(k)),
        }
    }
}

impl From<Side> for u8 {
    fn from(s: Side) -> u8 {
        s.number()
    }
}

/// An ordered pair `(i, j)` with `i ≠ j`: `τ_i` supplies open sets, `τ_j`
/// closures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u8; 2]", into = "[u8; 2]")]
pub enum IndexPair {
    OneTwo,
    TwoOne,
}

impl IndexPair {
    pub const BOTH: [IndexPair; 2] = [IndexPair::OneTwo, IndexPair::TwoOne];

    pub fn new(i: u8, j: u8) -> Result<Self, PropError> {
        match (i, j) {
            (1, 2) => Ok(IndexPair::OneTwo),
            (2, 1) => Ok(IndexPair::TwoOne),
            _ => Err(PropError::BadIndexPair(i, j)),
        }
    }

    /// The pair whose opener is `side`.
    pub fn opening(side: Side) -> Self {
        match side {
            Side::First => IndexPair::OneTwo,
            Side::Second => IndexPair::TwoOne,
        }
    }

    pub fn i(self) -> Side {
        match self {
            IndexPair::OneTwo => Side::First,
            IndexPair::TwoOne => Side::Second,
        }
    }

    pub fn j(self) -> Side {
        self.i().other()
    }

    pub fn swap(self) -> Self {
        IndexPair::opening(self.j())
    }
}

impl TryFrom<[u8; 2]> for IndexPair {
    type Error = PropError;
    fn try_from([i, j]: [u8; 2]) -> Result<Self, PropError> {
        IndexPair::new(i, j)
    }
}

impl From<IndexPair> for [u8; 2] {
    fn from(p: IndexPair) -> [u8; 2] {
        [p.i().number(), p.j().number()]
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i().number(), self.j().number())
    }
}

/// Two structures on one carrier.
#[derive(Debug, Clone, PartialEq)]
pub struct Bispace<B> {
    first: B,
    second: B,
}

impl<B: SpaceBackend> Bispace<B> {
    pub fn new(first: B, second: B) -> Result<Self, PropError> {
        if first.ground() != second.ground() {
            return Err(PropError::CarrierMismatch(first.ground(), second.ground()));
        }
        Ok(Bispace { first, second })
    }

    /// The bispace `(X, τ, τ)`, used to read single-space statements.
    pub fn doubled(space: B) -> Self {
        Bispace {
            second: space.clone(),
            first: space,
        }
    }

    pub fn ground(&self) -> Mask {
        self.first.ground()
    }

    pub fn space(&self, side: Side) -> &B {
        match side {
            Side::First => &self.first,
            Side::Second => &self.second,
        }
    }

    pub fn first(&self) -> &B {
        &self.first
    }

    pub fn second(&self) -> &B {
        &self.second
    }

    /// `τ_i`.
    pub fn opener(&self, idx: IndexPair) -> &B {
        self.space(idx.i())
    }

    /// `τ_j`.
    pub fn closer(&self, idx: IndexPair) -> &B {
        self.space(idx.j())
    }

    pub fn algebra_is_exact(&self) -> bool {
        self.first.algebra_is_exact() && self.second.algebra_is_exact()
    }

    pub fn algebra_sets(&self) -> Vec<Mask> {
        self.first.algebra_sets()
    }

    pub fn describe(&self, s: Mask) -> String {
        self.first.describe(s)
    }

    /// Open in both structures.
    pub fn is_biopen(&self, s: Mask) -> bool {
        self.first.is_open(s) && self.second.is_open(s)
    }
}

/// An open `U` with `lower ⊆ U ⊆ upper`, or `None` when no open set of the
/// whole family fits.
pub fn open_between<B: SpaceBackend>(space: &B, lower: Mask, upper: Mask) -> Result<Option<Mask>, PropError> {
    if !lower.is_subset(upper) {
        return Err(PropError::NotSubset { lower, upper });
    }
    Ok(space.open_witness(lower, upper))
}

pub fn preopen_witness<B: SpaceBackend>(space: &B, a: Mask) -> Option<Mask> {
    space.open_witness(a, space.closure(a))
}

/// Some open `U` with `A ⊆ U ⊆ cl(A)`.
pub fn is_preopen<B: SpaceBackend>(space: &B, a: Mask) -> bool {
    preopen_witness(space, a).is_some()
}

/// `A ⊆ int(cl(A))`.
pub fn is_weakly_preopen<B: SpaceBackend>(space: &B, a: Mask) -> bool {
    a.is_subset(space.interior(space.closure(a)))
}

pub fn ij_preopen_witness<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> Option<Mask> {
    bi.opener(idx).open_witness(a, bi.closer(idx).closure(a))
}

/// Some `τ_i`-open `U` with `A ⊆ U ⊆ τ_j cl(A)`.
pub fn is_ij_preopen<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> bool {
    ij_preopen_witness(bi, idx, a).is_some()
}

/// `A ⊆ τ_i int(τ_j cl(A))`.
pub fn is_ij_weakly_preopen<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> bool {
    a.is_subset(bi.opener(idx).interior(bi.closer(idx).closure(a)))
}

pub fn is_pairwise_preopen<B: SpaceBackend>(bi: &Bispace<B>, a: Mask) -> bool {
    IndexPair::BOTH.iter().all(|&idx| is_ij_preopen(bi, idx, a))
}

/// Some `τ_i`-open `O` with `O ⊆ A ⊆ τ_j cl(O)`.
pub fn is_ij_semiopen<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> bool {
    B::semiopen_in(bi.opener(idx), bi.closer(idx), a)
}

/// Whether `u` certifies `a` as semipreopen: `u` is `(i,j)`-preopen and
/// `u ⊆ a ⊆ τ_j cl(u)`.
pub fn certifies_semipreopen<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, u: Mask, a: Mask) -> bool {
    u.is_subset(a) && a.is_subset(bi.closer(idx).closure(u)) && is_ij_preopen(bi, idx, u)
}

/// The canonically smallest representable `U` certifying `a`.
pub fn ij_semipreopen_witness<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> Option<Mask> {
    a.submasks_canonical()
        .into_iter()
        .find(|&u| certifies_semipreopen(bi, idx, u, a))
}

pub fn is_ij_semipreopen<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> bool {
    ij_semipreopen_witness(bi, idx, a).is_some()
}

pub fn is_ij_preclosed<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> bool {
    is_ij_preopen(bi, idx, bi.ground() - a)
}

pub fn is_ij_semipreclosed<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> bool {
    is_ij_semipreopen(bi, idx, bi.ground() - a)
}

fn intersect_supersets(ground: Mask, a: Mask, sets: impl Iterator<Item = Mask>) -> Mask {
    sets.filter(|f| a.is_subset(*f)).fold(ground, |acc, f| acc & f)
}

/// Intersection of the representable `(i,j)`-preclosed supersets of `a`.
pub fn pcl<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> Mask {
    let g = bi.ground();
    intersect_supersets(
        g,
        a,
        (g - a)
            .submasks()
            .map(|u| g - u)
            .filter(|&f| is_ij_preclosed(bi, idx, f)),
    )
}

/// Intersection of the representable `(i,j)`-semipreclosed supersets of `a`.
pub fn spcl<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> Mask {
    let g = bi.ground();
    intersect_supersets(
        g,
        a,
        (g - a)
            .submasks()
            .map(|u| g - u)
            .filter(|&f| is_ij_semipreclosed(bi, idx, f)),
    )
}

/// Whether `A ⊆ τ_i int(G)` for every `τ_j`-closed `G ⊇ A`.
pub fn closed_supersets_in_interior<B: SpaceBackend>(bi: &Bispace<B>, idx: IndexPair, a: Mask) -> bool {
    B::closed_supersets_absorbed(bi.closer(idx), bi.opener(idx), a)
}

/// The trace bispace on `y`.
pub fn subspace<B: SpaceBackend>(bi: &Bispace<B>, y: Mask) -> Bispace<B> {
    Bispace {
        first: bi.first.subspace(y),
        second: bi.second.subspace(y),
    }
}

/// The grades of openness a map's preimages can be asked to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Openness {
    /// `τ_i`-open.
    Open,
    Preopen,
    Semiopen,
    Semipreopen,
}

impl Openness {
    pub const ALL: [Openness; 4] = [
        Openness::Open,
        Openness::Preopen,
        Openness::Semiopen,
        Openness::Semipreopen,
    ];

    pub fn holds<B: SpaceBackend>(self, bi: &Bispace<B>, idx: IndexPair, a: Mask) -> bool {
        match self {
            Openness::Open => bi.opener(idx).is_open(a),
            Openness::Preopen => is_ij_preopen(bi, idx, a),
            Openness::Semiopen => is_ij_semiopen(bi, idx, a),
            Openness::Semipreopen => is_ij_semipreopen(bi, idx, a),
        }
    }

    /// Whether the verdict quantifies over representable sets only.
    pub fn searches_algebra(self) -> bool {
        matches!(self, Openness::Semipreopen)
    }
}
