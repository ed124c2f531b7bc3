//! The contract every space representation satisfies so that the preopen
//! predicates can be written once.

use std::fmt::Debug;

use crate::mask::Mask;

/// A σ-space whose representable sets are the subsets of a finite cell set.
///
/// For finite spaces the cells are points and every subset is representable.
/// For schematic spaces the cells are atoms and only atom unions are; the
/// open family itself still ranges over sets that split atoms, and the
/// existential operations below quantify over that full family.
pub trait SpaceBackend: Clone + Debug + Send + Sync {
    /// The carrier `X` as a mask of cells.
    fn ground(&self) -> Mask;

    fn is_open(&self, s: Mask) -> bool;

    fn closure(&self, s: Mask) -> Mask;

    fn interior(&self, s: Mask) -> Mask;

    /// Some open `U` with `lower ⊆ U ⊆ upper`, searched over every open set.
    ///
    /// Callers guarantee `lower ⊆ upper`. The returned witness is the
    /// canonical smallest one.
    fn open_witness(&self, lower: Mask, upper: Mask) -> Option<Mask>;

    /// Whether some `opener`-open `O` satisfies `O ⊆ a ⊆ closer.closure(O)`.
    fn semiopen_in(opener: &Self, closer: &Self, a: Mask) -> bool;

    /// Whether `a ⊆ opener.interior(G)` for every `closer`-closed `G ⊇ a`.
    fn closed_supersets_absorbed(closer: &Self, opener: &Self, a: Mask) -> bool;

    /// The trace space on `y`.
    fn subspace(&self, y: Mask) -> Self;

    /// Every distinct trace `U ∩ t` of an open `U`.
    ///
    /// Only defined when `t` consists of cells that denote single points;
    /// images of maps always do.
    fn open_traces(&self, t: Mask) -> Vec<Mask>;

    /// Every distinct set of cells met by some open set.
    fn open_footprints(&self) -> Vec<Mask>;

    /// True when quantifying over representable sets is the same as
    /// quantifying over all subsets of the carrier.
    fn algebra_is_exact(&self) -> bool;

    /// Whether the union of the cells in `s` is a countable set.
    fn is_countable(&self, s: Mask) -> bool {
        let _ = s;
        true
    }

    fn cell_name(&self, cell: usize) -> String;

    fn cell_index(&self, name: &str) -> Option<usize>;

    /// All representable sets in canonical order.
    fn algebra_sets(&self) -> Vec<Mask> {
        self.ground().submasks_canonical()
    }

    fn is_closed(&self, s: Mask) -> bool {
        self.is_open(self.ground() - s)
    }

    fn describe(&self, s: Mask) -> String {
        let names: Vec<String> = s.iter().map(|c| self.cell_name(c)).collect();
        format!("{{{}}}", names.join(","))
    }
}
