//! Verification engine for preopen-set properties of Alexandroff bispaces.
//!
//! Two space backends share one contract ([`backend::SpaceBackend`]):
//!
//! * [`finite`] holds explicit open families on small carriers and can
//!   enumerate every one of them, which the theorem suites sweep exhaustively;
//! * [`symbolic`] holds schematic families over cardinality-tagged atoms and
//!   decides closure, interior and openness in closed form, which is how the
//!   uncountable counterexamples in [`catalog`] are checked exactly.
//!
//! [`props`] and [`maps`] are written once against the contract, and
//! [`harness`] drives sweeps, user files and reports.

pub mod backend;
pub mod catalog;
pub mod exec;
pub mod finite;
pub mod harness;
pub mod maps;
pub mod mask;
pub mod props;
pub mod symbolic;

pub use backend::SpaceBackend;
pub use exec::Execution;
pub use finite::{enumerate_spaces, validate_space, FiniteCarrier, FiniteSpace};
pub use mask::{Mask, PointSet, SymSet};
pub use props::{Bispace, IndexPair, Openness, Side};
pub use symbolic::{Atom, AtomUniverse, Cardinality, SchematicFamily, SchematicSpace};
