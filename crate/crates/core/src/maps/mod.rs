//! Maps between bispaces and the continuity hierarchy.
//!
//! A map is stored cell to cell. For finite carriers the cells are points.
//! For schematic spaces every source atom is sent to a single-point target
//! atom, so the map is constant on atoms and images of atom unions are exact.
//!
//! Schematic targets have infinitely many open sets, but a preimage only sees
//! `U ∩ f(X)`, and `f(X)` is a finite set of single points. Quantifiers over
//! target opens therefore run over [`SpaceBackend::open_traces`] on the image,
//! and quantifiers over source opens (for openness of the map) run over
//! [`SpaceBackend::open_footprints`].

pub mod nets;

use thiserror::Error;

use crate::backend::SpaceBackend;
use crate::finite::FiniteCarrier;
use crate::mask::Mask;
use crate::props::{self, Bispace, IndexPair, Openness, Side};
use crate::symbolic::{AtomUniverse, Cardinality};

pub use nets::{net_converges, FiniteDirectedSet, Net, NetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("assignment has {got} entries for {expected} source cells")]
    WrongLength { expected: usize, got: usize },
    #[error("cell {cell} is sent to {image}, outside the target")]
    OutsideTarget { cell: usize, image: usize },
    #[error("source atom `{0}` has no image")]
    NotTotal(String),
    #[error("image atom `{0}` is not a single point")]
    NonSingletonImage(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("map runs {map_source} -> {map_target} but the bispaces live on {source_ground} and {target_ground}")]
    CarrierMismatch {
        map_source: Mask,
        map_target: Mask,
        source_ground: Mask,
        target_ground: Mask,
    },
    #[error("restriction domain {0} is not open in both structures")]
    NotBiopen(Mask),
}

/// A total function between cell sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellMap {
    source: Mask,
    target: Mask,
    // indexed by cell; entries outside `source` are unused
    assignment: Vec<usize>,
}

/// A point map between finite carriers.
pub type FiniteMap = CellMap;
/// An atom-to-single-point map between universes.
pub type AtomMap = CellMap;

impl CellMap {
    pub fn finite(source: FiniteCarrier, target: FiniteCarrier, assignment: Vec<usize>) -> Result<Self, MapError> {
        if assignment.len() != source.len() {
            return Err(MapError::WrongLength {
                expected: source.len(),
                got: assignment.len(),
            });
        }
        if let Some((cell, &image)) = assignment.iter().enumerate().find(|(_, &y)| y >= target.len()) {
            return Err(MapError::OutsideTarget { cell, image });
        }
        Ok(CellMap {
            source: source.points(),
            target: target.points(),
            assignment,
        })
    }

    /// `pairs` lists `(source atom, target atom)`; every source atom must
    /// appear and every image must be a single point.
    pub fn atoms(source: &AtomUniverse, target: &AtomUniverse, pairs: &[(&str, &str)]) -> Result<Self, MapError> {
        let mut assignment = vec![usize::MAX; source.len()];
        for &(from, to) in pairs {
            let s = source
                .index_of(from)
                .ok_or_else(|| MapError::UnknownAtom(from.to_owned()))?;
            let t = target
                .index_of(to)
                .ok_or_else(|| MapError::UnknownAtom(to.to_owned()))?;
            if target.atom(t).cardinality != Cardinality::Singleton {
                return Err(MapError::NonSingletonImage(to.to_owned()));
            }
            assignment[s] = t;
        }
        if let Some(s) = assignment.iter().position(|&t| t == usize::MAX) {
            return Err(MapError::NotTotal(source.atom(s).id.clone()));
        }
        Ok(CellMap {
            source: source.all(),
            target: target.all(),
            assignment,
        })
    }

    pub fn identity(ground: Mask) -> Self {
        CellMap {
            source: ground,
            target: ground,
            assignment: (0..ground.span()).collect(),
        }
    }

    pub fn source(&self) -> Mask {
        self.source
    }

    pub fn target(&self) -> Mask {
        self.target
    }

    pub fn apply(&self, cell: usize) -> usize {
        debug_assert!(self.source.contains(cell));
        self.assignment[cell]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn image(&self, s: Mask) -> Mask {
        (s & self.source).iter().map(|c| self.assignment[c]).collect()
    }

    pub fn preimage(&self, s: Mask) -> Mask {
        self.source.iter().filter(|&c| s.contains(self.assignment[c])).collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source) == self.target
    }

    /// The same assignment on the smaller domain `domain`.
    pub fn restrict(&self, domain: Mask) -> CellMap {
        CellMap {
            source: domain & self.source,
            target: self.target,
            assignment: self.assignment.clone(),
        }
    }
}

fn check_carriers<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
) -> Result<(), MapError> {
    if map.source != x.ground() || map.target != y.ground() {
        return Err(MapError::CarrierMismatch {
            map_source: map.source,
            map_target: map.target,
            source_ground: x.ground(),
            target_ground: y.ground(),
        });
    }
    Ok(())
}

/// Every set `U ∩ f(X)` with `U` open in `σ_side`.
fn target_traces<C: SpaceBackend>(map: &CellMap, y: &Bispace<C>, side: Side) -> Vec<Mask> {
    y.space(side).open_traces(map.image(map.source))
}

/// Whether the preimage of every `σ_i`-open set has `kind` as an
/// `(i,j)`-subset of `X`, for the single index `i` given by `side`.
pub fn preimage_condition_at<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
    side: Side,
    kind: Openness,
) -> Result<bool, MapError> {
    check_carriers(map, x, y)?;
    let idx = IndexPair::opening(side);
    Ok(target_traces(map, y, side)
        .into_iter()
        .all(|v| kind.holds(x, idx, map.preimage(v))))
}

/// [`preimage_condition_at`] for both indices.
pub fn preimage_condition<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
    kind: Openness,
) -> Result<bool, MapError> {
    for side in Side::BOTH {
        if !preimage_condition_at(map, x, y, side, kind)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_pairwise_continuous<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
) -> Result<bool, MapError> {
    preimage_condition(map, x, y, Openness::Open)
}

pub fn is_pairwise_precontinuous<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
) -> Result<bool, MapError> {
    preimage_condition(map, x, y, Openness::Preopen)
}

pub fn is_pairwise_semi_continuous<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
) -> Result<bool, MapError> {
    preimage_condition(map, x, y, Openness::Semiopen)
}

pub fn is_pairwise_sp_continuous<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
) -> Result<bool, MapError> {
    preimage_condition(map, x, y, Openness::Semipreopen)
}

/// Images of `τ_i`-open sets are `σ_i`-open, for both indices.
pub fn is_pairwise_open_map<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
) -> Result<bool, MapError> {
    check_carriers(map, x, y)?;
    Ok(Side::BOTH.iter().all(|&side| {
        x.space(side)
            .open_footprints()
            .into_iter()
            .all(|f| y.space(side).is_open(map.image(f)))
    }))
}

/// `f(cl A) ⊆ cl f(A)` in single spaces.
pub fn check_closure_preservation<B: SpaceBackend, C: SpaceBackend>(map: &CellMap, x: &B, y: &C, a: Mask) -> bool {
    map.image(x.closure(a)).is_subset(y.closure(map.image(a)))
}

/// Compares "preimages of `σ_i`-open sets have `kind`" against "preimages of
/// `σ_i`-closed sets have the complementary closed grade", each computed on
/// its own. Returns whether the two sides agree.
pub fn closed_preimage_characterization<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
    kind: Openness,
) -> Result<bool, MapError> {
    let open_side = preimage_condition(map, x, y, kind)?;
    let closed_side = Side::BOTH.iter().all(|&side| {
        let idx = IndexPair::opening(side);
        target_traces(map, y, side).into_iter().all(|v| {
            let closed = map.preimage(y.ground() - v);
            match kind {
                Openness::Preopen => props::is_ij_preclosed(x, idx, closed),
                Openness::Semipreopen => props::is_ij_semipreclosed(x, idx, closed),
                Openness::Open => x.space(side).is_closed(closed),
                Openness::Semiopen => props::is_ij_semiopen(x, idx, x.ground() - closed),
            }
        })
    });
    Ok(open_side == closed_side)
}

/// The three consequences of (semi)precontinuity for one index pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Consequences {
    /// Every `σ_i`-open `V ∋ f(x)` has a graded `U ∋ x` with `f(U) ⊆ V`.
    pub neighbourhoods: bool,
    /// `f(cl*(A)) ⊆ σ_i cl(f(A))` for every representable `A`.
    pub closure_image: bool,
    /// `cl*(f⁻¹(B)) ⊆ f⁻¹(σ_i cl(B))` for every representable `B`.
    pub closure_preimage: bool,
}

impl Consequences {
    pub fn all(&self) -> bool {
        self.neighbourhoods && self.closure_image && self.closure_preimage
    }
}

/// Evaluates the consequences for `kind` = preopen (with `pcl`) or
/// semipreopen (with `spcl`) at index pair `idx`. The map's continuity grade
/// is not checked here.
pub fn continuity_consequences<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
    idx: IndexPair,
    kind: Openness,
) -> Result<Consequences, MapError> {
    check_carriers(map, x, y)?;
    let target = y.space(idx.i());
    let graded_closure = |a: Mask| match kind {
        Openness::Semipreopen => props::spcl(x, idx, a),
        _ => props::pcl(x, idx, a),
    };
    let graded: Vec<Mask> = x
        .algebra_sets()
        .into_iter()
        .filter(|&u| kind.holds(x, idx, u))
        .collect();
    let traces = target_traces(map, y, idx.i());
    let neighbourhoods = x.ground().iter().all(|p| {
        let fp = map.apply(p);
        traces
            .iter()
            .filter(|v| v.contains(fp))
            .all(|&v| graded.iter().any(|&u| u.contains(p) && map.image(u).is_subset(v)))
    });
    let closure_image = x
        .algebra_sets()
        .into_iter()
        .all(|a| map.image(graded_closure(a)).is_subset(target.closure(map.image(a))));
    let closure_preimage = y
        .algebra_sets()
        .into_iter()
        .all(|b| graded_closure(map.preimage(b)).is_subset(map.preimage(target.closure(b))));
    Ok(Consequences {
        neighbourhoods,
        closure_image,
        closure_preimage,
    })
}

/// Consequences of pairwise precontinuity at both index pairs.
pub fn precontinuity_consequences<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    y: &Bispace<C>,
) -> Result<[(IndexPair, Consequences); 2], MapError> {
    Ok([
        (
            IndexPair::OneTwo,
            continuity_consequences(map, x, y, IndexPair::OneTwo, Openness::Preopen)?,
        ),
        (
            IndexPair::TwoOne,
            continuity_consequences(map, x, y, IndexPair::TwoOne, Openness::Preopen)?,
        ),
    ])
}

/// The restriction of `map` to the trace bispace on `domain`, which must be
/// open in both structures.
pub fn restrict_map<B: SpaceBackend>(
    map: &CellMap,
    x: &Bispace<B>,
    domain: Mask,
) -> Result<(CellMap, Bispace<B>), MapError> {
    if !domain.is_subset(x.ground()) || !x.is_biopen(domain) {
        return Err(MapError::NotBiopen(domain));
    }
    Ok((map.restrict(domain), props::subspace(x, domain)))
}

/// `f(τ_j cl f⁻¹(U*)) = U*` for every `σ_i`-open `U*`.
///
/// `U* = Y` is taken literally, so a map that is not onto never satisfies
/// the condition.
pub fn satisfies_condition_c<B: SpaceBackend, C: SpaceBackend>(
    map: &CellMap,
    idx: IndexPair,
    x: &Bispace<B>,
    y: &Bispace<C>,
) -> Result<bool, MapError> {
    check_carriers(map, x, y)?;
    if !map.is_surjective() {
        return Ok(false);
    }
    let closer = x.closer(idx);
    Ok(target_traces(map, y, idx.i())
        .into_iter()
        .all(|v| map.image(closer.closure(map.preimage(v))) == v))
}

/// Under `(i,j)`-precontinuity and condition C, a net converging to `p` in
/// `τ_i` has an image converging to `f(p)` in `σ_i`. Returns `true`
/// vacuously when the hypotheses fail.
pub fn check_net_image_convergence(
    map: &CellMap,
    idx: IndexPair,
    x: &Bispace<crate::finite::FiniteSpace>,
    y: &Bispace<crate::finite::FiniteSpace>,
    net: &Net,
    p: usize,
) -> Result<bool, MapError> {
    let hypotheses =
        preimage_condition_at(map, x, y, idx.i(), Openness::Preopen)? && satisfies_condition_c(map, idx, x, y)?;
    if !hypotheses || !net_converges(x.space(idx.i()), net, p) {
        return Ok(true);
    }
    let image = net.map(|v| map.apply(v));
    Ok(net_converges(y.space(idx.i()), &image, map.apply(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{validate_space, FiniteSpace};

    fn c(n: usize) -> FiniteCarrier {
        FiniteCarrier::new(n).unwrap()
    }

    fn set(points: &[usize]) -> Mask {
        points.iter().copied().collect()
    }

    fn sierpinski() -> FiniteSpace {
        validate_space(c(2), &[set(&[]), set(&[0]), set(&[0, 1])]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            CellMap::finite(c(2), c(2), vec![0]),
            Err(MapError::WrongLength { .. })
        ));
        assert_eq!(
            CellMap::finite(c(2), c(2), vec![0, 2]).unwrap_err(),
            MapError::OutsideTarget { cell: 1, image: 2 }
        );
    }

    #[test]
    fn image_and_preimage() {
        let f = CellMap::finite(c(3), c(2), vec![1, 1, 0]).unwrap();
        assert_eq!(f.image(set(&[0, 1])), set(&[1]));
        assert_eq!(f.preimage(set(&[1])), set(&[0, 1]));
        assert_eq!(f.preimage(set(&[0, 1])), set(&[0, 1, 2]));
        assert_eq!(f.image(Mask::EMPTY), Mask::EMPTY);
        assert!(f.is_surjective());
    }

    #[test]
    fn identity_is_everything() {
        let bi = Bispace::new(sierpinski(), FiniteSpace::indiscrete(c(2))).unwrap();
        let id = CellMap::identity(bi.ground());
        for kind in Openness::ALL {
            assert!(preimage_condition(&id, &bi, &bi, kind).unwrap());
        }
        assert!(is_pairwise_open_map(&id, &bi, &bi).unwrap());
        // {0} is σ1-open but its τ2-closure is X
        assert!(!satisfies_condition_c(&id, IndexPair::OneTwo, &bi, &bi).unwrap());
        let discrete = Bispace::doubled(FiniteSpace::discrete(c(2)));
        assert!(satisfies_condition_c(&id, IndexPair::OneTwo, &discrete, &discrete).unwrap());
        for kind in [Openness::Preopen, Openness::Semipreopen] {
            assert!(closed_preimage_characterization(&id, &bi, &bi, kind).unwrap());
            for idx in IndexPair::BOTH {
                assert!(continuity_consequences(&id, &bi, &bi, idx, kind).unwrap().all());
            }
        }
    }

    #[test]
    fn constant_map_into_indiscrete_is_continuous() {
        let x = Bispace::doubled(sierpinski());
        let y = Bispace::doubled(FiniteSpace::indiscrete(c(2)));
        let f = CellMap::finite(c(2), c(2), vec![0, 0]).unwrap();
        assert!(is_pairwise_continuous(&f, &x, &y).unwrap());
    }

    #[test]
    fn collapsing_onto_a_closed_point_is_not_open() {
        let x = Bispace::doubled(FiniteSpace::discrete(c(2)));
        let y = Bispace::doubled(sierpinski());
        let f = CellMap::finite(c(2), c(2), vec![1, 1]).unwrap();
        assert!(!is_pairwise_open_map(&f, &x, &y).unwrap());
        assert!(is_pairwise_continuous(&f, &x, &y).unwrap());
    }

    #[test]
    fn carrier_mismatch_is_an_error() {
        let x = Bispace::doubled(sierpinski());
        let f = CellMap::finite(c(3), c(2), vec![0, 0, 0]).unwrap();
        assert!(matches!(
            is_pairwise_continuous(&f, &x, &x),
            Err(MapError::CarrierMismatch { .. })
        ));
    }

    #[test]
    fn restriction_needs_biopen_domain() {
        let x = Bispace::new(sierpinski(), FiniteSpace::indiscrete(c(2))).unwrap();
        let id = CellMap::identity(x.ground());
        assert_eq!(
            restrict_map(&id, &x, set(&[0])).unwrap_err(),
            MapError::NotBiopen(set(&[0]))
        );
        let (r, sub) = restrict_map(&id, &x, x.ground()).unwrap();
        assert_eq!(r, id);
        assert_eq!(sub, x);
    }

    #[test]
    fn condition_c_fails_for_non_surjective_maps() {
        let x = Bispace::doubled(FiniteSpace::indiscrete(c(2)));
        let f = CellMap::finite(c(2), c(2), vec![0, 0]).unwrap();
        assert!(!satisfies_condition_c(&f, IndexPair::OneTwo, &x, &x).unwrap());
        let swap = CellMap::finite(c(2), c(2), vec![1, 0]).unwrap();
        assert!(satisfies_condition_c(&swap, IndexPair::OneTwo, &x, &x).unwrap());
    }

    #[test]
    fn atom_maps_reject_fat_images() {
        use crate::symbolic::{Atom, Cardinality::*};
        let src = AtomUniverse::new(vec![Atom::new("a", Uncountable, "")]).unwrap();
        let dst = AtomUniverse::new(vec![
            Atom::new("p", Singleton, ""),
            Atom::new("r", CountablyInfinite, ""),
        ])
        .unwrap();
        assert_eq!(
            CellMap::atoms(&src, &dst, &[("a", "r")]).unwrap_err(),
            MapError::NonSingletonImage("r".into())
        );
        assert_eq!(
            CellMap::atoms(&src, &dst, &[]).unwrap_err(),
            MapError::NotTotal("a".into())
        );
        let f = CellMap::atoms(&src, &dst, &[("a", "p")]).unwrap();
        assert_eq!(f.preimage(Mask::singleton(0)), Mask::singleton(0));
        assert_eq!(f.preimage(dst.all()), src.all());
    }
}
