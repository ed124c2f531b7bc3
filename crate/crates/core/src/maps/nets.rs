//! Nets indexed by finite directed sets.

use thiserror::Error;

use crate::finite::FiniteSpace;
use crate::mask::Mask;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetError {
    #[error("a directed set needs at least one element")]
    Empty,
    #[error("directed sets of more than 64 elements are not supported")]
    TooLarge,
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} ≤ {1} ≤ {2} but not {0} ≤ {2}")]
    NotTransitive(usize, usize, usize),
    #[error("elements {0} and {1} have no common upper bound")]
    NotDirected(usize, usize),
    #[error("net has {values} values for a directed set of {size} elements")]
    Length { values: usize, size: usize },
    #[error("relation mentions element {0} outside the directed set")]
    OutOfRange(usize),
}

/// A finite preorder in which every pair has an upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteDirectedSet {
    // above[a] = { b : a ≤ b }
    above: Vec<Mask>,
}

impl FiniteDirectedSet {
    /// Builds from the set of elements above each element.
    pub fn from_above(above: Vec<Mask>) -> Result<Self, NetError> {
        let m = above.len();
        if m == 0 {
            return Err(NetError::Empty);
        }
        if m > 64 {
            return Err(NetError::TooLarge);
        }
        let all = Mask::prefix(m);
        for (a, up) in above.iter().enumerate() {
            if let Some(b) = (*up - all).first() {
                return Err(NetError::OutOfRange(b));
            }
            if !up.contains(a) {
                return Err(NetError::NotReflexive(a));
            }
        }
        for a in 0..m {
            for b in above[a].iter() {
                if let Some(c) = (above[b] - above[a]).first() {
                    return Err(NetError::NotTransitive(a, b, c));
                }
            }
        }
        for a in 0..m {
            for b in a + 1..m {
                if !above[a].meets(above[b]) {
                    return Err(NetError::NotDirected(a, b));
                }
            }
        }
        Ok(FiniteDirectedSet { above })
    }

    /// Builds the reflexive relation generated by `pairs` (`(a, b)` meaning
    /// `a ≤ b`); transitivity is checked, not closed over.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self, NetError> {
        if size > 64 {
            return Err(NetError::TooLarge);
        }
        let mut above: Vec<Mask> = (0..size).map(Mask::singleton).collect();
        for &(a, b) in pairs {
            if a >= size || b >= size {
                return Err(NetError::OutOfRange(a.max(b)));
            }
            above[a].insert(b);
        }
        Self::from_above(above)
    }

    /// `0 ≤ 1 ≤ … ≤ m-1`.
    pub fn chain(m: usize) -> Result<Self, NetError> {
        Self::from_above((0..m).map(|a| Mask::prefix(m) - Mask::prefix(a)).collect())
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    pub fn above(&self, a: usize) -> Mask {
        self.above[a]
    }

    /// Every directed preorder on `1..=max_size` labelled elements.
    pub fn enumerate(max_size: usize) -> Vec<FiniteDirectedSet> {
        let mut out = Vec::new();
        for m in 1..=max_size.min(6) {
            let pairs: Vec<(usize, usize)> = (0..m)
                .flat_map(|a| (0..m).filter(move |&b| b != a).map(move |b| (a, b)))
                .collect();
            for pattern in 0u64..(1u64 << pairs.len()) {
                let chosen: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| pattern >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                if let Ok(d) = Self::from_pairs(m, &chosen) {
                    out.push(d);
                }
            }
        }
        out
    }
}

/// A map from a finite directed set into a carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Net {
    directed: FiniteDirectedSet,
    values: Vec<usize>,
}

impl Net {
    pub fn new(directed: FiniteDirectedSet, values: Vec<usize>) -> Result<Self, NetError> {
        if values.len() != directed.len() {
            return Err(NetError::Length {
                values: values.len(),
                size: directed.len(),
            });
        }
        Ok(Net { directed, values })
    }

    pub fn directed(&self) -> &FiniteDirectedSet {
        &self.directed
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The net `α ↦ f(x_α)`.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Net {
        Net {
            directed: self.directed.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Whether the net is eventually inside `u`.
    pub fn eventually_in(&self, u: Mask) -> bool {
        (0..self.directed.len()).any(|start| self.directed.above(start).iter().all(|a| u.contains(self.values[a])))
    }
}

/// Whether `net` is eventually in every open set containing `x`.
pub fn net_converges(space: &FiniteSpace, net: &Net, x: usize) -> bool {
    space
        .opens()
        .iter()
        .filter(|u| u.contains(x))
        .all(|&u| net.eventually_in(u))
}
