use std::collections::BTreeSet;

use super::{same_labelled_sets, HopfMonoid};
use crate::error::{Error, Result};
use crate::problem::Maybe;
use crate::subset::{GroundSet, Relabeling, Subset};

/// A hypergraph; the induced subhypergraph keeps the edges lying entirely
/// inside the retained vertices. Edgeless hypergraphs are stable.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    ground: GroundSet,
    edges: BTreeSet<Subset>,
}

impl Hypergraph {
    /// Edges must have at least two vertices.
    pub fn new(ground: GroundSet, edges: impl IntoIterator<Item = Subset>) -> Result<Self> {
        Self::with_singletons(ground, edges, false)
    }

    /// Like [`Hypergraph::new`], optionally accepting one-vertex edges (which
    /// make their vertex impossible to color).
    pub fn with_singletons(
        ground: GroundSet,
        edges: impl IntoIterator<Item = Subset>,
        allow_singletons: bool,
    ) -> Result<Self> {
        let n = ground.len();
        let mut set = BTreeSet::new();
        for e in edges {
            if !e.fits(n) {
                return Err(Error::structure("hypergraph", format!("edge {e:?} out of range")));
            }
            let min = if allow_singletons { 1 } else { 2 };
            if e.len() < min {
                return Err(Error::structure(
                    "hypergraph",
                    format!("edge {e:?} has fewer than {min} vertices"),
                ));
            }
            set.insert(e);
        }
        Ok(Hypergraph { ground, edges: set })
    }

    pub fn edges(&self) -> impl Iterator<Item = Subset> + '_ {
        self.edges.iter().copied()
    }

    fn induced(&self, s: Subset) -> Hypergraph {
        Hypergraph {
            ground: self.ground.restrict(s),
            edges: self
                .edges
                .iter()
                .filter(|e| e.is_subset_of(s))
                .map(|e| e.compress(s))
                .collect(),
        }
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        same_labelled_sets(&self.ground, self.edges(), &other.ground, other.edges())
    }
}

impl HopfMonoid for Hypergraph {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn empty_like(&self) -> Self {
        Hypergraph {
            ground: GroundSet::empty(),
            edges: BTreeSet::new(),
        }
    }

    fn product(&self, other: &Self) -> Result<Self> {
        let ground = self.ground.concat(&other.ground)?;
        let k = self.ground.len();
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e.shift_up(k)));
        Ok(Hypergraph { ground, edges })
    }

    fn restrict(&self, s: Subset) -> Maybe<Self> {
        Some(self.induced(s))
    }

    fn contract(&self, s: Subset) -> Maybe<Self> {
        Some(self.induced(self.ground.full().difference(s)))
    }

    fn is_stable(&self) -> bool {
        self.edges.is_empty()
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        Ok(Hypergraph {
            ground: self.ground.relabel(sigma)?,
            edges: self.edges.clone(),
        })
    }
}
