use std::collections::BTreeSet;

use super::{same_labelled_sets, HopfMonoid};
use crate::error::{Error, Result};
use crate::problem::Maybe;
use crate::subset::{GroundSet, Relabeling, Subset};

/// A simple graph. Products are disjoint unions; restriction and contraction
/// both take induced subgraphs and are never zero. Edgeless graphs are stable.
#[derive(Clone, Debug)]
pub struct Graph {
    ground: GroundSet,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(ground: GroundSet, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = ground.len();
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::structure("graph", format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::structure("graph", format!("edge ({u},{v}) out of range")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { ground, edges: set })
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    fn edge_sets(&self) -> impl Iterator<Item = Subset> + '_ {
        self.edges.iter().map(|&(u, v)| Subset::from_indices([u, v]))
    }

    fn induced(&self, s: Subset) -> Graph {
        let edges = self
            .edge_sets()
            .filter(|e| e.is_subset_of(s))
            .map(|e| {
                let c: Vec<usize> = e.compress(s).iter().collect();
                (c[0], c[1])
            })
            .collect();
        Graph {
            ground: self.ground.restrict(s),
            edges,
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        same_labelled_sets(&self.ground, self.edge_sets(), &other.ground, other.edge_sets())
    }
}

impl HopfMonoid for Graph {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn empty_like(&self) -> Self {
        Graph {
            ground: GroundSet::empty(),
            edges: BTreeSet::new(),
        }
    }

    fn product(&self, other: &Self) -> Result<Self> {
        let ground = self.ground.concat(&other.ground)?;
        let k = self.ground.len();
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + k, v + k)));
        Ok(Graph { ground, edges })
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
        Ok(Graph {
            ground: self.ground.relabel(sigma)?,
            edges: self.edges.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_restricted_to_endpoints_is_edgeless() {
        let p = Graph::new(GroundSet::alphabetic(3), [(0, 1), (1, 2)]).unwrap();
        let r = p.restrict(Subset::from_bits(0b101)).unwrap();
        assert_eq!(r.ground().labels(), ["a", "c"]);
        assert!(r.is_stable());
        let q = p.contract(Subset::from_bits(0b001)).unwrap();
        assert_eq!(q.edges().collect::<Vec<_>>(), [(0, 1)]);
    }

    #[test]
    fn disjoint_union() {
        let k2 = Graph::new(GroundSet::alphabetic(2), [(0, 1)]).unwrap();
        let other = Graph::new(GroundSet::new(["c", "d"]).unwrap(), [(0, 1)]).unwrap();
        let p = k2.product(&other).unwrap();
        assert_eq!(p.ground().len(), 4);
        assert_eq!(p.edges().collect::<Vec<_>>(), [(0, 1), (2, 3)]);
        assert!(Graph::new(GroundSet::alphabetic(3), []).unwrap().is_stable());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(GroundSet::alphabetic(2), [(0, 0)]).is_err());
        assert!(Graph::new(GroundSet::alphabetic(2), [(0, 2)]).is_err());
    }
}
