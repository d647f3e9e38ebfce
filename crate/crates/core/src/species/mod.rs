//! Combinatorial Hopf monoids in pointed set species, the terminal morphism
//! `φ` into coloring problems, and the invariant `Ψ` computed directly from
//! restrictions and contractions.

pub(crate) mod antimatroid;
mod graph;
mod hypergraph;
mod matroid;
mod poset;

use std::collections::BTreeMap;
use std::fmt;

pub use antimatroid::Antimatroid;
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use matroid::{all_matroids, Matroid};
pub use poset::{poset_to_antimatroid, Poset};

use crate::error::{Error, Result};
use crate::problem::{ColoringProblem, IntervalIdeal, Maybe, SubsetFamily};
use crate::qsym::{Composition, QSymPoly};
use crate::subset::{GroundSet, Relabeling, Subset};

/// The operations of a combinatorial Hopf monoid on labelled structures.
///
/// Subsets passed to `restrict` and `contract` are in the coordinates of
/// `self.ground()`. Results are relabelled onto the retained elements in
/// their original order.
pub trait HopfMonoid: Clone + fmt::Debug + PartialEq + Send + Sync {
    fn ground(&self) -> &GroundSet;

    /// The structure on the empty set of the same kind.
    fn empty_like(&self) -> Self;

    fn product(&self, other: &Self) -> Result<Self>;

    fn restrict(&self, s: Subset) -> Maybe<Self>;

    fn contract(&self, s: Subset) -> Maybe<Self>;

    fn is_stable(&self) -> bool;

    fn relabel(&self, sigma: &Relabeling) -> Result<Self>;

    /// `(x|_T)/S` for `S ⊆ T`.
    fn minor(&self, lower: Subset, upper: Subset) -> Maybe<Self> {
        debug_assert!(lower.is_subset_of(upper));
        self.restrict(upper)?.contract(lower.compress(upper))
    }
}

impl HopfMonoid for ColoringProblem {
    fn ground(&self) -> &GroundSet {
        ColoringProblem::ground(self)
    }

    fn empty_like(&self) -> Self {
        ColoringProblem::unit()
    }

    fn product(&self, other: &Self) -> Result<Self> {
        ColoringProblem::product(self, other)
    }

    fn restrict(&self, s: Subset) -> Maybe<Self> {
        ColoringProblem::restrict(self, s)
    }

    fn contract(&self, s: Subset) -> Maybe<Self> {
        ColoringProblem::contract(self, s)
    }

    fn is_stable(&self) -> bool {
        ColoringProblem::is_stable(self)
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        ColoringProblem::relabel(self, sigma)
    }
}

/// The terminal morphism: family = subsets with nonzero restriction,
/// ideal = nested pairs whose minor is stable.
pub fn phi<H: HopfMonoid>(x: &H) -> ColoringProblem {
    let ground = x.ground().clone();
    let family = SubsetFamily::new(
        ground
            .full()
            .subsets()
            .filter(|&s| x.restrict(s).is_some()),
    );
    let mut pairs = Vec::new();
    for t in family.iter() {
        let Some(xt) = x.restrict(t) else { continue };
        for s in family.iter().filter(|s| s.is_subset_of(t)) {
            if xt.contract(s.compress(t)).is_some_and(|m| m.is_stable()) {
                pairs.push((s, t));
            }
        }
    }
    ColoringProblem::from_parts_unchecked(ground, family, IntervalIdeal::new(pairs))
}

/// `Σ_α c_α M_α` with `c_α` the number of chains `∅ = S₀ ⊂ … ⊂ S_k = N` whose
/// restrictions are nonzero and whose minors `(x|_{S_i})/S_{i-1}` are stable.
pub fn psi<H: HopfMonoid>(x: &H) -> QSymPoly {
    let full = x.ground().full();
    // For each reachable subset, the flag counts from ∅ keyed by type.
    let mut reach: BTreeMap<Subset, BTreeMap<Vec<u32>, u64>> = BTreeMap::new();
    if x.restrict(Subset::EMPTY).is_some() {
        reach.insert(Subset::EMPTY, BTreeMap::from([(Vec::new(), 1)]));
    }
    // Masks in increasing numeric order visit every subset after its subsets.
    for t in full.subsets() {
        if t.is_empty() {
            continue;
        }
        let Some(xt) = x.restrict(t) else { continue };
        let mut here: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for (&s, counts) in reach.iter().filter(|(s, _)| s.is_proper_subset_of(t)) {
            if !xt.contract(s.compress(t)).is_some_and(|m| m.is_stable()) {
                continue;
            }
            let step = t.difference(s).len() as u32;
            for (alpha, n) in counts {
                let mut a = alpha.clone();
                a.push(step);
                *here.entry(a).or_default() += n;
            }
        }
        if !here.is_empty() {
            reach.insert(t, here);
        }
    }
    let mut q = QSymPoly::zero();
    for (alpha, n) in reach.remove(&full).unwrap_or_default() {
        q.add_term(Composition::new(alpha).expect("positive steps"), n.into());
    }
    q
}

/// Which species a structure belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpeciesTag {
    ColoringProblem,
    Graph,
    Hypergraph,
    Poset,
    Matroid,
    Antimatroid,
}

impl SpeciesTag {
    pub const ALL: [SpeciesTag; 6] = [
        SpeciesTag::ColoringProblem,
        SpeciesTag::Graph,
        SpeciesTag::Hypergraph,
        SpeciesTag::Poset,
        SpeciesTag::Matroid,
        SpeciesTag::Antimatroid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpeciesTag::ColoringProblem => "coloring-problem",
            SpeciesTag::Graph => "graph",
            SpeciesTag::Hypergraph => "hypergraph",
            SpeciesTag::Poset => "poset",
            SpeciesTag::Matroid => "matroid",
            SpeciesTag::Antimatroid => "antimatroid",
        }
    }
}

impl fmt::Display for SpeciesTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SpeciesTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "coloring-problem" | "C" => SpeciesTag::ColoringProblem,
            "graph" | "G" => SpeciesTag::Graph,
            "hypergraph" | "HG" => SpeciesTag::Hypergraph,
            "poset" | "P" => SpeciesTag::Poset,
            "matroid" | "M" => SpeciesTag::Matroid,
            "antimatroid" | "A" => SpeciesTag::Antimatroid,
            other => return Err(Error::Parse(format!("unknown species {other:?}"))),
        })
    }
}

/// Any of the supported structures, with a uniform operation surface.
#[derive(Clone, Debug, PartialEq)]
pub enum HopfStructure {
    ColoringProblem(ColoringProblem),
    Graph(Graph),
    Hypergraph(Hypergraph),
    Poset(Poset),
    Matroid(Matroid),
    Antimatroid(Antimatroid),
}

macro_rules! dispatch {
    ($self:expr, $x:ident => $body:expr) => {
        match $self {
            HopfStructure::ColoringProblem($x) => $body,
            HopfStructure::Graph($x) => $body,
            HopfStructure::Hypergraph($x) => $body,
            HopfStructure::Poset($x) => $body,
            HopfStructure::Matroid($x) => $body,
            HopfStructure::Antimatroid($x) => $body,
        }
    };
}

macro_rules! dispatch_wrap {
    ($self:expr, $x:ident => $body:expr) => {
        match $self {
            HopfStructure::ColoringProblem($x) => $body.map(HopfStructure::ColoringProblem),
            HopfStructure::Graph($x) => $body.map(HopfStructure::Graph),
            HopfStructure::Hypergraph($x) => $body.map(HopfStructure::Hypergraph),
            HopfStructure::Poset($x) => $body.map(HopfStructure::Poset),
            HopfStructure::Matroid($x) => $body.map(HopfStructure::Matroid),
            HopfStructure::Antimatroid($x) => $body.map(HopfStructure::Antimatroid),
        }
    };
}

impl HopfStructure {
    pub fn tag(&self) -> SpeciesTag {
        match self {
            HopfStructure::ColoringProblem(_) => SpeciesTag::ColoringProblem,
            HopfStructure::Graph(_) => SpeciesTag::Graph,
            HopfStructure::Hypergraph(_) => SpeciesTag::Hypergraph,
            HopfStructure::Poset(_) => SpeciesTag::Poset,
            HopfStructure::Matroid(_) => SpeciesTag::Matroid,
            HopfStructure::Antimatroid(_) => SpeciesTag::Antimatroid,
        }
    }

    pub fn phi(&self) -> ColoringProblem {
        dispatch!(self, x => phi(x))
    }

    pub fn psi(&self) -> QSymPoly {
        dispatch!(self, x => psi(x))
    }
}

impl HopfMonoid for HopfStructure {
    fn ground(&self) -> &GroundSet {
        dispatch!(self, x => x.ground())
    }

    fn empty_like(&self) -> Self {
        dispatch_wrap!(self, x => Some(x.empty_like())).unwrap()
    }

    fn product(&self, other: &Self) -> Result<Self> {
        use HopfStructure as H;
        match (self, other) {
            (H::ColoringProblem(a), H::ColoringProblem(b)) => a.product(b).map(H::ColoringProblem),
            (H::Graph(a), H::Graph(b)) => a.product(b).map(H::Graph),
            (H::Hypergraph(a), H::Hypergraph(b)) => a.product(b).map(H::Hypergraph),
            (H::Poset(a), H::Poset(b)) => a.product(b).map(H::Poset),
            (H::Matroid(a), H::Matroid(b)) => a.product(b).map(H::Matroid),
            (H::Antimatroid(a), H::Antimatroid(b)) => a.product(b).map(H::Antimatroid),
            (a, b) => Err(Error::MixedVariants(a.tag().name(), b.tag().name())),
        }
    }

    fn restrict(&self, s: Subset) -> Maybe<Self> {
        dispatch_wrap!(self, x => HopfMonoid::restrict(x, s))
    }

    fn contract(&self, s: Subset) -> Maybe<Self> {
        dispatch_wrap!(self, x => HopfMonoid::contract(x, s))
    }

    fn is_stable(&self) -> bool {
        dispatch!(self, x => HopfMonoid::is_stable(x))
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        dispatch_wrap!(self, x => HopfMonoid::relabel(x, sigma))
    }
}

pub fn species_product(x: &HopfStructure, y: &HopfStructure) -> Result<HopfStructure> {
    x.product(y)
}

pub fn species_restrict(x: &HopfStructure, s: Subset) -> Maybe<HopfStructure> {
    x.restrict(s)
}

pub fn species_contract(x: &HopfStructure, s: Subset) -> Maybe<HopfStructure> {
    x.contract(s)
}

pub fn species_is_stable(x: &HopfStructure) -> bool {
    x.is_stable()
}

/// Label-order independent comparison key helper: remaps subsets into the
/// positions of the sorted labels and sorts them.
pub(crate) fn canonical_subsets(ground: &GroundSet, sets: impl IntoIterator<Item = Subset>) -> Vec<Subset> {
    let map = ground.sorting_map();
    let mut v: Vec<Subset> = sets.into_iter().map(|s| s.permute(&map)).collect();
    v.sort_unstable();
    v
}

/// Shared equality: same label set and the same canonicalised subsets.
pub(crate) fn same_labelled_sets(
    g1: &GroundSet,
    a: impl IntoIterator<Item = Subset>,
    g2: &GroundSet,
    b: impl IntoIterator<Item = Subset>,
) -> bool {
    if g1 == g2 {
        let mut a: Vec<Subset> = a.into_iter().collect();
        let mut b: Vec<Subset> = b.into_iter().collect();
        a.sort_unstable();
        b.sort_unstable();
        return a == b;
    }
    g1.sorted_labels() == g2.sorted_labels() && canonical_subsets(g1, a) == canonical_subsets(g2, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(bits: u64) -> Subset {
        Subset::from_bits(bits)
    }

    fn k2() -> Graph {
        Graph::new(GroundSet::alphabetic(2), [(0, 1)]).unwrap()
    }

    fn u12() -> Matroid {
        Matroid::new(GroundSet::alphabetic(2), [s(1), s(2)]).unwrap()
    }

    fn chain_ab() -> Poset {
        Poset::from_relations(GroundSet::alphabetic(2), [(0, 1)]).unwrap()
    }

    #[test]
    fn phi_of_edge() {
        let c = phi(&k2());
        assert_eq!(c.family(), &SubsetFamily::power_set(2));
        assert_eq!(c.ideal().len(), 8);
        assert!(!c.ideal().contains(s(0), s(3)));
    }

    #[test]
    fn edge_and_uniform_matroid_share_coloring_problem() {
        assert_eq!(phi(&u12()), phi(&k2()));
    }

    #[test]
    fn phi_of_chain() {
        let c = phi(&chain_ab());
        assert_eq!(c.family().members(), [s(0), s(1), s(3)]);
        assert_eq!(c.ideal().len(), 5);
        assert!(!c.ideal().contains(s(0), s(3)));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&k2()).to_string(), "2*M[1,1]");
        let antichain = Poset::from_relations(GroundSet::alphabetic(2), []).unwrap();
        assert_eq!(psi(&antichain).to_string(), "2*M[1,1] + M[2]");
        let lp = Matroid::new(GroundSet::alphabetic(1), [s(0)]).unwrap();
        assert_eq!(psi(&lp).to_string(), "M[1]");
        assert_eq!(psi(&chain_ab()).to_string(), "M[1,1]");
    }

    #[test]
    fn structure_dispatch() {
        let g = HopfStructure::Graph(k2());
        let m = HopfStructure::Matroid(u12());
        assert!(matches!(species_product(&g, &m), Err(Error::MixedVariants(_, _))));
        assert_eq!(g.phi(), m.phi());
        assert!(!species_is_stable(&m));
        assert!(species_restrict(&g, s(1)).unwrap().is_stable());
        assert_eq!(g.tag().to_string(), "graph");
        for tag in SpeciesTag::ALL {
            assert_eq!(tag.name().parse::<SpeciesTag>().unwrap(), tag);
        }
    }

    #[test]
    fn phi_is_identity_on_coloring_problems() {
        let c = phi(&k2());
        assert_eq!(phi(&c), c);
    }
}
