use std::sync::OnceLock;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::problem::{ColoringProblem, IntervalIdeal, SubsetFamily};
use crate::species::{
    all_matroids, Antimatroid, Graph, HopfStructure, Hypergraph, Matroid, Poset, SpeciesTag,
};
use crate::subset::{GroundSet, Subset};

/// Largest ground set the generators and suites accept.
pub const MAX_SUITE_GROUND: usize = 5;

/// Knobs for the random generators. Every generator is a pure function of
/// its config.
#[derive(Clone, Debug, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    /// Exact ground set size of generated instances.
    pub ground_size: usize,
    /// Probability of each graph edge.
    pub edge_prob: f64,
    /// Probability of each hyperedge (subsets of size at least 2).
    pub hyperedge_prob: f64,
    /// Probability of each comparability in the random DAG behind a poset.
    pub relation_prob: f64,
    /// Probability that a subset other than `∅`, `N` joins a coloring problem's
    /// family, or seeds an antimatroid.
    pub family_density: f64,
    /// Probability that a nested pair of family members generates the ideal.
    pub ideal_density: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            ground_size: 4,
            edge_prob: 0.4,
            hyperedge_prob: 0.2,
            relation_prob: 0.35,
            family_density: 0.5,
            ideal_density: 0.3,
        }
    }
}

impl GenConfig {
    pub fn new(seed: u64, ground_size: usize) -> Self {
        GenConfig {
            seed,
            ground_size,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.ground_size > MAX_SUITE_GROUND {
            return Err(Error::Guard(format!(
                "generated ground sets are limited to {MAX_SUITE_GROUND} elements, got {}",
                self.ground_size
            )));
        }
        for (name, p) in [
            ("edge_prob", self.edge_prob),
            ("hyperedge_prob", self.hyperedge_prob),
            ("relation_prob", self.relation_prob),
            ("family_density", self.family_density),
            ("ideal_density", self.ideal_density),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Parse(format!("{name} must lie in [0, 1], got {p}")));
            }
        }
        Ok(())
    }

    /// A copy with a new seed and size.
    pub fn with(&self, seed: u64, ground_size: usize) -> Self {
        GenConfig {
            seed,
            ground_size,
            ..self.clone()
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn ground(&self) -> GroundSet {
        GroundSet::alphabetic(self.ground_size)
    }
}

pub fn gen_coloring_problem(cfg: &GenConfig) -> ColoringProblem {
    let mut rng = cfg.rng();
    let n = cfg.ground_size;
    let full = Subset::full(n);
    let family = SubsetFamily::new(full.subsets().filter(|&s| {
        s.is_empty() || s == full || rng.random_bool(cfg.family_density)
    }));
    let mut generators = Vec::new();
    for t in family.iter() {
        for s in family.iter().filter(|s| s.is_proper_subset_of(t)) {
            if rng.random_bool(cfg.ideal_density) {
                generators.push((s, t));
            }
        }
    }
    let ideal = IntervalIdeal::generated_by(&family, &generators);
    ColoringProblem::from_parts_unchecked(cfg.ground(), family, ideal)
}

pub fn gen_graph(cfg: &GenConfig) -> Graph {
    let mut rng = cfg.rng();
    let n = cfg.ground_size;
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.random_bool(cfg.edge_prob))
        .collect();
    Graph::new(cfg.ground(), edges).expect("generated graph is valid")
}

pub fn gen_hypergraph(cfg: &GenConfig) -> Hypergraph {
    let mut rng = cfg.rng();
    let edges: Vec<Subset> = Subset::full(cfg.ground_size)
        .subsets()
        .filter(|s| s.len() >= 2)
        .filter(|_| rng.random_bool(cfg.hyperedge_prob))
        .collect();
    Hypergraph::new(cfg.ground(), edges).expect("generated hypergraph is valid")
}

/// A random DAG on a shuffled vertex order, closed transitively.
pub fn gen_poset(cfg: &GenConfig) -> Poset {
    let mut rng = cfg.rng();
    let n = cfg.ground_size;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(cfg.relation_prob) {
                relations.push((order[i], order[j]));
            }
        }
    }
    Poset::from_relations(cfg.ground(), relations).expect("generated poset is acyclic")
}

fn catalog(n: usize) -> &'static [Matroid] {
    static CATALOG: [OnceLock<Vec<Matroid>>; MAX_SUITE_GROUND + 1] =
        [const { OnceLock::new() }; MAX_SUITE_GROUND + 1];
    CATALOG[n].get_or_init(|| all_matroids(n).expect("catalog size within guard"))
}

/// A uniformly random labelled matroid from the catalog of all matroids on
/// the ground set.
pub fn gen_matroid(cfg: &GenConfig) -> Matroid {
    let mut rng = cfg.rng();
    catalog(cfg.ground_size)
        .choose(&mut rng)
        .expect("every ground set carries a matroid")
        .clone()
}

/// Random feasible seeds, each padded with a random accessible chain below it,
/// closed under union.
pub fn gen_antimatroid(cfg: &GenConfig) -> Antimatroid {
    let mut rng = cfg.rng();
    let n = cfg.ground_size;
    let full = Subset::full(n);
    let mut seeds: Vec<Subset> = full
        .subsets()
        .filter(|s| !s.is_empty() && *s != full && rng.random_bool(cfg.family_density / 2.0))
        .collect();
    seeds.push(full);
    let mut sets = vec![Subset::EMPTY];
    for seed in seeds {
        let mut elems: Vec<usize> = seed.iter().collect();
        elems.shuffle(&mut rng);
        let mut acc = Subset::EMPTY;
        for e in elems {
            acc = acc.union(Subset::singleton(e));
            sets.push(acc);
        }
    }
    let mut family = SubsetFamily::new(sets);
    loop {
        let unions: Vec<Subset> = family
            .iter()
            .flat_map(|x| family.iter().map(move |y| x.union(y)))
            .collect();
        let next = SubsetFamily::new(family.iter().chain(unions));
        if next.len() == family.len() {
            break;
        }
        family = next;
    }
    Antimatroid::new(cfg.ground(), family.members().to_vec()).expect("generated antimatroid is valid")
}

pub fn gen_structure(tag: SpeciesTag, cfg: &GenConfig) -> HopfStructure {
    match tag {
        SpeciesTag::ColoringProblem => HopfStructure::ColoringProblem(gen_coloring_problem(cfg)),
        SpeciesTag::Graph => HopfStructure::Graph(gen_graph(cfg)),
        SpeciesTag::Hypergraph => HopfStructure::Hypergraph(gen_hypergraph(cfg)),
        SpeciesTag::Poset => HopfStructure::Poset(gen_poset(cfg)),
        SpeciesTag::Matroid => HopfStructure::Matroid(gen_matroid(cfg)),
        SpeciesTag::Antimatroid => HopfStructure::Antimatroid(gen_antimatroid(cfg)),
    }
}
