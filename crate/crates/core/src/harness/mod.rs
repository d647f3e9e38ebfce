//! Random instances and the law/identity suites built on them.

pub mod gen;
pub mod suite;

pub use gen::{
    gen_antimatroid, gen_coloring_problem, gen_graph, gen_hypergraph, gen_matroid, gen_poset,
    gen_structure, GenConfig, MAX_SUITE_GROUND,
};
pub use suite::{run_axiom_suite, run_axiom_suite_with, run_theorem_suite, SuiteReport};
