//! Coloring problems and the Hopf monoid they form.
//!
//! A coloring problem on a finite set `N` is a family of subsets containing
//! `∅` and `N` together with a downward-closed set of intervals of that family.
//! Graphs, hypergraphs, posets, matroids and antimatroids all map into
//! coloring problems through [`species::phi`], and their chromatic
//! quasisymmetric functions factor through that map.
//!
//! - [`problem`]: the structure itself, with product, restriction and contraction.
//! - [`qsym`]: compositions, monomial quasisymmetric functions, rational polynomials.
//! - [`invariants`]: proper colorings, chromatic polynomial and quasisymmetric function.
//! - [`species`]: the example Hopf monoids, `φ` and `Ψ`.
//! - [`geometry`]: relative order complex, Hilbert function, Ehrhart function.
//! - [`harness`]: random generators and law/identity suites.
//! - [`io`]: the JSON file format.

pub mod error;
pub mod geometry;
pub mod harness;
pub mod invariants;
pub mod io;
pub mod problem;
pub mod qsym;
pub mod species;
pub mod subset;

pub use error::{Error, Result};
pub use problem::{ClosureCheck, ColoringProblem, IntervalIdeal, Maybe, SubsetFamily};
pub use qsym::{Composition, QSymPoly, UniPoly};
pub use species::{HopfMonoid, HopfStructure, SpeciesTag};
pub use subset::{GroundSet, Relabeling, Subset};
