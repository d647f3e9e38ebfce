//! The relative order complex of a coloring problem, the Hilbert function of
//! its Stanley-Reisner module, and the Ehrhart quasisymmetric function of the
//! union of order cones attached to its surviving faces.
//!
//! A face is a chain of family members. It survives (lies outside `Γ`) when
//! the chain, padded with `∅` below and `N` above, has every consecutive pair
//! in the ideal. Cone membership of lattice points is decided through level
//! sets, never numerically.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::invariants::ORACLE_LIMIT;
use crate::problem::ColoringProblem;
use crate::qsym::{binomial, Composition, QSymPoly};
use crate::subset::{GroundSet, Subset};

/// Largest degree accepted by [`hilbert_function`].
pub const MAX_HILBERT_DEGREE: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeFace {
    chain: Vec<Subset>,
}

impl RelativeFace {
    pub fn chain(&self) -> &[Subset] {
        &self.chain
    }

    pub fn dim(&self) -> usize {
        self.chain.len()
    }

    /// `∅ ⊂ chain ⊂ N`, with repeated endpoints collapsed.
    pub fn augmented(&self, full: Subset) -> Vec<Subset> {
        augment(&self.chain, full)
    }
}

fn augment(chain: &[Subset], full: Subset) -> Vec<Subset> {
    let mut out = Vec::with_capacity(chain.len() + 2);
    out.push(Subset::EMPTY);
    for &s in chain.iter().chain(std::iter::once(&full)) {
        if out.last() != Some(&s) {
            out.push(s);
        }
    }
    out
}

fn survives(c: &ColoringProblem, chain: &[Subset]) -> bool {
    augment(chain, c.full())
        .windows(2)
        .all(|w| c.ideal().contains(w[0], w[1]))
}

/// Every chain of the family, depth-first in family order.
fn all_chains(c: &ColoringProblem) -> impl Iterator<Item = Vec<Subset>> + '_ {
    let members = c.family().members();
    // Stack of (chain, next candidate index).
    let mut stack: Vec<(Vec<Subset>, usize)> = vec![(Vec::new(), 0)];
    std::iter::from_fn(move || {
        let (chain, start) = stack.pop()?;
        for j in (start..members.len()).rev() {
            let t = members[j];
            if chain.last().is_none_or(|&s| s.is_proper_subset_of(t)) {
                let mut next = chain.clone();
                next.push(t);
                stack.push((next, j + 1));
            }
        }
        Some(chain)
    })
}

/// Faces of the order complex that are not in `Γ`.
pub fn relative_faces(c: &ColoringProblem) -> impl Iterator<Item = RelativeFace> + '_ {
    all_chains(c)
        .filter(|chain| survives(c, chain))
        .map(|chain| RelativeFace { chain })
}

/// Number of degree-`n` monomials of the relative Stanley-Reisner module.
///
/// A surviving face with `j ≥ 1` vertices supports `C(n-1, j-1)` monomials of
/// degree `n`; in degree 0 only the empty face contributes.
pub fn hilbert_function(c: &ColoringProblem, n: u32) -> Result<BigUint> {
    if n > MAX_HILBERT_DEGREE {
        return Err(Error::Guard(format!(
            "Hilbert function degree {n} exceeds {MAX_HILBERT_DEGREE}"
        )));
    }
    let mut total = BigUint::zero();
    for face in relative_faces(c) {
        let j = face.dim() as u64;
        let contrib = match (n, j) {
            (0, 0) => 1u32.into(),
            (0, _) | (_, 0) => continue,
            _ => binomial(n as u64 - 1, j - 1),
        };
        total += contrib.to_biguint().expect("binomials are nonnegative");
    }
    Ok(total)
}

/// Distinct augmented chains of the surviving faces; one order cone each.
fn surviving_cones(c: &ColoringProblem) -> BTreeSet<Vec<Subset>> {
    relative_faces(c).map(|f| f.augmented(c.full())).collect()
}

/// `Σ M_type(F)` over the cones of the surviving faces.
pub fn ehrhart_qsym(c: &ColoringProblem) -> QSymPoly {
    let mut q = QSymPoly::zero();
    for cone in surviving_cones(c) {
        let parts = cone
            .windows(2)
            .map(|w| w[1].difference(w[0]).len() as u32)
            .collect();
        q.add_term(Composition::new(parts).expect("strict chain"), 1.into());
    }
    q
}

/// A point of the positive orthant, one positive coordinate per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint(Vec<u32>);

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.contains(&0) {
            return Err(Error::Parse("lattice point coordinates must be positive".into()));
        }
        Ok(LatticePoint(coords))
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

/// The distinct nonempty cumulative level sets `{v : pt(v) ≤ i}`, ending at `N`.
pub fn flag_of_point(pt: &LatticePoint, ground: &GroundSet) -> Vec<Subset> {
    debug_assert_eq!(pt.0.len(), ground.len());
    let mut levels: Vec<u32> = pt.0.clone();
    levels.sort_unstable();
    levels.dedup();
    levels
        .into_iter()
        .map(|i| Subset::from_indices(pt.0.iter().enumerate().filter(|(_, &c)| c <= i).map(|(v, _)| v)))
        .collect()
}

/// Lattice points in `[1, box]^N` lying in the union of surviving cones.
pub fn count_lattice_points(c: &ColoringProblem, bound: u32) -> Result<u64> {
    let n = c.len();
    match (bound as u64).checked_pow(n as u32) {
        Some(t) if t <= ORACLE_LIMIT => {}
        _ => {
            return Err(Error::Guard(format!(
                "{bound}^{n} lattice points exceed the limit of {ORACLE_LIMIT}"
            )))
        }
    }
    if bound == 0 {
        return Ok(u64::from(n == 0));
    }
    let cones: HashSet<Vec<Subset>> = surviving_cones(c).into_iter().collect();
    let mut coords = vec![1u32; n];
    let mut count = 0;
    loop {
        let flag = flag_of_point(&LatticePoint(coords.clone()), c.ground());
        if cones.contains(&augment(&flag, c.full())) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(count);
            }
            if coords[pos] < bound {
                coords[pos] += 1;
                break;
            }
            coords[pos] = 1;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{chromatic_qsym, count_colorings};
    use crate::problem::{full_interval_set, SubsetFamily};

    fn s(bits: u64) -> Subset {
        Subset::from_bits(bits)
    }

    fn k2() -> ColoringProblem {
        let fam = SubsetFamily::power_set(2);
        let ideal: Vec<_> = full_interval_set(&fam)
            .iter()
            .filter(|&p| p != (s(0), s(3)))
            .collect();
        ColoringProblem::new(GroundSet::alphabetic(2), fam.members().to_vec(), ideal).unwrap()
    }

    fn stable(n: usize) -> ColoringProblem {
        ColoringProblem::stable(GroundSet::alphabetic(n), SubsetFamily::power_set(n).members().to_vec())
            .unwrap()
    }

    #[test]
    fn faces_of_edge() {
        let faces: HashSet<Vec<Subset>> = relative_faces(&k2()).map(|f| f.chain().to_vec()).collect();
        assert!(faces.contains(&vec![s(1)]));
        assert!(!faces.contains(&vec![]));
        assert!(!faces.contains(&vec![s(3)]));
        assert!(faces.contains(&vec![s(0), s(1), s(3)]));
    }

    #[test]
    fn stable_problem_keeps_every_chain() {
        let c = stable(2);
        assert_eq!(relative_faces(&c).count(), all_chains(&c).count());
        // Chains of the Boolean lattice on 2 elements (including the empty chain).
        assert_eq!(all_chains(&c).count(), 1 + 4 + 5 + 2);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_function(&k2(), 0).unwrap(), 0u32.into());
        assert_eq!(hilbert_function(&k2(), 1).unwrap(), 2u32.into());
        assert_eq!(hilbert_function(&k2(), 2).unwrap(), 6u32.into());
        assert_eq!(hilbert_function(&stable(2), 0).unwrap(), 1u32.into());
        assert!(hilbert_function(&k2(), 13).is_err());
    }

    #[test]
    fn ehrhart_examples() {
        assert_eq!(ehrhart_qsym(&k2()).to_string(), "2*M[1,1]");
        assert_eq!(ehrhart_qsym(&stable(1)).to_string(), "M[1]");
        assert_eq!(ehrhart_qsym(&stable(3)), chromatic_qsym(&stable(3)));
        assert_eq!(ehrhart_qsym(&ColoringProblem::unit()), QSymPoly::one());
    }

    #[test]
    fn flags_of_points() {
        let g = GroundSet::alphabetic(3);
        let f = |v: &[u32]| flag_of_point(&LatticePoint::new(v.to_vec()).unwrap(), &g);
        assert_eq!(f(&[1, 2, 1]), vec![s(0b101), s(0b111)]);
        assert_eq!(f(&[4, 4, 4]), vec![s(0b111)]);
        assert_eq!(f(&[3, 1, 3]), vec![s(0b010), s(0b111)]);
        assert!(LatticePoint::new(vec![0]).is_err());
    }

    #[test]
    fn lattice_point_counts() {
        assert_eq!(count_lattice_points(&k2(), 3).unwrap(), 6);
        assert_eq!(count_lattice_points(&k2(), 1).unwrap(), 0);
        assert_eq!(count_lattice_points(&stable(2), 1).unwrap(), 1);
        assert_eq!(count_lattice_points(&stable(2), 2).unwrap(), 4);
        for b in 0..4 {
            assert_eq!(count_lattice_points(&k2(), b).unwrap(), count_colorings(&k2(), b).unwrap());
        }
    }
}
