//! Proper colorings and the chromatic invariants of a coloring problem.
//!
//! The chromatic polynomial is computed by counting walks `∅ → N` in the
//! digraph on the family whose arcs are the ideal's pairs, and checked against
//! brute-force enumeration of colorings. The chromatic quasisymmetric function
//! counts stable flags by type.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::problem::ColoringProblem;
use crate::qsym::{lagrange_interpolate, Composition, QSymPoly, UniPoly};
use crate::subset::{GroundSet, Subset};

/// Upper bound on `k^|N|` for [`count_colorings`].
pub const ORACLE_LIMIT: u64 = 100_000_000;

/// Largest family the transfer matrix accepts.
pub const MAX_FAMILY: usize = 4096;

/// A map from elements (by position) to colors `1, 2, …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::Parse("colors start at 1".into()));
        }
        Ok(Coloring(colors))
    }

    pub fn from_labels<S: AsRef<str>>(ground: &GroundSet, assignment: &[(S, u32)]) -> Result<Self> {
        let mut colors = vec![0; ground.len()];
        for (label, c) in assignment {
            let i = ground
                .index_of(label.as_ref())
                .ok_or_else(|| Error::UnknownLabel(label.as_ref().to_string()))?;
            colors[i] = *c;
        }
        if colors.contains(&0) {
            return Err(Error::Parse("coloring must assign a color >= 1 to every element".into()));
        }
        Ok(Coloring(colors))
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn max_color(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `f⁻¹({1..i})`.
    pub fn level_set(&self, i: u32) -> Subset {
        Subset::from_indices(self.0.iter().enumerate().filter(|(_, &c)| c <= i).map(|(v, _)| v))
    }
}

/// A strict chain `∅ = S₀ ⊂ … ⊂ S_k = N` whose steps all lie in the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StableFlag {
    chain: Vec<Subset>,
}

impl StableFlag {
    pub fn chain(&self) -> &[Subset] {
        &self.chain
    }

    /// Step sizes `|S_i ∖ S_{i-1}|`.
    pub fn composition(&self) -> Composition {
        let parts = self
            .chain
            .windows(2)
            .map(|w| w[1].difference(w[0]).len() as u32)
            .collect();
        Composition::new(parts).expect("strict chain has positive steps")
    }
}

pub fn is_proper_coloring(c: &ColoringProblem, f: &Coloring) -> bool {
    debug_assert_eq!(f.colors().len(), c.len());
    let mut prev = Subset::EMPTY;
    for i in 1..=f.max_color() {
        let cur = f.level_set(i);
        if !c.ideal().contains(prev, cur) {
            return false;
        }
        prev = cur;
    }
    true
}

/// Brute-force count of proper colorings with colors `1..=k`.
pub fn count_colorings(c: &ColoringProblem, k: u32) -> Result<u64> {
    let n = c.len();
    let total = (k as u64).checked_pow(n as u32).filter(|&t| t <= ORACLE_LIMIT);
    let Some(total) = total else {
        return Err(Error::Guard(format!(
            "{k}^{n} colorings exceed the oracle limit of {ORACLE_LIMIT}"
        )));
    };
    if total == 0 {
        return Ok(0);
    }
    let mut colors = vec![1u32; n];
    let mut count = 0;
    loop {
        let mut prev = Subset::EMPTY;
        let mut ok = true;
        for i in 1..=k {
            let cur = Subset::from_indices((0..n).filter(|&v| colors[v] <= i));
            if !c.ideal().contains(prev, cur) {
                ok = false;
                break;
            }
            prev = cur;
        }
        if ok {
            count += 1;
        }
        // Odometer step.
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(count);
            }
            if colors[pos] < k {
                colors[pos] += 1;
                break;
            }
            colors[pos] = 1;
            pos += 1;
        }
    }
}

/// Successor lists of the ideal's digraph on the family, by family index.
/// Reflexive arcs are included iff `with_loops`.
fn arcs(c: &ColoringProblem, with_loops: bool) -> Vec<Vec<usize>> {
    let fam = c.family().members();
    fam.iter()
        .map(|&s| {
            fam.iter()
                .enumerate()
                .filter(|(_, &t)| {
                    (with_loops || s != t) && s.is_subset_of(t) && c.ideal().contains(s, t)
                })
                .map(|(j, _)| j)
                .collect()
        })
        .collect()
}

/// Number of proper colorings with `k` colors, via `k`-step walks `∅ → N`.
pub fn count_by_transfer_matrix(c: &ColoringProblem, k: u32) -> Result<BigUint> {
    Ok(walk_counts(c, k)?.pop().unwrap())
}

/// Walk counts for `0..=k` steps.
fn walk_counts(c: &ColoringProblem, k: u32) -> Result<Vec<BigUint>> {
    if c.family().len() > MAX_FAMILY {
        return Err(Error::Guard(format!(
            "family has {} members, transfer matrix is limited to {MAX_FAMILY}",
            c.family().len()
        )));
    }
    let succ = arcs(c, true);
    let start = c.family().index_of(Subset::EMPTY).unwrap();
    let end = c.family().index_of(c.full()).unwrap();
    let mut v = vec![BigUint::zero(); succ.len()];
    v[start] = BigUint::one();
    let mut out = vec![v[end].clone()];
    for _ in 0..k {
        let mut next = vec![BigUint::zero(); succ.len()];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &j in &succ[i] {
                next[j] += x;
            }
        }
        v = next;
        out.push(v[end].clone());
    }
    Ok(out)
}

/// The chromatic polynomial, interpolated from walk counts at `k = 0..=|N|`.
pub fn chromatic_polynomial(c: &ColoringProblem) -> Result<UniPoly> {
    let counts = walk_counts(c, c.len() as u32)?;
    let points: Vec<(BigInt, BigInt)> = counts
        .into_iter()
        .enumerate()
        .map(|(k, y)| (BigInt::from(k), BigInt::from(y)))
        .collect();
    lagrange_interpolate(&points)
}

/// Depth-first enumeration of stable flags, children in family order.
pub struct StableFlags {
    succ: Vec<Vec<usize>>,
    members: Vec<Subset>,
    end: usize,
    // Chain of family indices, with the next child position to try at each level.
    stack: Vec<(usize, usize)>,
}

impl Iterator for StableFlags {
    type Item = StableFlag;

    fn next(&mut self) -> Option<StableFlag> {
        loop {
            let &(node, pos) = self.stack.last()?;
            if node == self.end {
                let chain = self.stack.iter().map(|&(i, _)| self.members[i]).collect();
                self.stack.pop();
                return Some(StableFlag { chain });
            }
            match self.succ[node].get(pos) {
                Some(&child) => {
                    self.stack.last_mut().unwrap().1 += 1;
                    self.stack.push((child, 0));
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}

pub fn enumerate_stable_flags(c: &ColoringProblem) -> StableFlags {
    let start = c.family().index_of(Subset::EMPTY).unwrap();
    StableFlags {
        succ: arcs(c, false),
        members: c.family().members().to_vec(),
        end: c.family().index_of(c.full()).unwrap(),
        stack: vec![(start, 0)],
    }
}

/// `Σ_α (#stable flags of type α) M_α`.
pub fn chromatic_qsym(c: &ColoringProblem) -> QSymPoly {
    let mut counts: HashMap<Composition, u64> = HashMap::new();
    for flag in enumerate_stable_flags(c) {
        *counts.entry(flag.composition()).or_default() += 1;
    }
    let mut q = QSymPoly::zero();
    for (alpha, n) in counts {
        q.add_term(alpha, n.into());
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
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

    fn chain_ab() -> ColoringProblem {
        ColoringProblem::from_generators(
            GroundSet::alphabetic(2),
            [s(0), s(1), s(3)],
            &[(s(0), s(1)), (s(1), s(3))],
        )
        .unwrap()
    }

    fn stable(n: usize) -> ColoringProblem {
        ColoringProblem::stable(GroundSet::alphabetic(n), SubsetFamily::power_set(n).members().to_vec())
            .unwrap()
    }

    #[test]
    fn proper_coloring_examples() {
        let c = k2();
        let g = c.ground().clone();
        assert!(is_proper_coloring(&c, &Coloring::from_labels(&g, &[("a", 1), ("b", 2)]).unwrap()));
        assert!(!is_proper_coloring(&c, &Coloring::from_labels(&g, &[("a", 1), ("b", 1)]).unwrap()));
        // Gaps in the colors used are fine thanks to reflexive pairs.
        assert!(is_proper_coloring(&c, &Coloring::new(vec![3, 1]).unwrap()));
        let st = stable(3);
        for f in [[1, 1, 1], [2, 5, 1], [4, 4, 2]] {
            assert!(is_proper_coloring(&st, &Coloring::new(f.to_vec()).unwrap()));
        }
        assert!(Coloring::new(vec![0, 1]).is_err());
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(count_colorings(&k2(), 3).unwrap(), 6);
        assert_eq!(count_colorings(&k2(), 0).unwrap(), 0);
        // Antichain on three elements: all intervals present.
        assert_eq!(count_colorings(&stable(3), 2).unwrap(), 8);
        assert_eq!(count_colorings(&ColoringProblem::unit(), 0).unwrap(), 1);
        assert!(matches!(count_colorings(&stable(10), 10), Err(Error::Guard(_))));
    }

    #[test]
    fn chromatic_polynomial_examples() {
        assert_eq!(chromatic_polynomial(&k2()).unwrap().to_string(), "x^2 - x");
        assert_eq!(chromatic_polynomial(&stable(3)).unwrap(), UniPoly::from_integers(&[0, 0, 0, 1]));
        assert_eq!(chromatic_polynomial(&chain_ab()).unwrap().to_string(), "1/2*x^2 - 1/2*x");
        assert_eq!(chromatic_polynomial(&ColoringProblem::unit()).unwrap().to_string(), "1");
    }

    #[test]
    fn chromatic_qsym_examples() {
        assert_eq!(chromatic_qsym(&k2()).to_string(), "2*M[1,1]");
        assert_eq!(chromatic_qsym(&stable(2)).to_string(), "2*M[1,1] + M[2]");
        assert_eq!(chromatic_qsym(&ColoringProblem::unit()), QSymPoly::one());
        assert_eq!(chromatic_qsym(&chain_ab()).to_string(), "M[1,1]");
    }

    #[test]
    fn stable_flag_enumeration() {
        let flags: Vec<_> = enumerate_stable_flags(&k2()).collect();
        assert_eq!(flags.len(), 2);
        assert_eq!(flags[0].chain(), [s(0), s(1), s(3)]);
        assert_eq!(flags[1].chain(), [s(0), s(2), s(3)]);
        let reflexive_only =
            ColoringProblem::from_generators(GroundSet::alphabetic(2), [s(0), s(1), s(3)], &[]).unwrap();
        assert_eq!(enumerate_stable_flags(&reflexive_only).count(), 0);
        // Ordered set partitions of a 3-set: 13.
        assert_eq!(enumerate_stable_flags(&stable(3)).count(), 13);
        assert_eq!(enumerate_stable_flags(&ColoringProblem::unit()).count(), 1);
    }
}
