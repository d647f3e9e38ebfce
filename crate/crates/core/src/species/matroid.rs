use super::{same_labelled_sets, HopfMonoid};
use crate::error::{Error, Result};
use crate::problem::Maybe;
use crate::subset::{GroundSet, Relabeling, Subset};

/// A matroid given by its bases.
///
/// Products are direct sums. Minors are computed from the bases directly:
/// the bases of `m|S` are the maximum-size sets `B ∩ S`, those of `m/S` the
/// sets `B ∖ S` for bases maximizing `|B ∩ S|`. Neither is ever zero. A matroid
/// is stable when every element is a loop or a coloop, i.e. it has one basis.
#[derive(Clone, Debug)]
pub struct Matroid {
    ground: GroundSet,
    bases: Vec<Subset>,
}

impl Matroid {
    pub fn new(ground: GroundSet, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let n = ground.len();
        if bases.is_empty() {
            return Err(Error::structure("matroid", "no bases"));
        }
        if let Some(b) = bases.iter().find(|b| !b.fits(n)) {
            return Err(Error::structure("matroid", format!("basis {b:?} out of range")));
        }
        let r = bases[0].len();
        if bases.iter().any(|b| b.len() != r) {
            return Err(Error::structure("matroid", "bases have different sizes"));
        }
        if let Some(reason) = exchange_failure(&bases) {
            return Err(Error::structure("matroid", reason));
        }
        Ok(Matroid { ground, bases })
    }

    /// The free matroid on `ground` (one basis, everything a coloop).
    pub fn free(ground: GroundSet) -> Self {
        let b = ground.full();
        Matroid { ground, bases: vec![b] }
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn rank(&self) -> usize {
        self.bases[0].len()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.bases.iter().all(|b| !b.contains(e))
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.bases.iter().all(|b| b.contains(e))
    }

    pub fn is_loop_coloop_only(&self) -> bool {
        (0..self.ground.len()).all(|e| self.is_loop(e) || self.is_coloop(e))
    }

    fn minor_bases(&self, s: Subset, keep: Subset, part: impl Fn(Subset) -> Subset) -> Matroid {
        let best = self.bases.iter().map(|b| b.intersection(s).len()).max().unwrap();
        let mut bases: Vec<Subset> = self
            .bases
            .iter()
            .filter(|b| b.intersection(s).len() == best)
            .map(|&b| part(b).compress(keep))
            .collect();
        bases.sort_unstable();
        bases.dedup();
        Matroid {
            ground: self.ground.restrict(keep),
            bases,
        }
    }
}

/// Checks the basis exchange axiom by brute force.
fn exchange_failure(bases: &[Subset]) -> Option<String> {
    for &b1 in bases {
        for &b2 in bases {
            for x in b1.difference(b2).iter() {
                let ok = b2.difference(b1).iter().any(|y| {
                    let swapped = b1.difference(Subset::singleton(x)).union(Subset::singleton(y));
                    bases.binary_search(&swapped).is_ok()
                });
                if !ok {
                    return Some(format!("exchange fails for {b1:?}, {b2:?} at element {x}"));
                }
            }
        }
    }
    None
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        same_labelled_sets(
            &self.ground,
            self.bases.iter().copied(),
            &other.ground,
            other.bases.iter().copied(),
        )
    }
}

impl HopfMonoid for Matroid {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn empty_like(&self) -> Self {
        Matroid::free(GroundSet::empty())
    }

    fn product(&self, other: &Self) -> Result<Self> {
        let ground = self.ground.concat(&other.ground)?;
        let k = self.ground.len();
        let mut bases: Vec<Subset> = self
            .bases
            .iter()
            .flat_map(|&b1| other.bases.iter().map(move |&b2| b1.union(b2.shift_up(k))))
            .collect();
        bases.sort_unstable();
        Ok(Matroid { ground, bases })
    }

    fn restrict(&self, s: Subset) -> Maybe<Self> {
        Some(self.minor_bases(s, s, |b| b.intersection(s)))
    }

    fn contract(&self, s: Subset) -> Maybe<Self> {
        let rest = self.ground.full().difference(s);
        Some(self.minor_bases(s, rest, |b| b.difference(s)))
    }

    fn is_stable(&self) -> bool {
        self.bases.len() == 1
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        Ok(Matroid {
            ground: self.ground.relabel(sigma)?,
            bases: self.bases.clone(),
        })
    }
}

/// Every matroid on `n ≤ 5` labelled elements, found by filtering all
/// equicardinal families of subsets through the exchange axiom.
pub fn all_matroids(n: usize) -> Result<Vec<Matroid>> {
    if n > 5 {
        return Err(Error::Guard(format!("matroid catalog limited to 5 elements, got {n}")));
    }
    let ground = GroundSet::alphabetic(n);
    let mut out = Vec::new();
    for r in 0..=n {
        let candidates: Vec<Subset> = ground.full().subsets().filter(|s| s.len() == r).collect();
        for mask in 1u64..1 << candidates.len() {
            let bases: Vec<Subset> = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &b)| b)
                .collect();
            if exchange_failure(&bases).is_none() {
                out.push(Matroid {
                    ground: ground.clone(),
                    bases,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(bits: u64) -> Subset {
        Subset::from_bits(bits)
    }

    fn u12() -> Matroid {
        Matroid::new(GroundSet::alphabetic(2), [s(1), s(2)]).unwrap()
    }

    #[test]
    fn direct_sum_with_loop() {
        let lp = Matroid::new(GroundSet::new(["c"]).unwrap(), [s(0)]).unwrap();
        let sum = u12().product(&lp).unwrap();
        assert_eq!(sum.bases(), [s(1), s(2)]);
        assert!(sum.is_loop(2));
    }

    #[test]
    fn contracting_a_point_of_u12_leaves_a_loop() {
        let m = u12().contract(s(1)).unwrap();
        assert_eq!(m.ground().labels(), ["b"]);
        assert_eq!(m.bases(), [s(0)]);
        assert!(m.is_loop(0));
        let r = u12().restrict(s(1)).unwrap();
        assert!(r.is_coloop(0));
    }

    #[test]
    fn stability_means_loops_and_coloops() {
        assert!(!u12().is_stable());
        assert!(!u12().is_loop_coloop_only());
        for m in all_matroids(3).unwrap() {
            assert_eq!(m.is_stable(), m.is_loop_coloop_only());
        }
    }

    #[test]
    fn exchange_axiom_rejects_non_matroid() {
        // {a,b} and {c,d} alone violate exchange.
        assert!(Matroid::new(GroundSet::alphabetic(4), [s(0b0011), s(0b1100)]).is_err());
        assert!(Matroid::new(GroundSet::alphabetic(2), [s(1), s(3)]).is_err());
    }

    #[test]
    fn catalog_counts() {
        // Labelled matroids on 0..=4 elements: 1, 2, 5, 16, 68.
        let counts: Vec<usize> = (0..=4).map(|n| all_matroids(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 5, 16, 68]);
    }
}
