use super::{same_labelled_sets, HopfMonoid};
use crate::error::{Error, Result};
use crate::problem::{Maybe, SubsetFamily};
use crate::subset::{GroundSet, Relabeling, Subset};

/// An antimatroid: a union-closed, accessible family of feasible sets
/// containing `∅` and `N`.
///
/// Restriction and contraction are zero unless the subset is feasible.
/// Boolean lattices are stable.
#[derive(Clone, Debug)]
pub struct Antimatroid {
    ground: GroundSet,
    feasible: SubsetFamily,
}

impl Antimatroid {
    pub fn new(ground: GroundSet, feasible: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let feasible = SubsetFamily::new(feasible);
        if let Some(reason) = axiom_failure(ground.len(), &feasible) {
            return Err(Error::structure("antimatroid", reason));
        }
        Ok(Antimatroid { ground, feasible })
    }

    pub fn feasible(&self) -> &SubsetFamily {
        &self.feasible
    }

    pub fn boolean(ground: GroundSet) -> Self {
        let feasible = SubsetFamily::power_set(ground.len());
        Antimatroid { ground, feasible }
    }
}

/// First broken antimatroid axiom, if any.
pub(crate) fn axiom_failure(n: usize, family: &SubsetFamily) -> Option<String> {
    let full = Subset::full(n);
    if let Some(x) = family.iter().find(|x| !x.fits(n)) {
        return Some(format!("feasible set {x:?} out of range"));
    }
    if !family.contains(Subset::EMPTY) || !family.contains(full) {
        return Some("∅ and N must be feasible".into());
    }
    for x in family.iter().filter(|x| !x.is_empty()) {
        if !x.iter().any(|e| family.contains(x.difference(Subset::singleton(e)))) {
            return Some(format!("feasible set {x:?} is not accessible"));
        }
    }
    for x in family.iter() {
        for y in family.iter() {
            if !family.contains(x.union(y)) {
                return Some(format!("union of {x:?} and {y:?} is not feasible"));
            }
        }
    }
    None
}

impl PartialEq for Antimatroid {
    fn eq(&self, other: &Self) -> bool {
        same_labelled_sets(&self.ground, self.feasible.iter(), &other.ground, other.feasible.iter())
    }
}

impl HopfMonoid for Antimatroid {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn empty_like(&self) -> Self {
        Antimatroid::boolean(GroundSet::empty())
    }

    fn product(&self, other: &Self) -> Result<Self> {
        let ground = self.ground.concat(&other.ground)?;
        let k = self.ground.len();
        let feasible = SubsetFamily::new(
            self.feasible
                .iter()
                .flat_map(|x| other.feasible.iter().map(move |y| x.union(y.shift_up(k)))),
        );
        Ok(Antimatroid { ground, feasible })
    }

    fn restrict(&self, s: Subset) -> Maybe<Self> {
        if !self.feasible.contains(s) {
            return None;
        }
        Some(Antimatroid {
            ground: self.ground.restrict(s),
            feasible: SubsetFamily::new(
                self.feasible
                    .iter()
                    .filter(|x| x.is_subset_of(s))
                    .map(|x| x.compress(s)),
            ),
        })
    }

    fn contract(&self, s: Subset) -> Maybe<Self> {
        if !self.feasible.contains(s) {
            return None;
        }
        let rest = self.ground.full().difference(s);
        Some(Antimatroid {
            ground: self.ground.restrict(rest),
            feasible: SubsetFamily::new(
                self.feasible
                    .iter()
                    .filter(|x| s.is_subset_of(*x))
                    .map(|x| x.difference(s).compress(rest)),
            ),
        })
    }

    fn is_stable(&self) -> bool {
        self.feasible.len() as u128 == 1u128 << self.ground.len()
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        Ok(Antimatroid {
            ground: self.ground.relabel(sigma)?,
            feasible: self.feasible.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(bits: u64) -> Subset {
        Subset::from_bits(bits)
    }

    #[test]
    fn axioms_enforced() {
        let g = GroundSet::alphabetic(2);
        assert!(Antimatroid::new(g.clone(), [s(0), s(3)]).is_err()); // not accessible
        assert!(Antimatroid::new(g.clone(), [s(0), s(1), s(2)]).is_err()); // N missing
        assert!(Antimatroid::new(g, [s(0), s(1), s(3)]).is_ok());
    }

    #[test]
    fn minors_and_stability() {
        let a = Antimatroid::new(GroundSet::alphabetic(2), [s(0), s(1), s(3)]).unwrap();
        assert!(!a.is_stable());
        assert!(a.restrict(s(2)).is_none());
        let c = a.contract(s(1)).unwrap();
        assert!(c.is_stable());
        assert!(Antimatroid::boolean(GroundSet::alphabetic(2)).is_stable());
        for t in a.feasible().iter() {
            let r = a.restrict(t).unwrap();
            assert!(axiom_failure(r.ground().len(), r.feasible()).is_none());
            let q = a.contract(t).unwrap();
            assert!(axiom_failure(q.ground().len(), q.feasible()).is_none());
        }
    }
}
