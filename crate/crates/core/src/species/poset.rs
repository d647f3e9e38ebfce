use super::{Antimatroid, HopfMonoid};
use crate::error::{Error, Result};
use crate::problem::Maybe;
use crate::subset::{GroundSet, Relabeling, Subset};

/// A partial order, stored as the down-set `{j : j ≤ i}` of every element.
///
/// Restriction and contraction are zero unless the subset is an order ideal;
/// otherwise they are the induced subposets. Antichains are stable.
#[derive(Clone, Debug)]
pub struct Poset {
    ground: GroundSet,
    down: Vec<Subset>,
}

impl Poset {
    /// Builds the order generated by `(lower, upper)` pairs.
    pub fn from_relations(
        ground: GroundSet,
        relations: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = ground.len();
        let mut down: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for (lo, hi) in relations {
            if lo >= n || hi >= n {
                return Err(Error::structure("poset", format!("relation ({lo},{hi}) out of range")));
            }
            down[hi] = down[hi].union(Subset::singleton(lo));
        }
        // Transitive closure.
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut d = down[i];
                for j in down[i].iter() {
                    d = d.union(down[j]);
                }
                if d != down[i] {
                    down[i] = d;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for i in 0..n {
            for j in down[i].iter().filter(|&j| j != i) {
                if down[j].contains(i) {
                    return Err(Error::structure(
                        "poset",
                        format!("elements {} and {} lie on a cycle", ground.labels()[i], ground.labels()[j]),
                    ));
                }
            }
        }
        Ok(Poset { ground, down })
    }

    pub fn antichain(ground: GroundSet) -> Self {
        let down = (0..ground.len()).map(Subset::singleton).collect();
        Poset { ground, down }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    /// All strict relations `a < b`.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.down
            .iter()
            .enumerate()
            .flat_map(|(b, d)| d.iter().filter(move |&a| a != b).map(move |a| (a, b)))
    }

    /// Covering relations `a ⋖ b`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .filter(|&(a, b)| {
                !self
                    .relations()
                    .any(|(x, y)| x == a && y != b && self.down[b].contains(y))
            })
            .collect()
    }

    pub fn is_order_ideal(&self, s: Subset) -> bool {
        s.iter().all(|i| self.down[i].is_subset_of(s))
    }

    pub fn order_ideals(&self) -> Vec<Subset> {
        self.ground.full().subsets().filter(|&s| self.is_order_ideal(s)).collect()
    }

    fn induced(&self, s: Subset) -> Poset {
        Poset {
            ground: self.ground.restrict(s),
            down: s.iter().map(|i| self.down[i].intersection(s).compress(s)).collect(),
        }
    }

    // Pairs encoded as two-bit-position subsets can't express order, so compare
    // down-sets keyed by label instead.
    fn labelled_relations(&self) -> Vec<(String, String)> {
        let l = self.ground.labels();
        let mut v: Vec<_> = self.relations().map(|(a, b)| (l[a].clone(), l[b].clone())).collect();
        v.sort();
        v
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.ground.sorted_labels() == other.ground.sorted_labels()
            && self.labelled_relations() == other.labelled_relations()
    }
}

impl HopfMonoid for Poset {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn empty_like(&self) -> Self {
        Poset::antichain(GroundSet::empty())
    }

    fn product(&self, other: &Self) -> Result<Self> {
        let ground = self.ground.concat(&other.ground)?;
        let k = self.ground.len();
        let mut down = self.down.clone();
        down.extend(other.down.iter().map(|d| d.shift_up(k)));
        Ok(Poset { ground, down })
    }

    fn restrict(&self, s: Subset) -> Maybe<Self> {
        self.is_order_ideal(s).then(|| self.induced(s))
    }

    fn contract(&self, s: Subset) -> Maybe<Self> {
        self.is_order_ideal(s)
            .then(|| self.induced(self.ground.full().difference(s)))
    }

    fn is_stable(&self) -> bool {
        self.down.iter().all(|d| d.len() == 1)
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        Ok(Poset {
            ground: self.ground.relabel(sigma)?,
            down: self.down.clone(),
        })
    }
}

/// The antimatroid of order ideals.
pub fn poset_to_antimatroid(p: &Poset) -> Antimatroid {
    Antimatroid::new(p.ground.clone(), p.order_ideals()).expect("order ideals form an antimatroid")
}
