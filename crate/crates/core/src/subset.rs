//! Ground sets of labelled elements and subsets encoded as 64-bit masks.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of a ground set, bit `i` standing for the element at position `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full set on `n` elements.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Subset(it.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// True when no bit at or above `n` is set.
    pub fn fits(self, n: usize) -> bool {
        n >= MAX_ELEMENTS || self.0 >> n == 0
    }

    /// Element positions in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Packs the bits of `self` lying in `onto` into consecutive low positions,
    /// in the order they occur in `onto`.
    pub fn compress(self, onto: Subset) -> Subset {
        let mut out = 0u64;
        for (k, i) in onto.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << k;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`]: spreads low bits over the positions of `onto`.
    pub fn expand(self, onto: Subset) -> Subset {
        let mut out = 0u64;
        for (k, i) in onto.iter().enumerate() {
            if self.contains(k) {
                out |= 1 << i;
            }
        }
        Subset(out)
    }

    pub fn shift_up(self, by: usize) -> Subset {
        if by >= MAX_ELEMENTS {
            debug_assert!(self.is_empty());
            Subset(0)
        } else {
            Subset(self.0 << by)
        }
    }

    /// Moves bit `i` to bit `map[i]`.
    pub fn permute(self, map: &[usize]) -> Subset {
        Subset::from_indices(self.iter().map(|i| map[i]))
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full {
                None
            } else {
                Some((c.wrapping_sub(full)) & full)
            };
            Some(Subset(c))
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// An ordered list of distinct element labels; position is the element index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::Guard(format!(
                "ground set has {} elements, at most {MAX_ELEMENTS} are supported",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::structure("ground set", format!("duplicate label {l:?}")));
            }
        }
        Ok(GroundSet { labels })
    }

    /// Ground set labelled `a`, `b`, `c`, ... (then `e26`, `e27`, ...).
    pub fn alphabetic(n: usize) -> Self {
        let labels = (0..n)
            .map(|i| {
                if i < 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("e{i}")
                }
            })
            .collect();
        GroundSet { labels }
    }

    pub fn empty() -> Self {
        GroundSet::default()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn subset_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for l in labels {
            let i = self
                .index_of(l.as_ref())
                .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?;
            s = s.union(Subset::singleton(i));
        }
        Ok(s)
    }

    pub fn labels_of(&self, s: Subset) -> Vec<&str> {
        s.iter().map(|i| self.labels[i].as_str()).collect()
    }

    /// Renders a subset as `{a,b}`.
    pub fn show(&self, s: Subset) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    /// The induced ground set on `s`, keeping the original order.
    pub fn restrict(&self, s: Subset) -> GroundSet {
        GroundSet {
            labels: s.iter().map(|i| self.labels[i].clone()).collect(),
        }
    }

    /// Labels of `self` followed by labels of `other`.
    pub fn concat(&self, other: &GroundSet) -> Result<GroundSet> {
        if self.len() + other.len() > MAX_ELEMENTS {
            return Err(Error::Guard(format!(
                "product would have {} elements",
                self.len() + other.len()
            )));
        }
        let mine: HashSet<&str> = self.labels.iter().map(String::as_str).collect();
        if let Some(dup) = other.labels.iter().find(|l| mine.contains(l.as_str())) {
            return Err(Error::NonDisjoint(dup.clone()));
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Ok(GroundSet { labels })
    }

    /// Position map sending index `i` to the rank of its label in sorted order.
    pub(crate) fn sorting_map(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        let mut map = vec![0; self.len()];
        for (rank, &i) in order.iter().enumerate() {
            map[i] = rank;
        }
        map
    }

    pub(crate) fn sorted_labels(&self) -> Vec<String> {
        let mut l = self.labels.clone();
        l.sort();
        l
    }

    /// Applies a label bijection, keeping positions.
    pub fn relabel(&self, sigma: &Relabeling) -> Result<GroundSet> {
        let mut labels = Vec::with_capacity(self.len());
        for l in &self.labels {
            let image = sigma
                .map
                .get(l)
                .ok_or_else(|| Error::NonBijective(format!("label {l:?} has no image")))?;
            labels.push(image.clone());
        }
        if sigma.map.len() != self.len() {
            return Err(Error::NonBijective(format!(
                "relabeling has {} entries for {} elements",
                sigma.map.len(),
                self.len()
            )));
        }
        GroundSet::new(labels)
            .map_err(|_| Error::NonBijective("two labels share an image".to_string()))
    }
}

/// A label-to-label map used to transport structures along bijections.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Relabeling {
    map: HashMap<String, String>,
}

impl Relabeling {
    pub fn new<A: Into<String>, B: Into<String>>(pairs: impl IntoIterator<Item = (A, B)>) -> Self {
        Relabeling {
            map: pairs.into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
        }
    }

    pub fn identity(ground: &GroundSet) -> Self {
        Relabeling::new(ground.labels().iter().map(|l| (l.clone(), l.clone())))
    }

    pub fn get(&self, label: &str) -> Option<&str> {
        self.map.get(label).map(String::as_str)
    }

    pub fn inverse(&self) -> Relabeling {
        Relabeling::new(self.map.iter().map(|(a, b)| (b.clone(), a.clone())))
    }

    /// The sub-map on the labels of `s`.
    pub fn restrict_to(&self, ground: &GroundSet, s: Subset) -> Relabeling {
        Relabeling::new(ground.labels_of(s).into_iter().filter_map(|l| {
            self.map.get(l).map(|img| (l.to_string(), img.clone()))
        }))
    }
}
