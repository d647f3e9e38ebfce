//! Coloring problems: a family of subsets containing `∅` and `N`, together with
//! an order ideal of its interval poset that contains every reflexive interval.
//!
//! Restriction and contraction return `None` for the base point of the pointed
//! set (the "zero" structure).

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{GroundSet, Relabeling, Subset, MAX_ELEMENTS};

/// `None` is the base point.
pub type Maybe<T> = Option<T>;

/// Distinct subsets, sorted by mask.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SubsetFamily {
    members: Vec<Subset>,
}

impl SubsetFamily {
    /// Sorts and deduplicates. Does not check that `∅` and `N` are present.
    pub fn new(members: impl IntoIterator<Item = Subset>) -> Self {
        let mut members: Vec<Subset> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        SubsetFamily { members }
    }

    /// All subsets of an `n`-element set.
    pub fn power_set(n: usize) -> Self {
        SubsetFamily {
            members: Subset::full(n).subsets().collect(),
        }
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.members.binary_search(&s).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    /// Number of nested pairs `S ⊆ T` of members.
    pub fn nested_pair_count(&self) -> usize {
        self.members
            .iter()
            .map(|&t| self.members.iter().filter(|s| s.is_subset_of(t)).count())
            .sum()
    }
}

/// A downward-closed set of intervals `[S, T]` of a subset family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalIdeal {
    pairs: HashSet<(Subset, Subset)>,
}

impl IntervalIdeal {
    pub fn new(pairs: impl IntoIterator<Item = (Subset, Subset)>) -> Self {
        IntervalIdeal {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn contains(&self, lower: Subset, upper: Subset) -> bool {
        self.pairs.contains(&(lower, upper))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.pairs.iter().copied()
    }

    /// Pairs in lexicographic mask order.
    pub fn sorted(&self) -> Vec<(Subset, Subset)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_unstable();
        v
    }

    /// Downward closure of `generators` inside `family`, plus all reflexive pairs.
    pub fn generated_by(family: &SubsetFamily, generators: &[(Subset, Subset)]) -> Self {
        let mut pairs: HashSet<(Subset, Subset)> = family.iter().map(|s| (s, s)).collect();
        for &(lo, hi) in generators {
            let inside: Vec<Subset> = family
                .iter()
                .filter(|x| lo.is_subset_of(*x) && x.is_subset_of(hi))
                .collect();
            for &x in &inside {
                for &y in &inside {
                    if x.is_subset_of(y) {
                        pairs.insert((x, y));
                    }
                }
            }
        }
        IntervalIdeal { pairs }
    }
}

/// Every nested pair of `family`, i.e. the whole interval poset.
pub fn full_interval_set(family: &SubsetFamily) -> IntervalIdeal {
    let mut pairs = HashSet::new();
    for t in family.iter() {
        for s in family.iter().filter(|s| s.is_subset_of(t)) {
            pairs.insert((s, t));
        }
    }
    IntervalIdeal { pairs }
}

/// How thoroughly [`validate`] checks downward closure of the ideal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ClosureCheck {
    /// Checks only the lower covers of each pair in the interval poset.
    #[default]
    Covers,
    /// Checks every sub-interval of every pair.
    Paranoid,
}

/// A coloring problem as read from a file, before any checking.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawColoringProblem {
    pub labels: Vec<String>,
    pub family: Vec<Subset>,
    pub ideal: Vec<(Subset, Subset)>,
}

/// One broken axiom, with the subsets witnessing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    TooManyElements(usize),
    DuplicateLabel(String),
    SubsetOutOfRange(Subset),
    EmptySetAbsent,
    FullSetAbsent,
    PairNotNested(Subset, Subset),
    EndpointOutsideFamily(Subset, Subset),
    MissingReflexivePair(Subset),
    OrderIdealClosure {
        present: (Subset, Subset),
        missing: (Subset, Subset),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooManyElements(n) => {
                write!(f, "ground set has {n} elements (at most {MAX_ELEMENTS})")
            }
            Violation::DuplicateLabel(l) => write!(f, "duplicate element label {l:?}"),
            Violation::SubsetOutOfRange(s) => write!(f, "subset {s:?} uses elements outside N"),
            Violation::EmptySetAbsent => {
                write!(f, "empty set absent (axiom 2: the family must contain ∅ and N)")
            }
            Violation::FullSetAbsent => {
                write!(f, "full set absent (axiom 2: the family must contain ∅ and N)")
            }
            Violation::PairNotNested(s, t) => write!(f, "interval [{s:?}, {t:?}] is not nested"),
            Violation::EndpointOutsideFamily(s, t) => {
                write!(f, "interval [{s:?}, {t:?}] has an endpoint outside the family")
            }
            Violation::MissingReflexivePair(s) => {
                write!(f, "reflexive interval [{s:?}, {s:?}] missing from the ideal")
            }
            Violation::OrderIdealClosure { present, missing } => write!(
                f,
                "order-ideal closure: [{:?}, {:?}] is in the ideal but its sub-interval [{:?}, {:?}] is not",
                present.0, present.1, missing.0, missing.1
            ),
        }
    }
}

/// Lists every violated coloring-problem axiom; empty means valid.
pub fn validate(raw: &RawColoringProblem, mode: ClosureCheck) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = raw.labels.len();
    if n > MAX_ELEMENTS {
        out.push(Violation::TooManyElements(n));
    }
    let mut seen = HashSet::new();
    for l in &raw.labels {
        if !seen.insert(l) {
            out.push(Violation::DuplicateLabel(l.clone()));
        }
    }
    let n = n.min(MAX_ELEMENTS);
    let full = Subset::full(n);
    for &s in &raw.family {
        if !s.fits(n) {
            out.push(Violation::SubsetOutOfRange(s));
        }
    }
    for &(s, t) in &raw.ideal {
        for x in [s, t] {
            if !x.fits(n) {
                out.push(Violation::SubsetOutOfRange(x));
            }
        }
    }
    let family = SubsetFamily::new(raw.family.iter().copied());
    if !family.contains(Subset::EMPTY) {
        out.push(Violation::EmptySetAbsent);
    }
    if !family.contains(full) {
        out.push(Violation::FullSetAbsent);
    }
    let ideal = IntervalIdeal::new(raw.ideal.iter().copied());
    let mut sorted = ideal.sorted();
    for &(s, t) in &sorted {
        if !s.is_subset_of(t) {
            out.push(Violation::PairNotNested(s, t));
        }
        if !family.contains(s) || !family.contains(t) {
            out.push(Violation::EndpointOutsideFamily(s, t));
        }
    }
    for s in family.iter() {
        if !ideal.contains(s, s) {
            out.push(Violation::MissingReflexivePair(s));
        }
    }
    sorted.retain(|&(s, t)| s.is_subset_of(t) && family.contains(s) && family.contains(t));
    out.extend(match mode {
        ClosureCheck::Covers => closure_by_covers(&family, &ideal, &sorted),
        ClosureCheck::Paranoid => closure_exhaustive(&family, &ideal, &sorted),
    });
    out
}

/// Upper covers of each family member under inclusion, indexed like the family.
fn upper_covers(family: &SubsetFamily) -> Vec<Vec<Subset>> {
    let m = family.members();
    m.iter()
        .map(|&s| {
            let above: Vec<Subset> = m.iter().copied().filter(|t| s.is_proper_subset_of(*t)).collect();
            above
                .iter()
                .copied()
                .filter(|&t| !above.iter().any(|&u| u.is_proper_subset_of(t)))
                .collect()
        })
        .collect()
}

// A finite order ideal is closed downward iff it is closed under lower covers.
// The lower covers of [S, T] in the interval poset are [U, T] with U covering S
// and [S, U] with T covering U.
fn closure_by_covers(
    family: &SubsetFamily,
    ideal: &IntervalIdeal,
    pairs: &[(Subset, Subset)],
) -> Vec<Violation> {
    let up = upper_covers(family);
    let mut down: Vec<Vec<Subset>> = vec![Vec::new(); family.len()];
    for (i, covers) in up.iter().enumerate() {
        for &t in covers {
            down[family.index_of(t).unwrap()].push(family.members()[i]);
        }
    }
    let mut out = Vec::new();
    for &(s, t) in pairs {
        let si = family.index_of(s).unwrap();
        let ti = family.index_of(t).unwrap();
        for &u in up[si].iter().filter(|u| u.is_subset_of(t)) {
            if !ideal.contains(u, t) {
                out.push(Violation::OrderIdealClosure {
                    present: (s, t),
                    missing: (u, t),
                });
            }
        }
        for &u in down[ti].iter().filter(|u| s.is_subset_of(**u)) {
            if !ideal.contains(s, u) {
                out.push(Violation::OrderIdealClosure {
                    present: (s, t),
                    missing: (s, u),
                });
            }
        }
    }
    out
}

fn closure_exhaustive(
    family: &SubsetFamily,
    ideal: &IntervalIdeal,
    pairs: &[(Subset, Subset)],
) -> Vec<Violation> {
    let mut out = Vec::new();
    for &(s, t) in pairs {
        let inside: Vec<Subset> = family
            .iter()
            .filter(|x| s.is_subset_of(*x) && x.is_subset_of(t))
            .collect();
        for &x in &inside {
            for &y in inside.iter().filter(|y| x.is_subset_of(**y)) {
                if !ideal.contains(x, y) {
                    out.push(Violation::OrderIdealClosure {
                        present: (s, t),
                        missing: (x, y),
                    });
                }
            }
        }
    }
    out
}

/// A validated coloring problem.
///
/// Elements are identified by label: equality compares the labelled families
/// and ideals, independent of the order in which the ground set lists them.
#[derive(Clone, Debug)]
pub struct ColoringProblem {
    ground: GroundSet,
    family: SubsetFamily,
    ideal: IntervalIdeal,
}

impl ColoringProblem {
    pub fn new(
        ground: GroundSet,
        family: impl IntoIterator<Item = Subset>,
        ideal: impl IntoIterator<Item = (Subset, Subset)>,
    ) -> Result<Self> {
        Self::from_raw(
            RawColoringProblem {
                labels: ground.labels().to_vec(),
                family: family.into_iter().collect(),
                ideal: ideal.into_iter().collect(),
            },
            ClosureCheck::Covers,
        )
    }

    pub fn from_raw(raw: RawColoringProblem, mode: ClosureCheck) -> Result<Self> {
        let violations = validate(&raw, mode);
        if !violations.is_empty() {
            return Err(Error::InvalidProblem(violations));
        }
        Ok(ColoringProblem {
            ground: GroundSet::new(raw.labels)?,
            family: SubsetFamily::new(raw.family),
            ideal: IntervalIdeal::new(raw.ideal),
        })
    }

    /// Builds the ideal as the downward closure of `generators` plus reflexive pairs.
    pub fn from_generators(
        ground: GroundSet,
        family: impl IntoIterator<Item = Subset>,
        generators: &[(Subset, Subset)],
    ) -> Result<Self> {
        let family = SubsetFamily::new(family);
        let mut bad = Vec::new();
        for &(s, t) in generators {
            if !s.is_subset_of(t) {
                bad.push(Violation::PairNotNested(s, t));
            } else if !family.contains(s) || !family.contains(t) {
                bad.push(Violation::EndpointOutsideFamily(s, t));
            }
        }
        if !bad.is_empty() {
            return Err(Error::InvalidProblem(bad));
        }
        let ideal = IntervalIdeal::generated_by(&family, generators);
        Self::new(ground, family.members.clone(), ideal.pairs)
    }

    /// A problem whose ideal is every interval of `family`.
    pub fn stable(ground: GroundSet, family: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let family = SubsetFamily::new(family);
        let ideal = full_interval_set(&family);
        Self::new(ground, family.members.clone(), ideal.pairs)
    }

    /// The unit: empty ground set, family `{∅}`.
    pub fn unit() -> Self {
        ColoringProblem {
            ground: GroundSet::empty(),
            family: SubsetFamily::new([Subset::EMPTY]),
            ideal: IntervalIdeal::new([(Subset::EMPTY, Subset::EMPTY)]),
        }
    }

    pub(crate) fn from_parts_unchecked(
        ground: GroundSet,
        family: SubsetFamily,
        ideal: IntervalIdeal,
    ) -> Self {
        let cp = ColoringProblem {
            ground,
            family,
            ideal,
        };
        debug_assert!(
            validate(&cp.to_raw(), ClosureCheck::Covers).is_empty(),
            "internal construction produced an invalid problem"
        );
        cp
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn family(&self) -> &SubsetFamily {
        &self.family
    }

    pub fn ideal(&self) -> &IntervalIdeal {
        &self.ideal
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full(&self) -> Subset {
        self.ground.full()
    }

    pub fn to_raw(&self) -> RawColoringProblem {
        RawColoringProblem {
            labels: self.ground.labels().to_vec(),
            family: self.family.members.clone(),
            ideal: self.ideal.sorted(),
        }
    }

    pub fn validate(&self, mode: ClosureCheck) -> Vec<Violation> {
        validate(&self.to_raw(), mode)
    }

    /// Disjoint-union product; the ground set lists `self`'s labels first.
    pub fn product(&self, other: &ColoringProblem) -> Result<ColoringProblem> {
        let ground = self.ground.concat(&other.ground)?;
        let shift = self.len();
        let family = SubsetFamily::new(self.family.iter().flat_map(|x| {
            other.family.iter().map(move |y| x.union(y.shift_up(shift)))
        }));
        let mut pairs = HashSet::with_capacity(self.ideal.len() * other.ideal.len());
        for (x, x2) in self.ideal.iter() {
            for (y, y2) in other.ideal.iter() {
                pairs.insert((x.union(y.shift_up(shift)), x2.union(y2.shift_up(shift))));
            }
        }
        Ok(Self::from_parts_unchecked(
            ground,
            family,
            IntervalIdeal { pairs },
        ))
    }

    /// The part of the problem below `s`, relabelled onto the elements of `s`.
    pub fn restrict(&self, s: Subset) -> Maybe<ColoringProblem> {
        debug_assert!(s.fits(self.len()));
        if !self.family.contains(s) {
            return None;
        }
        let family = SubsetFamily::new(
            self.family
                .iter()
                .filter(|t| t.is_subset_of(s))
                .map(|t| t.compress(s)),
        );
        let ideal = IntervalIdeal::new(
            self.ideal
                .iter()
                .filter(|(_, y)| y.is_subset_of(s))
                .map(|(x, y)| (x.compress(s), y.compress(s))),
        );
        Some(Self::from_parts_unchecked(
            self.ground.restrict(s),
            family,
            ideal,
        ))
    }

    /// The part of the problem above `s`, relabelled onto `N ∖ s`.
    pub fn contract(&self, s: Subset) -> Maybe<ColoringProblem> {
        debug_assert!(s.fits(self.len()));
        if !self.family.contains(s) {
            return None;
        }
        let rest = self.full().difference(s);
        let family = SubsetFamily::new(
            self.family
                .iter()
                .filter(|t| s.is_subset_of(*t))
                .map(|t| t.difference(s).compress(rest)),
        );
        let ideal = IntervalIdeal::new(
            self.ideal
                .iter()
                .filter(|(x, _)| s.is_subset_of(*x))
                .map(|(x, y)| (x.difference(s).compress(rest), y.difference(s).compress(rest))),
        );
        Some(Self::from_parts_unchecked(
            self.ground.restrict(rest),
            family,
            ideal,
        ))
    }

    /// Stable means the ideal is the whole interval poset of the family.
    pub fn is_stable(&self) -> bool {
        self.ideal.len() == self.family.nested_pair_count()
    }

    pub fn relabel(&self, sigma: &Relabeling) -> Result<ColoringProblem> {
        Ok(ColoringProblem {
            ground: self.ground.relabel(sigma)?,
            family: self.family.clone(),
            ideal: self.ideal.clone(),
        })
    }

    fn canonical(&self) -> (Vec<String>, Vec<Subset>, Vec<(Subset, Subset)>) {
        let map = self.ground.sorting_map();
        let mut family: Vec<Subset> = self.family.iter().map(|s| s.permute(&map)).collect();
        family.sort_unstable();
        let mut ideal: Vec<(Subset, Subset)> = self
            .ideal
            .iter()
            .map(|(s, t)| (s.permute(&map), t.permute(&map)))
            .collect();
        ideal.sort_unstable();
        (self.ground.sorted_labels(), family, ideal)
    }
}

impl PartialEq for ColoringProblem {
    fn eq(&self, other: &Self) -> bool {
        if self.ground == other.ground {
            return self.family == other.family && self.ideal == other.ideal;
        }
        self.len() == other.len()
            && self.family.len() == other.family.len()
            && self.ideal.len() == other.ideal.len()
            && self.canonical() == other.canonical()
    }
}

impl Eq for ColoringProblem {}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(labels: &[&str]) -> GroundSet {
        GroundSet::new(labels.iter().copied()).unwrap()
    }

    fn s(bits: u64) -> Subset {
        Subset::from_bits(bits)
    }

    /// Coloring problem of the single edge a–b.
    fn k2() -> ColoringProblem {
        let fam = SubsetFamily::power_set(2);
        let ideal = full_interval_set(&fam)
            .iter()
            .filter(|&p| p != (s(0), s(3)))
            .collect::<Vec<_>>();
        ColoringProblem::new(g(&["a", "b"]), fam.members().to_vec(), ideal).unwrap()
    }

    #[test]
    fn smallest_nontrivial_problem_is_valid() {
        let raw = RawColoringProblem {
            labels: vec!["a".into()],
            family: vec![s(0), s(1)],
            ideal: vec![(s(0), s(0)), (s(1), s(1)), (s(0), s(1))],
        };
        assert!(validate(&raw, ClosureCheck::Covers).is_empty());
        assert!(validate(&raw, ClosureCheck::Paranoid).is_empty());
    }

    #[test]
    fn missing_full_set_is_reported() {
        let raw = RawColoringProblem {
            labels: vec!["a".into(), "b".into()],
            family: vec![s(0), s(1)],
            ideal: vec![(s(0), s(0)), (s(1), s(1))],
        };
        let v = validate(&raw, ClosureCheck::Covers);
        assert_eq!(v, vec![Violation::FullSetAbsent]);
        assert!(v[0].to_string().contains("full set absent"));
    }

    #[test]
    fn closure_violation_found_by_both_checks() {
        // (∅,{a,b}) present but ({a},{a,b}) absent.
        let fam = vec![s(0), s(1), s(3)];
        let raw = RawColoringProblem {
            labels: vec!["a".into(), "b".into()],
            family: fam.clone(),
            ideal: vec![(s(0), s(0)), (s(1), s(1)), (s(3), s(3)), (s(0), s(3)), (s(0), s(1))],
        };
        let covers = validate(&raw, ClosureCheck::Covers);
        let paranoid = validate(&raw, ClosureCheck::Paranoid);
        let want = Violation::OrderIdealClosure {
            present: (s(0), s(3)),
            missing: (s(1), s(3)),
        };
        assert!(covers.contains(&want), "{covers:?}");
        assert!(paranoid.contains(&want), "{paranoid:?}");
    }

    #[test]
    fn brute_force_closure_oracle_agrees_on_all_ideals_of_two_element_power_set() {
        // Every subset of Int(2^{a,b}) containing the reflexive pairs.
        let fam = SubsetFamily::power_set(2);
        let all = full_interval_set(&fam).sorted();
        let nonrefl: Vec<_> = all.iter().copied().filter(|(a, b)| a != b).collect();
        for mask in 0u32..(1 << nonrefl.len()) {
            let mut ideal: Vec<_> = fam.iter().map(|x| (x, x)).collect();
            ideal.extend(
                nonrefl
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, p)| *p),
            );
            // Oracle: for every pair, every S ⊆ S' ⊆ T' ⊆ T in the family is present.
            let set: HashSet<_> = ideal.iter().copied().collect();
            let closed = ideal.iter().all(|&(a, b)| {
                fam.iter().all(|x| {
                    fam.iter().all(|y| {
                        !(a.is_subset_of(x) && x.is_subset_of(y) && y.is_subset_of(b))
                            || set.contains(&(x, y))
                    })
                })
            });
            let raw = RawColoringProblem {
                labels: vec!["a".into(), "b".into()],
                family: fam.members().to_vec(),
                ideal,
            };
            assert_eq!(validate(&raw, ClosureCheck::Covers).is_empty(), closed);
            assert_eq!(validate(&raw, ClosureCheck::Paranoid).is_empty(), closed);
        }
    }

    #[test]
    fn product_of_trivial_problems_is_boolean() {
        let a = ColoringProblem::stable(g(&["a"]), [s(0), s(1)]).unwrap();
        let b = ColoringProblem::stable(g(&["b"]), [s(0), s(1)]).unwrap();
        let p = a.product(&b).unwrap();
        assert_eq!(p.family(), &SubsetFamily::power_set(2));
        assert_eq!(p.ideal().len(), 9);
        assert!(p.is_stable());
    }

    #[test]
    fn product_rejects_shared_labels() {
        assert!(matches!(k2().product(&k2()), Err(Error::NonDisjoint(_))));
    }

    #[test]
    fn unit_laws() {
        let c = k2();
        assert_eq!(c.product(&ColoringProblem::unit()).unwrap(), c);
        assert_eq!(ColoringProblem::unit().product(&c).unwrap(), c);
        assert!(ColoringProblem::unit().validate(ClosureCheck::Paranoid).is_empty());
    }

    #[test]
    fn restriction_and_contraction_counits() {
        let c = k2();
        assert_eq!(c.restrict(c.full()).unwrap(), c);
        assert_eq!(c.contract(Subset::EMPTY).unwrap(), c);
        let a = c.restrict(s(1)).unwrap();
        assert_eq!(a.ground().labels(), ["a"]);
        assert!(a.is_stable());
        assert_eq!(a.ideal().len(), 3);
    }

    #[test]
    fn path_contracted_by_endpoint_drops_edge_interval() {
        // Path a–b–c: (S,T) allowed iff T∖S independent.
        let fam = SubsetFamily::power_set(3);
        let edges = [s(0b011), s(0b110)];
        let ideal: Vec<_> = full_interval_set(&fam)
            .iter()
            .filter(|&(x, y)| {
                let d = y.difference(x);
                !edges.iter().any(|e| e.is_subset_of(d))
            })
            .collect();
        let c = ColoringProblem::new(g(&["a", "b", "c"]), fam.members().to_vec(), ideal).unwrap();
        let q = c.contract(s(0b001)).unwrap();
        assert_eq!(q.ground().labels(), ["b", "c"]);
        // (∅,{b,c}) present iff ({a},{a,b,c}) present in c; bc is an edge, so absent.
        assert!(!c.ideal().contains(s(0b001), s(0b111)));
        assert!(!q.ideal().contains(s(0), s(0b11)));
        assert!(q.ideal().contains(s(0), s(0b01)));
    }

    #[test]
    fn stability() {
        assert!(!k2().is_stable());
        let st = ColoringProblem::stable(g(&["a", "b"]), SubsetFamily::power_set(2).members().to_vec())
            .unwrap();
        assert!(st.is_stable());
        assert_eq!(full_interval_set(&SubsetFamily::power_set(2)).len(), 9);
        let tiny = full_interval_set(&SubsetFamily::new([s(0), s(1)]));
        assert_eq!(tiny.sorted(), vec![(s(0), s(0)), (s(0), s(1)), (s(1), s(1))]);
    }

    #[test]
    fn relabel_swap_is_automorphism_of_edge() {
        let c = k2();
        let swap = Relabeling::new([("a", "b"), ("b", "a")]);
        let r = c.relabel(&swap).unwrap();
        assert_eq!(r, c);
        let fresh = Relabeling::new([("a", "x"), ("b", "y")]);
        let back = c.relabel(&fresh).unwrap().relabel(&fresh.inverse()).unwrap();
        assert_eq!(back, c);
        assert_eq!(c.relabel(&Relabeling::identity(c.ground())).unwrap(), c);
        assert!(c.relabel(&Relabeling::new([("a", "x"), ("b", "x")])).is_err());
    }

    #[test]
    fn restriction_outside_family_is_zero() {
        let c = ColoringProblem::stable(g(&["a", "b"]), [s(0), s(1), s(3)]).unwrap();
        assert!(c.restrict(s(2)).is_none());
        assert!(c.contract(s(2)).is_none());
    }
}
