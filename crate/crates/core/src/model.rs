//! Ground sets, element sets, implications and implication bases.
//!
//! Element sets are 64-bit masks keyed by the element's position in its
//! [`GroundSet`]. Their [`Ord`] implementation is the lectic order: the first
//! element (in declaration order) on which two sets differ decides, and the
//! set containing it is the larger one.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

/// An ordered universe of distinct, nonempty labels.
#[derive(Clone)]
pub struct GroundSet {
    labels: Arc<[String]>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(labels.len()));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateElement(label.clone()));
            }
        }
        Ok(Self {
            labels: labels.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; a ground set has at least one element.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The whole universe X.
    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn contains_set(&self, set: ElementSet) -> bool {
        set.is_subset(self.full())
    }

    pub fn check(&self, set: ElementSet) -> Result<ElementSet> {
        if self.contains_set(set) {
            Ok(set)
        } else {
            Err(Error::GroundSetMismatch)
        }
    }

    /// Resolves labels to an element set.
    pub fn set_of<I, S>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = ElementSet::empty();
        for label in labels {
            let label = label.as_ref();
            let index = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            set.insert(index);
        }
        Ok(set)
    }

    /// Labels of the members of `set`, in ground order.
    pub fn names(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Concatenated labels, e.g. `aby1`; `∅` for the empty set.
    pub fn display(&self, set: ElementSet) -> String {
        if set.is_empty() {
            return "∅".to_string();
        }
        set.iter().map(|i| self.labels[i].as_str()).collect()
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for GroundSet {}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// A subset of a ground set, bit `i` standing for the element at index `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const fn empty() -> Self {
        Self(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    /// The first `n` elements.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub const fn singleton(index: usize) -> Self {
        Self(1u64 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Self::empty(), |s, i| s.with(i))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, index: usize) -> bool {
        index < 64 && self.0 & (1u64 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1u64 << index;
    }

    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1u64 << index);
    }

    #[must_use]
    pub const fn with(self, index: usize) -> Self {
        Self(self.0 | (1u64 << index))
    }

    #[must_use]
    pub const fn without(self, index: usize) -> Self {
        Self(self.0 & !(1u64 << index))
    }

    #[must_use]
    pub const fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Member indices in ascending order.
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

    /// Position of this set in the lectic order of all subsets of a
    /// `n`-element ground set.
    pub fn lectic_rank(self, n: usize) -> u64 {
        reverse_low_bits(self.0, n)
    }

    /// Inverse of [`ElementSet::lectic_rank`].
    pub fn from_lectic_rank(rank: u64, n: usize) -> Self {
        Self(reverse_low_bits(rank, n))
    }
}

fn reverse_low_bits(bits: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        bits.reverse_bits() >> (64 - n)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.reverse_bits().cmp(&other.0.reverse_bits())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
    }
}

/// Every subset of an `n`-element ground set, in lectic order.
pub fn lectic_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    assert!(n < 64, "cannot enumerate all subsets of {n} elements");
    (0..1u64 << n).map(move |rank| ElementSet::from_lectic_rank(rank, n))
}

/// Every `k`-element subset of an `n`-element ground set, in lectic order.
pub fn lectic_subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    assert!(n < 64, "cannot enumerate all subsets of {n} elements");
    let limit = 1u64 << n;
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let rank = next?;
        // Gosper's hack: next larger integer with the same popcount.
        next = if rank == 0 {
            None
        } else {
            let low = rank & rank.wrapping_neg();
            let ripple = rank + low;
            let candidate = (((ripple ^ rank) >> 2) / low) | ripple;
            (candidate < limit).then_some(candidate)
        };
        Some(ElementSet::from_lectic_rank(rank, n))
    })
}

/// All subsets of `set`, in lectic order.
pub fn subsets_of(set: ElementSet) -> impl Iterator<Item = ElementSet> {
    let members: Vec<usize> = set.iter().collect();
    let k = members.len();
    (0..1u64 << k).map(move |rank| {
        // The last member gets the lowest rank weight.
        let mut out = ElementSet::empty();
        for (j, &m) in members.iter().enumerate() {
            if rank & (1u64 << (k - 1 - j)) != 0 {
                out.insert(m);
            }
        }
        out
    })
}

/// `premise → conclusion`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Implication {
    pub premise: ElementSet,
    pub conclusion: ElementSet,
}

impl Implication {
    pub const fn new(premise: ElementSet, conclusion: ElementSet) -> Self {
        Self {
            premise,
            conclusion,
        }
    }

    pub const fn size(&self) -> usize {
        self.premise.len() + self.conclusion.len()
    }
}

/// An ordered list of implications over one ground set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ImplicationBasis {
    ground: GroundSet,
    implications: Vec<Implication>,
}

impl ImplicationBasis {
    /// Validates that every implication lives in `ground` and has a nonempty conclusion.
    pub fn new(ground: GroundSet, implications: Vec<Implication>) -> Result<Self> {
        for (index, imp) in implications.iter().enumerate() {
            ground.check(imp.premise)?;
            ground.check(imp.conclusion)?;
            if imp.conclusion.is_empty() {
                return Err(Error::EmptyConclusion { index });
            }
        }
        Ok(Self {
            ground,
            implications,
        })
    }

    pub fn empty(ground: GroundSet) -> Self {
        Self {
            ground,
            implications: Vec::new(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn implications(&self) -> &[Implication] {
        &self.implications
    }

    /// Number of implications, duplicates included.
    pub fn cardinality(&self) -> usize {
        self.implications.len()
    }

    /// Sum of premise and conclusion sizes.
    pub fn size(&self) -> usize {
        self.implications.iter().map(Implication::size).sum()
    }

    /// Forward chaining to the least fixpoint containing `start`.
    pub fn close(&self, start: ElementSet) -> ElementSet {
        close_with(&self.implications, start)
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self
            .implications
            .iter()
            .map(|imp| {
                format!(
                    "{}→{}",
                    self.ground.display(imp.premise),
                    self.ground.display(imp.conclusion)
                )
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Fire-until-fixpoint closure over a raw implication list.
pub(crate) fn close_with(implications: &[Implication], start: ElementSet) -> ElementSet {
    let mut current = start;
    let mut pending: Vec<&Implication> = implications
        .iter()
        .filter(|imp| !imp.conclusion.is_subset(current))
        .collect();
    loop {
        let before = pending.len();
        pending.retain(|imp| {
            if imp.premise.is_subset(current) {
                current = current.union(imp.conclusion);
                false
            } else {
                !imp.conclusion.is_subset(current)
            }
        });
        if pending.len() == before {
            return current;
        }
    }
}

/// Builds a basis from label pairs.
pub fn make_basis<P, C, S>(ground: GroundSet, implications: &[(P, C)]) -> Result<ImplicationBasis>
where
    P: AsRef<[S]>,
    C: AsRef<[S]>,
    S: AsRef<str>,
{
    let mut out = Vec::with_capacity(implications.len());
    for (index, (premise, conclusion)) in implications.iter().enumerate() {
        let premise = ground.set_of(premise.as_ref())?;
        let conclusion = ground.set_of(conclusion.as_ref())?;
        if conclusion.is_empty() {
            return Err(Error::EmptyConclusion { index });
        }
        out.push(Implication::new(premise, conclusion));
    }
    ImplicationBasis::new(ground, out)
}

/// `(cardinality, size)` of a basis.
pub fn basis_size(basis: &ImplicationBasis) -> (usize, usize) {
    (basis.cardinality(), basis.size())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(labels: &[&str]) -> GroundSet {
        GroundSet::new(labels.iter().copied()).unwrap()
    }

    #[test]
    fn make_basis_counts() {
        let b = make_basis(ground(&["a", "b", "c"]), &[(vec!["a", "b"], vec!["c"])]).unwrap();
        assert_eq!(basis_size(&b), (1, 3));
    }

    #[test]
    fn make_basis_rejects_empty_conclusion() {
        let empty: Vec<&str> = vec![];
        let err = make_basis(ground(&["a"]), &[(vec!["a"], empty)]).unwrap_err();
        assert_eq!(err, Error::EmptyConclusion { index: 0 });
    }

    #[test]
    fn make_basis_rejects_unknown_label() {
        let err = make_basis(ground(&["a"]), &[(vec!["z"], vec!["a"])]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".into()));
    }

    #[test]
    fn sizes() {
        let g = ground(&["a", "b", "y1"]);
        let b = make_basis(
            g.clone(),
            &[(vec!["a"], vec!["b"]), (vec!["y1"], vec!["a", "b"])],
        )
        .unwrap();
        assert_eq!(basis_size(&b), (2, 5));
        assert_eq!(basis_size(&ImplicationBasis::empty(g)), (0, 0));
    }

    #[test]
    fn ground_set_validation() {
        assert_eq!(
            GroundSet::new(["a", "a"]).unwrap_err(),
            Error::DuplicateElement("a".into())
        );
        assert_eq!(
            GroundSet::new(Vec::<String>::new()).unwrap_err(),
            Error::EmptyGroundSet
        );
        assert_eq!(GroundSet::new([""]).unwrap_err(), Error::EmptyLabel);
        let many: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        assert_eq!(
            GroundSet::new(many).unwrap_err(),
            Error::GroundSetTooLarge(65)
        );
    }

    #[test]
    fn lectic_order_puts_first_element_highest() {
        // a=0, b=1, c=2
        let n = 3;
        let order: Vec<ElementSet> = lectic_subsets(n).collect();
        assert_eq!(order[0], ElementSet::empty());
        assert_eq!(order[1], ElementSet::singleton(2));
        assert_eq!(order[2], ElementSet::singleton(1));
        assert_eq!(order[7], ElementSet::full(3));
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(sorted, order);
    }

    #[test]
    fn sized_subsets_are_lectic_and_complete() {
        for n in 0..7 {
            for k in 0..=n + 1 {
                let got: Vec<ElementSet> = lectic_subsets_of_size(n, k).collect();
                let want: Vec<ElementSet> = lectic_subsets(n).filter(|s| s.len() == k).collect();
                assert_eq!(got, want, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn subsets_of_is_lectic() {
        let set = ElementSet::from_indices([1, 3, 4]);
        let got: Vec<ElementSet> = subsets_of(set).collect();
        let mut want: Vec<ElementSet> = lectic_subsets(5).filter(|s| s.is_subset(set)).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn closure_chains() {
        let g = ground(&["a", "b", "c"]);
        let b = make_basis(g.clone(), &[(vec!["a"], vec!["b"]), (vec!["b"], vec!["c"])]).unwrap();
        assert_eq!(b.close(g.set_of(["a"]).unwrap()), g.full());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn union_intersection_counts(s in any::<u64>(), t in any::<u64>()) {
                let (s, t) = (ElementSet::from_bits(s), ElementSet::from_bits(t));
                prop_assert_eq!(s.union(t).len() + s.intersection(t).len(), s.len() + t.len());
            }

            #[test]
            fn size_dominates_cardinality(
                imps in proptest::collection::vec((0u64..16, 1u64..16), 0..8)
            ) {
                let g = GroundSet::new(["a", "b", "c", "d"]).unwrap();
                let imps = imps
                    .into_iter()
                    .map(|(p, c)| Implication::new(ElementSet::from_bits(p), ElementSet::from_bits(c)))
                    .collect();
                let b = ImplicationBasis::new(g, imps).unwrap();
                let (card, size) = basis_size(&b);
                prop_assert!(size >= card);
            }

            #[test]
            fn lectic_rank_roundtrip(bits in any::<u64>(), n in 1usize..=64) {
                let set = ElementSet::from_bits(bits).intersection(ElementSet::full(n));
                prop_assert_eq!(ElementSet::from_lectic_rank(set.lectic_rank(n), n), set);
            }
        }
    }
}
