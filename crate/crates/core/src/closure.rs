//! The closure operator induced by an implication basis.

use crate::error::Result;
use crate::limits::Limits;
use crate::model::{lectic_subsets, ElementSet, GroundSet, ImplicationBasis};

/// Below this size closed sets are found by testing every subset; above it by
/// next-closure stepping.
const FILTER_THRESHOLD: usize = 20;

/// Every closed set of a closure system, in lectic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFamily {
    ground: GroundSet,
    sets: Vec<ElementSet>,
}

impl ClosedFamily {
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    /// Never true: the ground set itself is always closed.
    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: ElementSet) -> bool {
        self.sets.binary_search(&set).is_ok()
    }

    /// `φ(S)` as the intersection of every closed superset of `S`.
    pub fn hull(&self, set: ElementSet) -> ElementSet {
        self.sets
            .iter()
            .filter(|c| set.is_subset(**c))
            .fold(self.ground.full(), |acc, c| acc.intersection(*c))
    }

    /// The ⊆-least member, `φ(∅)`.
    pub fn bottom(&self) -> ElementSet {
        self.sets[0]
    }
}

/// `φ(S)`.
pub fn closure(basis: &ImplicationBasis, set: ElementSet) -> Result<ElementSet> {
    basis.ground().check(set)?;
    Ok(basis.close(set))
}

/// True iff no implication has its premise inside `S` and its conclusion outside.
pub fn is_closed(basis: &ImplicationBasis, set: ElementSet) -> Result<bool> {
    basis.ground().check(set)?;
    Ok(respects(basis, set))
}

pub(crate) fn respects(basis: &ImplicationBasis, set: ElementSet) -> bool {
    basis
        .implications()
        .iter()
        .all(|imp| !imp.premise.is_subset(set) || imp.conclusion.is_subset(set))
}

/// `φ(∅) = ∅`.
pub fn is_zero_closed(basis: &ImplicationBasis) -> bool {
    basis
        .implications()
        .iter()
        .all(|imp| !imp.premise.is_empty())
}

/// `φ(S) = X`.
pub fn is_generator(basis: &ImplicationBasis, set: ElementSet) -> Result<bool> {
    Ok(closure(basis, set)? == basis.ground().full())
}

pub fn enumerate_closed_sets(basis: &ImplicationBasis) -> Result<ClosedFamily> {
    enumerate_closed_sets_with(basis, &Limits::default())
}

pub fn enumerate_closed_sets_with(
    basis: &ImplicationBasis,
    limits: &Limits,
) -> Result<ClosedFamily> {
    let n = basis.ground().len();
    limits.check(n)?;
    let sets = if n <= FILTER_THRESHOLD {
        lectic_subsets(n).filter(|s| respects(basis, *s)).collect()
    } else {
        next_closure_sweep(basis)
    };
    Ok(ClosedFamily {
        ground: basis.ground().clone(),
        sets,
    })
}

/// Ganter's next-closure enumeration; element 0 carries the highest lectic weight.
pub(crate) fn next_closure_sweep(basis: &ImplicationBasis) -> Vec<ElementSet> {
    let n = basis.ground().len();
    let full = basis.ground().full();
    let mut current = basis.close(ElementSet::empty());
    let mut out = vec![current];
    while current != full {
        let mut probe = current;
        let mut advanced = false;
        for i in (0..n).rev() {
            if probe.contains(i) {
                probe.remove(i);
                continue;
            }
            let next = basis.close(probe.with(i));
            let before_i = ElementSet::full(i);
            if next.difference(probe).intersection(before_i).is_empty() {
                current = next;
                advanced = true;
                break;
            }
        }
        debug_assert!(advanced, "next-closure stalled below the top element");
        if !advanced {
            break;
        }
        out.push(current);
    }
    out
}
