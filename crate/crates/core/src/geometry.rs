//! Convex-geometry recognition by exhaustive search.
//!
//! Two equivalent characterizations are checked: the anti-exchange property
//! and the one-element extension property of proper closed sets. Both
//! searches walk the closed family in lectic order and return the first
//! failure, so witnesses are deterministic.

use crate::closure::{enumerate_closed_sets_with, is_zero_closed, ClosedFamily};
use crate::error::Result;
use crate::limits::Limits;
use crate::model::{ElementSet, ImplicationBasis};

/// Above this size a system that is not zero-closed skips the witness searches.
const DIAGNOSTIC_THRESHOLD: usize = 12;

/// Closed `A ⊊ X` and distinct `x, y ∉ A` with `y ∈ φ(A ∪ {x})` and `x ∈ φ(A ∪ {y})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AntiExchangeWitness {
    pub closed: ElementSet,
    pub x: usize,
    pub y: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryVerdict {
    pub is_convex_geometry: bool,
    pub zero_closed: bool,
    pub anti_exchange_witness: Option<AntiExchangeWitness>,
    /// A proper closed set with no closed one-element extension.
    pub extension_witness: Option<ElementSet>,
}

pub fn anti_exchange_witness(basis: &ImplicationBasis) -> Result<Option<AntiExchangeWitness>> {
    anti_exchange_witness_with(basis, &Limits::default())
}

pub fn anti_exchange_witness_with(
    basis: &ImplicationBasis,
    limits: &Limits,
) -> Result<Option<AntiExchangeWitness>> {
    let family = enumerate_closed_sets_with(basis, limits)?;
    Ok(find_anti_exchange(basis, &family))
}

pub fn extension_witness(basis: &ImplicationBasis) -> Result<Option<ElementSet>> {
    extension_witness_with(basis, &Limits::default())
}

pub fn extension_witness_with(
    basis: &ImplicationBasis,
    limits: &Limits,
) -> Result<Option<ElementSet>> {
    let family = enumerate_closed_sets_with(basis, limits)?;
    Ok(find_extension_failure(&family))
}

pub fn is_convex_geometry(basis: &ImplicationBasis) -> Result<GeometryVerdict> {
    is_convex_geometry_with(basis, &Limits::default())
}

pub fn is_convex_geometry_with(
    basis: &ImplicationBasis,
    limits: &Limits,
) -> Result<GeometryVerdict> {
    let n = basis.ground().len();
    limits.check(n)?;
    let zero_closed = is_zero_closed(basis);
    if !zero_closed && n > DIAGNOSTIC_THRESHOLD {
        return Ok(GeometryVerdict {
            is_convex_geometry: false,
            zero_closed,
            anti_exchange_witness: None,
            extension_witness: None,
        });
    }
    let family = enumerate_closed_sets_with(basis, limits)?;
    let anti_exchange_witness = find_anti_exchange(basis, &family);
    let extension_witness = find_extension_failure(&family);
    Ok(GeometryVerdict {
        is_convex_geometry: zero_closed
            && anti_exchange_witness.is_none()
            && extension_witness.is_none(),
        zero_closed,
        anti_exchange_witness,
        extension_witness,
    })
}

fn find_anti_exchange(
    basis: &ImplicationBasis,
    family: &ClosedFamily,
) -> Option<AntiExchangeWitness> {
    let full = family.ground().full();
    for &closed in family.sets() {
        if closed == full {
            continue;
        }
        let outside: Vec<usize> = full.difference(closed).iter().collect();
        let hulls: Vec<ElementSet> = outside
            .iter()
            .map(|&e| basis.close(closed.with(e)))
            .collect();
        for (i, &x) in outside.iter().enumerate() {
            for (j, &y) in outside.iter().enumerate().skip(i + 1) {
                if hulls[i].contains(y) && hulls[j].contains(x) {
                    return Some(AntiExchangeWitness { closed, x, y });
                }
            }
        }
    }
    None
}

fn find_extension_failure(family: &ClosedFamily) -> Option<ElementSet> {
    let full = family.ground().full();
    family.sets().iter().copied().find(|&closed| {
        closed != full
            && full
                .difference(closed)
                .iter()
                .all(|e| !family.contains(closed.with(e)))
    })
}

/// A maximal chain `C_0 ⊂ C_1 ⊂ … = X` of closed sets growing one element
/// at a time from `φ(∅)`, picking the smallest-index extension at each step.
/// `None` when some step has no closed one-element extension.
pub fn one_step_chain(family: &ClosedFamily) -> Option<Vec<ElementSet>> {
    let full = family.ground().full();
    let mut chain = vec![family.bottom()];
    let mut current = family.bottom();
    while current != full {
        let next = full
            .difference(current)
            .iter()
            .map(|e| current.with(e))
            .find(|s| family.contains(*s))?;
        chain.push(next);
        current = next;
    }
    Some(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::enumerate_closed_sets;
    use crate::model::{make_basis, GroundSet};

    fn basis(labels: &[&str], imps: &[(&[&str], &[&str])]) -> ImplicationBasis {
        let g = GroundSet::new(labels.iter().copied()).unwrap();
        let imps: Vec<(Vec<&str>, Vec<&str>)> =
            imps.iter().map(|(p, c)| (p.to_vec(), c.to_vec())).collect();
        make_basis(g, &imps).unwrap()
    }

    fn conjunction_gadget() -> ImplicationBasis {
        basis(
            &["x1", "x2", "t1", "t2", "f1", "f2"],
            &[
                (&["x1", "t1"], &["x2"]),
                (&["x1", "f1"], &["x2"]),
                (&["x2", "t2"], &["x1"]),
                (&["x2", "f2"], &["x1"]),
                (&["t1", "t2"], &["x1"]),
            ],
        )
    }

    #[test]
    fn anti_exchange_examples() {
        let cycle = basis(&["a", "b"], &[(&["a"], &["b"]), (&["b"], &["a"])]);
        assert_eq!(
            anti_exchange_witness(&cycle).unwrap(),
            Some(AntiExchangeWitness {
                closed: ElementSet::empty(),
                x: 0,
                y: 1
            })
        );
        let free = basis(&["a", "b", "c"], &[]);
        assert_eq!(anti_exchange_witness(&free).unwrap(), None);

        let g = conjunction_gadget();
        let w = anti_exchange_witness(&g).unwrap().unwrap();
        assert_eq!(w.closed, g.ground().set_of(["f1", "f2"]).unwrap());
        assert_eq!((w.x, w.y), (0, 1));
    }

    #[test]
    fn extension_examples() {
        let cycle = basis(&["a", "b"], &[(&["a"], &["b"]), (&["b"], &["a"])]);
        assert_eq!(
            extension_witness(&cycle).unwrap(),
            Some(ElementSet::empty())
        );
        let free = basis(&["a", "b"], &[]);
        assert_eq!(extension_witness(&free).unwrap(), None);
        let lifted = basis(
            &["a", "b", "y1"],
            &[(&["a"], &["b"]), (&["y1"], &["a", "b"])],
        );
        assert_eq!(extension_witness(&lifted).unwrap(), None);
    }

    #[test]
    fn verdict_examples() {
        let lifted = basis(
            &["a", "b", "y1"],
            &[(&["a"], &["b"]), (&["y1"], &["a", "b"])],
        );
        assert!(is_convex_geometry(&lifted).unwrap().is_convex_geometry);

        let tautology = basis(
            &["x1", "x2", "t1", "t2", "f1", "f2"],
            &[
                (&["x1", "t1"], &["x2"]),
                (&["x1", "f1"], &["x2"]),
                (&["x2", "t2"], &["x1"]),
                (&["x2", "f2"], &["x1"]),
                (&["t1"], &["x1"]),
                (&["f1"], &["x1"]),
            ],
        );
        assert!(is_convex_geometry(&tautology).unwrap().is_convex_geometry);

        let pointed = basis(&["a"], &[(&[], &["a"])]);
        let v = is_convex_geometry(&pointed).unwrap();
        assert!(!v.is_convex_geometry);
        assert!(!v.zero_closed);
    }

    #[test]
    fn chain_exists_for_geometries() {
        let lifted = basis(
            &["a", "b", "y1"],
            &[(&["a"], &["b"]), (&["y1"], &["a", "b"])],
        );
        let fam = enumerate_closed_sets(&lifted).unwrap();
        let chain = one_step_chain(&fam).unwrap();
        assert_eq!(chain.len(), 4);
        let cycle = basis(&["a", "b"], &[(&["a"], &["b"]), (&["b"], &["a"])]);
        assert!(one_step_chain(&enumerate_closed_sets(&cycle).unwrap()).is_none());
    }

    #[test]
    fn witnesses_are_deterministic() {
        let g = conjunction_gadget();
        let first = is_convex_geometry(&g).unwrap();
        for _ in 0..5 {
            assert_eq!(is_convex_geometry(&g).unwrap(), first);
        }
    }
}
