use crate::error::{Error, LiftViolation, Result};
use crate::model::{ElementSet, GroundSet, Implication, ImplicationBasis};
use crate::optimizer::OptimumReport;

/// The convex-geometry lift of a basis `Σ = {A_i → B_i}` on `X`.
///
/// The ground set is `X` followed by fresh elements `Y = {y1..yn}`, one per
/// implication, and the basis is `{(A_i ∪ Y∖{y_i}) → B_i}` followed by `Y → X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftGadget {
    pub basis: ImplicationBasis,
    pub original: ImplicationBasis,
    /// Element index of `y_i`, indexed by implication position.
    pub impl_to_y: Vec<usize>,
    /// `left[0] = Y`, `left[i] = A_i ∪ Y∖{y_i}`.
    pub left: Vec<ElementSet>,
    /// `right[0] = X`, `right[i] = B_i`.
    pub right: Vec<ElementSet>,
}

impl LiftGadget {
    pub fn y_set(&self) -> ElementSet {
        self.left[0]
    }

    pub fn x_set(&self) -> ElementSet {
        self.right[0]
    }
}

pub fn cg_lift(original: &ImplicationBasis) -> Result<LiftGadget> {
    let imps = original.implications();
    if imps.is_empty() {
        return Err(Error::PreconditionViolated {
            index: 0,
            reason: LiftViolation::EmptyBasis,
        });
    }
    for (index, imp) in imps.iter().enumerate() {
        let reason = if imp.premise.is_empty() {
            Some(LiftViolation::EmptyPremise)
        } else if imp.conclusion.is_empty() {
            Some(LiftViolation::EmptyConclusion)
        } else if !imp.premise.is_disjoint(imp.conclusion) {
            Some(LiftViolation::OverlappingSides)
        } else {
            None
        };
        if let Some(reason) = reason {
            return Err(Error::PreconditionViolated { index, reason });
        }
    }

    let m = original.ground().len();
    let n = imps.len();
    if m + n > crate::model::MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge(m + n));
    }
    let ground = GroundSet::new(
        original
            .ground()
            .labels()
            .iter()
            .cloned()
            .chain(fresh_labels(original.ground(), n)),
    )?;

    let impl_to_y: Vec<usize> = (m..m + n).collect();
    let y_set = ElementSet::from_indices(impl_to_y.iter().copied());
    let x_set = original.ground().full();

    let mut left = vec![y_set];
    let mut right = vec![x_set];
    let mut implications = Vec::with_capacity(n + 1);
    for (i, imp) in imps.iter().enumerate() {
        let l = imp.premise.union(y_set.without(impl_to_y[i]));
        left.push(l);
        right.push(imp.conclusion);
        implications.push(Implication::new(l, imp.conclusion));
    }
    implications.push(Implication::new(y_set, x_set));

    Ok(LiftGadget {
        basis: ImplicationBasis::new(ground, implications)?,
        original: original.clone(),
        impl_to_y,
        left,
        right,
    })
}

/// `y1..yn`, suffixed with underscores until none collides with `ground`.
fn fresh_labels(ground: &GroundSet, n: usize) -> Vec<String> {
    let mut suffix = String::new();
    loop {
        let labels: Vec<String> = (1..=n).map(|i| format!("y{i}{suffix}")).collect();
        if labels.iter().all(|l| ground.index_of(l).is_none()) {
            return labels;
        }
        suffix.push('_');
    }
}

/// Reads the minimum generator of the original basis off an optimum basis
/// of the lift, checking that the optimum is `{L_i → R_i} ∪ {Y → S}`.
pub fn extract_min_generator(gadget: &LiftGadget, optimum: &OptimumReport) -> Result<ElementSet> {
    if !optimum.certified {
        return Err(Error::ShapeViolation(
            "optimum search was not certified".into(),
        ));
    }
    if optimum.basis.ground() != gadget.basis.ground() {
        return Err(Error::GroundSetMismatch);
    }
    let y_set = gadget.y_set();
    let x_set = gadget.x_set();
    let ground = gadget.basis.ground();

    let (top, rest): (Vec<&Implication>, Vec<&Implication>) = optimum
        .basis
        .implications()
        .iter()
        .partition(|imp| imp.premise.is_subset(y_set));
    let top = match top.as_slice() {
        [single] => **single,
        _ => {
            return Err(Error::ShapeViolation(format!(
                "expected one implication with premise inside Y, found {}",
                top.len()
            )))
        }
    };
    if top.premise != y_set || !top.conclusion.is_subset(x_set) {
        return Err(Error::ShapeViolation(format!(
            "top implication is {}→{}, expected Y → S with S ⊆ X",
            ground.display(top.premise),
            ground.display(top.conclusion)
        )));
    }

    let mut expected: Vec<Implication> = (1..gadget.left.len())
        .map(|i| Implication::new(gadget.left[i], gadget.right[i]))
        .collect();
    let mut found: Vec<Implication> = rest.into_iter().copied().collect();
    expected.sort();
    found.sort();
    if expected != found {
        return Err(Error::ShapeViolation(
            "lifted implications L_i → R_i were not kept verbatim".into(),
        ));
    }
    Ok(top.conclusion)
}
