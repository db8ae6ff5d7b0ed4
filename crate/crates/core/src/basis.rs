//! Quasi-closed and critical sets, the saturation operator, the canonical
//! basis, and basis equivalence.

use crate::closure::{enumerate_closed_sets_with, respects, ClosedFamily};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::model::{lectic_subsets, ElementSet, Implication, ImplicationBasis};

/// Quasi-closed sets (lectic order) with their closures, and the critical ones among them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiClosedReport {
    pub quasi_closed: Vec<ElementSet>,
    /// `closures[i] = φ(quasi_closed[i])`.
    pub closures: Vec<ElementSet>,
    pub critical: Vec<ElementSet>,
}

/// The closed family and quasi-closed report of one closure system, computed
/// once by sweeping all subsets.
#[derive(Clone, Debug)]
pub struct SystemAnalysis {
    basis: ImplicationBasis,
    closed: ClosedFamily,
    report: QuasiClosedReport,
}

impl SystemAnalysis {
    pub fn new(basis: &ImplicationBasis) -> Result<Self> {
        Self::with_limits(basis, &Limits::default())
    }

    pub fn with_limits(basis: &ImplicationBasis, limits: &Limits) -> Result<Self> {
        let closed = enumerate_closed_sets_with(basis, limits)?;
        let n = basis.ground().len();

        let mut quasi_closed = Vec::new();
        let mut closures = Vec::new();
        for q in lectic_subsets(n) {
            if closed.contains(q) {
                continue;
            }
            let ok = closed
                .sets()
                .iter()
                .all(|&s| q.is_subset(s) || respects(basis, s.intersection(q)));
            if ok {
                quasi_closed.push(q);
                closures.push(basis.close(q));
            }
        }

        let critical = quasi_closed
            .iter()
            .zip(&closures)
            .filter(|(&c, &hull)| {
                !quasi_closed
                    .iter()
                    .zip(&closures)
                    .any(|(&q, &qh)| q.is_proper_subset(c) && qh == hull)
            })
            .map(|(&c, _)| c)
            .collect();

        Ok(Self {
            basis: basis.clone(),
            closed,
            report: QuasiClosedReport {
                quasi_closed,
                closures,
                critical,
            },
        })
    }

    pub fn basis(&self) -> &ImplicationBasis {
        &self.basis
    }

    pub fn closed_family(&self) -> &ClosedFamily {
        &self.closed
    }

    pub fn report(&self) -> &QuasiClosedReport {
        &self.report
    }

    pub fn quasi_closed(&self) -> &[ElementSet] {
        &self.report.quasi_closed
    }

    pub fn critical(&self) -> &[ElementSet] {
        &self.report.critical
    }

    /// `σ(S)`: intersection of every closed or quasi-closed superset of `S`.
    pub fn saturation(&self, set: ElementSet) -> Result<ElementSet> {
        self.basis.ground().check(set)?;
        Ok(self.saturate(set))
    }

    pub(crate) fn saturate(&self, set: ElementSet) -> ElementSet {
        self.closed
            .sets()
            .iter()
            .chain(&self.report.quasi_closed)
            .filter(|t| set.is_subset(**t))
            .fold(self.basis.ground().full(), |acc, t| acc.intersection(*t))
    }

    /// `{C → φ(C) : C critical}` in lectic order of `C`.
    pub fn canonical_basis(&self) -> ImplicationBasis {
        let implications = self
            .report
            .critical
            .iter()
            .map(|&c| Implication::new(c, self.basis.close(c)))
            .collect();
        ImplicationBasis::new(self.basis.ground().clone(), implications)
            .expect("critical sets are non-closed, so φ(C) is nonempty")
    }
}

pub fn quasi_closed_sets(basis: &ImplicationBasis) -> Result<Vec<ElementSet>> {
    Ok(SystemAnalysis::new(basis)?.report.quasi_closed)
}

pub fn critical_sets(basis: &ImplicationBasis) -> Result<Vec<ElementSet>> {
    Ok(SystemAnalysis::new(basis)?.report.critical)
}

pub fn saturation(basis: &ImplicationBasis, set: ElementSet) -> Result<ElementSet> {
    SystemAnalysis::new(basis)?.saturation(set)
}

pub fn canonical_basis(basis: &ImplicationBasis) -> Result<ImplicationBasis> {
    Ok(SystemAnalysis::new(basis)?.canonical_basis())
}

/// Does `A → B` hold in the system of `basis`, i.e. `B ⊆ φ(A)`?
pub fn holds(basis: &ImplicationBasis, implication: &Implication) -> bool {
    implication
        .conclusion
        .is_subset(basis.close(implication.premise))
}

/// Same closure operator, decided by mutual implication-holding.
pub fn bases_equivalent(first: &ImplicationBasis, second: &ImplicationBasis) -> Result<bool> {
    if first.ground() != second.ground() {
        return Err(Error::GroundSetMismatch);
    }
    Ok(first.implications().iter().all(|imp| holds(second, imp))
        && second.implications().iter().all(|imp| holds(first, imp)))
}
