//! Exhaustive solvers for minimum generators and optimum bases.
//!
//! The optimum-basis search only visits shortenings of the canonical basis:
//! one implication `A_k → B_k` per critical set `C_k`, with `A_k ⊆ C_k` and
//! `∅ ≠ B_k ⊆ φ(C_k)`. Two further restrictions hold for every equivalent
//! shortening and are used to prune:
//!
//! * `σ(A_k) = C_k`. Every critical set needs a premise saturating to it, `σ`
//!   is monotone, and the only permutation of critical sets that maps each
//!   one to a subset of itself is the identity.
//! * `B_k ∩ A_k = ∅` for a minimum one. Dropping premise elements from the
//!   conclusion keeps the basis equivalent, and `B_k ⊆ A_k` would make the
//!   implication redundant, leaving a basis smaller than the canonical one.
//!
//! Candidates are visited by ascending total size, and lexicographically
//! within one size, so the first equivalent combination is the answer.

use crate::basis::SystemAnalysis;
use crate::error::Result;
use crate::limits::Limits;
use crate::model::{
    close_with, lectic_subsets_of_size, subsets_of, ElementSet, Implication, ImplicationBasis,
};

/// Lectic-least generator of minimum cardinality.
pub fn min_generator(basis: &ImplicationBasis) -> Result<ElementSet> {
    min_generator_with(basis, &Limits::default())
}

pub fn min_generator_with(basis: &ImplicationBasis, limits: &Limits) -> Result<ElementSet> {
    let n = basis.ground().len();
    limits.check(n)?;
    let full = basis.ground().full();
    for k in 0..=n {
        if let Some(s) = lectic_subsets_of_size(n, k).find(|s| basis.close(*s) == full) {
            return Ok(s);
        }
    }
    unreachable!("the ground set generates itself")
}

/// Result of the optimum-basis search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimumReport {
    pub basis: ImplicationBasis,
    pub size: usize,
    /// Candidate combinations tested for equivalence.
    pub search_nodes: u64,
    /// `canonical_origin[i]` is the index of the canonical implication that
    /// `basis.implications()[i]` shortens.
    pub canonical_origin: Vec<usize>,
    /// The canonical basis the search started from.
    pub canonical: ImplicationBasis,
    /// False when the node budget ran out; `basis` is then the best
    /// equivalent shortening known, not a proven optimum.
    pub certified: bool,
}

pub fn optimum_basis(basis: &ImplicationBasis) -> Result<OptimumReport> {
    optimum_basis_with(basis, &Limits::default())
}

pub fn optimum_basis_with(basis: &ImplicationBasis, limits: &Limits) -> Result<OptimumReport> {
    let analysis = SystemAnalysis::with_limits(basis, limits)?;
    let canonical = analysis.canonical_basis();
    let targets = canonical.implications();

    let options: Vec<Vec<Implication>> = targets
        .iter()
        .map(|t| shortening_options(&analysis, t))
        .collect();

    let fallback: Vec<Implication> = targets
        .iter()
        .map(|t| Implication::new(t.premise, t.conclusion.difference(t.premise)))
        .collect();

    let mut search = Search {
        options: &options,
        targets,
        budget: limits.node_budget(),
        nodes: 0,
        chosen: Vec::with_capacity(targets.len()),
    };
    let found = search.run(fallback_size(&fallback));
    let certified = found.is_some() || targets.is_empty();
    let implications = found.unwrap_or(fallback);
    let result = ImplicationBasis::new(basis.ground().clone(), implications)
        .expect("shortenings keep nonempty conclusions");
    Ok(OptimumReport {
        size: result.size(),
        search_nodes: search.nodes,
        canonical_origin: (0..targets.len()).collect(),
        basis: result,
        canonical,
        certified,
    })
}

fn fallback_size(implications: &[Implication]) -> usize {
    implications.iter().map(Implication::size).sum()
}

/// Candidate shortenings of one canonical implication, in lexicographic
/// (premise, conclusion) order.
fn shortening_options(analysis: &SystemAnalysis, target: &Implication) -> Vec<Implication> {
    let mut out = Vec::new();
    for premise in subsets_of(target.premise) {
        if analysis.saturate(premise) != target.premise {
            continue;
        }
        let room = target.conclusion.difference(premise);
        out.extend(
            subsets_of(room)
                .filter(|b| !b.is_empty())
                .map(|b| Implication::new(premise, b)),
        );
    }
    out
}

struct Search<'a> {
    options: &'a [Vec<Implication>],
    targets: &'a [Implication],
    budget: u64,
    nodes: u64,
    chosen: Vec<Implication>,
}

impl Search<'_> {
    /// Ascending-size sweep up to `ceiling`. `None` if nothing equivalent was
    /// found or the budget ran out.
    fn run(&mut self, ceiling: usize) -> Option<Vec<Implication>> {
        if self.targets.is_empty() {
            return Some(Vec::new());
        }
        if self.options.iter().any(Vec::is_empty) {
            return None;
        }
        let mins: Vec<usize> = self
            .options
            .iter()
            .map(|o| o.iter().map(Implication::size).min().unwrap_or(0))
            .collect();
        let maxs: Vec<usize> = self
            .options
            .iter()
            .map(|o| o.iter().map(Implication::size).max().unwrap_or(0))
            .collect();
        // Suffix sums for feasibility pruning.
        let mut min_rest = vec![0; mins.len() + 1];
        let mut max_rest = vec![0; maxs.len() + 1];
        for k in (0..mins.len()).rev() {
            min_rest[k] = min_rest[k + 1] + mins[k];
            max_rest[k] = max_rest[k + 1] + maxs[k];
        }
        for total in min_rest[0]..=ceiling.min(max_rest[0]) {
            match self.descend(0, total, &min_rest, &max_rest) {
                Step::Found => return Some(self.chosen.clone()),
                Step::Exhausted => return None,
                Step::Continue => {}
            }
        }
        None
    }

    fn descend(
        &mut self,
        k: usize,
        remaining: usize,
        min_rest: &[usize],
        max_rest: &[usize],
    ) -> Step {
        if k == self.options.len() {
            if remaining != 0 {
                return Step::Continue;
            }
            if self.nodes >= self.budget {
                return Step::Exhausted;
            }
            self.nodes += 1;
            return if self.is_equivalent() {
                Step::Found
            } else {
                Step::Continue
            };
        }
        for option in &self.options[k] {
            let size = option.size();
            if size > remaining {
                continue;
            }
            let rest = remaining - size;
            if rest < min_rest[k + 1] || rest > max_rest[k + 1] {
                continue;
            }
            self.chosen.push(*option);
            match self.descend(k + 1, rest, min_rest, max_rest) {
                Step::Continue => {
                    self.chosen.pop();
                }
                other => return other,
            }
        }
        Step::Continue
    }

    /// Each chosen implication holds in the original system by construction,
    /// so only the canonical implications need re-deriving.
    fn is_equivalent(&self) -> bool {
        self.targets
            .iter()
            .all(|t| t.conclusion.is_subset(close_with(&self.chosen, t.premise)))
    }
}

enum Step {
    Found,
    Exhausted,
    Continue,
}
