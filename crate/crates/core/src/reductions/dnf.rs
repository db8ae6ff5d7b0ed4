use crate::error::{Error, Result};
use crate::formula::{Assignment, DnfFormula};
use crate::geometry::AntiExchangeWitness;
use crate::model::{ElementSet, GroundSet, Implication, ImplicationBasis};

/// Convex-geometry gadget of a DNF formula over
/// `X = {x1..xn, t1..tn, f1..fn}`, in that ground order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DnfGadget {
    pub basis: ImplicationBasis,
    pub formula: DnfFormula,
    pub var_to_x: Vec<usize>,
    pub var_to_t: Vec<usize>,
    pub var_to_f: Vec<usize>,
    /// `S_j` for each clause: `t_i` for literal `a_i`, `f_i` for `¬a_i`.
    pub clause_to_s: Vec<ElementSet>,
}

/// Builds the gadget: `x_i t_i → x_{i+1}` and `x_i f_i → x_{i+1}` for each
/// `i` (with `x_{n+1} = x_1`), then `S_j → x_1` for each clause.
pub fn dnf_to_cg(formula: &DnfFormula) -> Result<DnfGadget> {
    let n = formula.num_vars();
    if n < 2 {
        return Err(Error::TooFewVariables(n));
    }
    if 3 * n > crate::model::MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge(3 * n));
    }
    let var_to_x: Vec<usize> = (0..n).collect();
    let var_to_t: Vec<usize> = (n..2 * n).collect();
    let var_to_f: Vec<usize> = (2 * n..3 * n).collect();
    let labels = ["x", "t", "f"]
        .iter()
        .flat_map(|p| (1..=n).map(move |i| format!("{p}{i}")));
    let ground = GroundSet::new(labels)?;

    let mut implications = Vec::with_capacity(2 * n + formula.clauses().len());
    for i in 0..n {
        let succ = ElementSet::singleton(var_to_x[(i + 1) % n]);
        for side in [var_to_t[i], var_to_f[i]] {
            implications.push(Implication::new(
                ElementSet::from_indices([var_to_x[i], side]),
                succ,
            ));
        }
    }
    let clause_to_s: Vec<ElementSet> = formula
        .clauses()
        .iter()
        .map(|clause| {
            clause
                .iter()
                .map(|lit| {
                    if lit.is_positive() {
                        var_to_t[lit.var() - 1]
                    } else {
                        var_to_f[lit.var() - 1]
                    }
                })
                .collect()
        })
        .collect();
    let x1 = ElementSet::singleton(var_to_x[0]);
    implications.extend(clause_to_s.iter().map(|&s| Implication::new(s, x1)));

    Ok(DnfGadget {
        basis: ImplicationBasis::new(ground, implications)?,
        formula: formula.clone(),
        var_to_x,
        var_to_t,
        var_to_f,
        clause_to_s,
    })
}

/// The anti-exchange violation `(A, x1, x2)` induced by a falsifying
/// assignment, with `A = {t_i : ψ(a_i)} ∪ {f_i : ¬ψ(a_i)}`.
pub fn falsifying_to_violation(
    gadget: &DnfGadget,
    assignment: &Assignment,
) -> Result<AntiExchangeWitness> {
    let n = gadget.formula.num_vars();
    if assignment.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: assignment.len(),
        });
    }
    if let Some(clause) =
        (0..gadget.formula.clauses().len()).find(|&j| gadget.formula.clause_holds(j, assignment))
    {
        return Err(Error::NotFalsifying { clause });
    }
    let closed: ElementSet = (0..n)
        .map(|i| {
            if assignment.values()[i] {
                gadget.var_to_t[i]
            } else {
                gadget.var_to_f[i]
            }
        })
        .collect();
    Ok(AntiExchangeWitness {
        closed,
        x: gadget.var_to_x[0],
        y: gadget.var_to_x[1],
    })
}
