use crate::error::{Error, Result};
use crate::formula::{Assignment, CnfFormula};
use crate::model::{ElementSet, GroundSet, Implication, ImplicationBasis};

/// Minimum-generator gadget of a CNF formula over
/// `X = {x1..xn, y1..yn, z1..zm, s}`, in that ground order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatGadget {
    pub basis: ImplicationBasis,
    /// Element index of `x_i`, indexed by `i - 1`.
    pub var_to_x: Vec<usize>,
    pub var_to_y: Vec<usize>,
    /// Element index of `z_j`, indexed by `j - 1`.
    pub clause_to_z: Vec<usize>,
    pub s_element: usize,
}

impl SatGadget {
    pub fn num_vars(&self) -> usize {
        self.var_to_x.len()
    }
}

/// Builds the gadget: literal rules clause by clause, then `z1…zm → s`,
/// then `s x_i → y_i` and `s y_i → x_i` for each variable.
pub fn sat_to_mingen(formula: &CnfFormula) -> SatGadget {
    let n = formula.num_vars();
    let m = formula.clauses().len();
    let var_to_x: Vec<usize> = (0..n).collect();
    let var_to_y: Vec<usize> = (n..2 * n).collect();
    let clause_to_z: Vec<usize> = (2 * n..2 * n + m).collect();
    let s_element = 2 * n + m;

    let labels = (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|i| format!("y{i}")))
        .chain((1..=m).map(|j| format!("z{j}")))
        .chain(std::iter::once("s".to_string()));
    let ground = GroundSet::new(labels).expect("gadget labels are distinct");

    let mut implications = Vec::new();
    for (j, clause) in formula.clauses().iter().enumerate() {
        let z = ElementSet::singleton(clause_to_z[j]);
        for lit in clause {
            let side = if lit.is_positive() {
                var_to_x[lit.var() - 1]
            } else {
                var_to_y[lit.var() - 1]
            };
            implications.push(Implication::new(ElementSet::singleton(side), z));
        }
    }
    implications.push(Implication::new(
        ElementSet::from_indices(clause_to_z.iter().copied()),
        ElementSet::singleton(s_element),
    ));
    for i in 0..n {
        let (x, y) = (var_to_x[i], var_to_y[i]);
        implications.push(Implication::new(
            ElementSet::from_indices([s_element, x]),
            ElementSet::singleton(y),
        ));
        implications.push(Implication::new(
            ElementSet::from_indices([s_element, y]),
            ElementSet::singleton(x),
        ));
    }

    SatGadget {
        basis: ImplicationBasis::new(ground, implications).expect("gadget is well-formed"),
        var_to_x,
        var_to_y,
        clause_to_z,
        s_element,
    }
}

/// `{x_i : ψ(a_i)} ∪ {y_i : ¬ψ(a_i)}`.
pub fn assignment_to_generator(gadget: &SatGadget, assignment: &Assignment) -> Result<ElementSet> {
    if assignment.len() != gadget.num_vars() {
        return Err(Error::LengthMismatch {
            expected: gadget.num_vars(),
            found: assignment.len(),
        });
    }
    Ok((0..gadget.num_vars())
        .map(|i| {
            if assignment.values()[i] {
                gadget.var_to_x[i]
            } else {
                gadget.var_to_y[i]
            }
        })
        .collect())
}
