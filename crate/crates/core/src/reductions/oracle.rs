use crate::error::{Error, Result};
use crate::formula::{Assignment, CnfFormula, DnfFormula};

/// Largest variable count the truth-table oracles accept.
pub const TRUTH_TABLE_CAP: usize = 24;

fn check_cap(num_vars: usize) -> Result<()> {
    if num_vars > TRUTH_TABLE_CAP {
        Err(Error::CapExceeded {
            size: num_vars,
            cap: TRUTH_TABLE_CAP,
        })
    } else {
        Ok(())
    }
}

/// Lexicographically least satisfying assignment (`false < true`, variable 1
/// most significant), if any.
pub fn cnf_satisfiable(formula: &CnfFormula) -> Result<Option<Assignment>> {
    check_cap(formula.num_vars())?;
    Ok(Assignment::all(formula.num_vars())
        .find(|a| (0..formula.clauses().len()).all(|j| formula.clause_holds(j, a))))
}

/// Lexicographically least falsifying assignment; `None` means tautology.
pub fn dnf_tautology(formula: &DnfFormula) -> Result<Option<Assignment>> {
    check_cap(formula.num_vars())?;
    Ok(Assignment::all(formula.num_vars())
        .find(|a| !(0..formula.clauses().len()).any(|j| formula.clause_holds(j, a))))
}
