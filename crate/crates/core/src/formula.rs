//! CNF and DNF formulas over variables `1..=n`, and truth assignments.

use std::fmt;

use crate::error::{Error, Result};

/// A signed variable reference: `v` for `a_v`, `-v` for `¬a_v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Literal(i32);

impl Literal {
    pub fn new(value: i32) -> Option<Self> {
        (value != 0).then_some(Self(value))
    }

    pub fn positive(var: usize) -> Self {
        Self(var as i32)
    }

    pub fn negative(var: usize) -> Self {
        Self(-(var as i32))
    }

    /// One-based variable index.
    pub fn var(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn holds(self, assignment: &Assignment) -> bool {
        assignment.get(self.var()) == self.is_positive()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "a{}", self.var())
        } else {
            write!(f, "¬a{}", self.var())
        }
    }
}

/// Validated clause list shared by both normal forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clauses {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl Clauses {
    /// Checks ranges and drops repeated literals inside a clause, keeping first occurrences.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::NoVariables);
        }
        if clauses.is_empty() {
            return Err(Error::NoClauses);
        }
        let mut out = Vec::with_capacity(clauses.len());
        for (index, clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::EmptyClause { index });
            }
            let mut lits: Vec<Literal> = Vec::with_capacity(clause.len());
            for value in clause {
                let lit = Literal::new(value).filter(|l| l.var() <= num_vars).ok_or(
                    Error::LiteralOutOfRange {
                        literal: value as i64,
                        num_vars,
                    },
                )?;
                if !lits.contains(&lit) {
                    lits.push(lit);
                }
            }
            out.push(lits);
        }
        Ok(Self {
            num_vars,
            clauses: out,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    fn check_assignment(&self, assignment: &Assignment) -> Result<()> {
        if assignment.len() == self.num_vars {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.num_vars,
                found: assignment.len(),
            })
        }
    }
}

/// Conjunction of disjunctive clauses.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CnfFormula(Clauses);

/// Disjunction of conjunctive clauses.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DnfFormula(Clauses);

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        Clauses::new(num_vars, clauses).map(Self)
    }

    pub fn num_vars(&self) -> usize {
        self.0.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.0.clauses
    }

    pub fn clause_holds(&self, index: usize, assignment: &Assignment) -> bool {
        self.0.clauses[index].iter().any(|l| l.holds(assignment))
    }

    pub fn evaluate(&self, assignment: &Assignment) -> Result<bool> {
        self.0.check_assignment(assignment)?;
        Ok((0..self.0.clauses.len()).all(|j| self.clause_holds(j, assignment)))
    }
}

impl DnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        Clauses::new(num_vars, clauses).map(Self)
    }

    pub fn num_vars(&self) -> usize {
        self.0.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.0.clauses
    }

    pub fn clause_holds(&self, index: usize, assignment: &Assignment) -> bool {
        self.0.clauses[index].iter().all(|l| l.holds(assignment))
    }

    pub fn evaluate(&self, assignment: &Assignment) -> Result<bool> {
        self.0.check_assignment(assignment)?;
        Ok((0..self.0.clauses.len()).any(|j| self.clause_holds(j, assignment)))
    }

    /// Same clauses over one extra, unused variable.
    pub fn pad_variable(&self) -> Self {
        Self(Clauses {
            num_vars: self.0.num_vars + 1,
            clauses: self.0.clauses.clone(),
        })
    }
}

/// A formula of either normal form, as read from a file.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Formula {
    Cnf(CnfFormula),
    Dnf(DnfFormula),
}

impl Formula {
    pub fn num_vars(&self) -> usize {
        match self {
            Formula::Cnf(f) => f.num_vars(),
            Formula::Dnf(f) => f.num_vars(),
        }
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        match self {
            Formula::Cnf(f) => f.clauses(),
            Formula::Dnf(f) => f.clauses(),
        }
    }
}

/// Truth values for variables `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Self(values)
    }

    /// Value of the one-based variable `var`.
    pub fn get(&self, var: usize) -> bool {
        self.0[var - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    /// The `index`-th assignment in lexicographic order, `false < true`,
    /// variable 1 most significant.
    pub fn from_rank(index: u64, num_vars: usize) -> Self {
        Self(
            (0..num_vars)
                .map(|i| index & (1u64 << (num_vars - 1 - i)) != 0)
                .collect(),
        )
    }

    /// All `2^n` assignments in lexicographic order.
    pub fn all(num_vars: usize) -> impl Iterator<Item = Assignment> {
        assert!(num_vars < 64);
        (0..1u64 << num_vars).map(move |i| Self::from_rank(i, num_vars))
    }
}
