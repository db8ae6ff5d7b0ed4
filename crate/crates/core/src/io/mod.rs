//! Text formats for implication bases and CNF/DNF formulas.
//!
//! Grammars are documented in `docs/formats.md`.

mod basis_doc;
mod formula_doc;

pub use basis_doc::{is_valid_label, parse_basis, serialize_basis};
pub use formula_doc::{parse_formula, serialize_formula};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown element `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error("line {line}: implication has an empty conclusion")]
    EmptyConclusion { line: usize },
    #[error("header: duplicate element `{label}`")]
    DuplicateElement { label: String },
    #[error("line {line}: literal {literal} is out of range for {num_vars} variables")]
    LiteralOutOfRange {
        line: usize,
        literal: i64,
        num_vars: usize,
    },
    #[error("header declares {expected} clauses, found {found}")]
    ClauseCountMismatch { expected: usize, found: usize },
    #[error("line {line}: empty clause")]
    EmptyClause { line: usize },
}
