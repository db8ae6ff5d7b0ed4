use thiserror::Error;

/// Errors raised by the model, the exhaustive solvers, and the reduction builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set must contain at least one element")]
    EmptyGroundSet,
    #[error("ground set has {0} elements, at most {max} are supported", max = crate::model::MAX_ELEMENTS)]
    GroundSetTooLarge(usize),
    #[error("element labels must be nonempty")]
    EmptyLabel,
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownLabel(String),
    #[error("implication {index} has an empty conclusion")]
    EmptyConclusion { index: usize },
    #[error("element set does not belong to this ground set")]
    GroundSetMismatch,
    #[error("instance of size {size} exceeds the exhaustive-search cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("raising the subset cap to {0} requires an explicit acknowledgment")]
    CapNotAcknowledged(usize),
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("formula must have at least one variable")]
    NoVariables,
    #[error("formula must have at least one clause")]
    NoClauses,
    #[error("clause {index} is empty")]
    EmptyClause { index: usize },
    #[error("literal {literal} is out of range for {num_vars} variables")]
    LiteralOutOfRange { literal: i64, num_vars: usize },
    #[error("implication {index} violates the lift precondition: {reason}")]
    PreconditionViolated { index: usize, reason: LiftViolation },
    #[error("optimum basis does not have the expected lifted shape: {0}")]
    ShapeViolation(String),
    #[error("construction needs at least 2 variables, formula has {0}")]
    TooFewVariables(usize),
    #[error("assignment satisfies clause {clause}")]
    NotFalsifying { clause: usize },
}

/// Which standing assumption of the convex-geometry lift an implication breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftViolation {
    EmptyBasis,
    EmptyPremise,
    EmptyConclusion,
    OverlappingSides,
}

impl std::fmt::Display for LiftViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            LiftViolation::EmptyBasis => "basis has no implications",
            LiftViolation::EmptyPremise => "premise is empty",
            LiftViolation::EmptyConclusion => "conclusion is empty",
            LiftViolation::OverlappingSides => "premise and conclusion intersect",
        };
        f.write_str(text)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
