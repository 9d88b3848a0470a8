use thiserror::Error;

use crate::exact::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("matrix is singular (|det| = {det:e})")]
    SingularMatrix { det: f64 },

    #[error("degenerate regime: {0}")]
    DegenerateRegime(String),

    #[error("condition {0} does not hold at these parameters")]
    ConditionNotSatisfied(String),

    #[error("contradictory case {0}: s1(1,2) vanishes although the condition holds")]
    ContradictoryCase(String),

    #[error(transparent)]
    Algebra(#[from] AlgebraError),

    #[error("input error: {0}")]
    Input(String),
}
