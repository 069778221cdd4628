//! Error type shared by every module of the kernel.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at p = {p}, q = {q}")]
    PoleAtPoint { p: String, q: String },
    #[error("`{dividend}` is not divisible by `{divisor}`")]
    NotDivisible { dividend: String, divisor: String },
    #[error("endomorphism t -> {0} is not invertible")]
    NotInvertible(String),
    #[error("tau and sigma coincide; use the (sigma, sigma) context")]
    EqualMorphisms,
    #[error("invalid gcd `{g}`: {reason}")]
    InvalidGcd { g: String, reason: String },
    #[error("`{0}` is not a unit of the Laurent ring")]
    NotAUnit(String),
    #[error("condition `{condition}` fails at {witness}")]
    ConditionsFailed { condition: String, witness: String },
    #[error("hypothesis `{hypothesis}` fails at {witness}")]
    HypothesisViolated { hypothesis: String, witness: String },
    #[error("not a weak morphism: brackets are not intertwined at {witness}")]
    NotWeakMorphism { witness: String },
    #[error("generator {0} lies outside the tabulated window")]
    WindowExceeded(String),
    #[error("cocycle condition fails at triple {0}")]
    CocycleConditionFailed(String),
    #[error("cocycle has a pole at the specialization (n = {n})")]
    PoleAtSpecialization { n: i64 },
    #[error("bracket leaves the span of the basis: residue {0}")]
    ClosureResidue(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
