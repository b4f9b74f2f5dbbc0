use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands come from different coefficient fields: {0}")]
    MixedFields(String),
    #[error("polynomials belong to different pairing contexts")]
    MixedContext,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inconsistent context: {0}")]
    ContextInconsistent(String),
    #[error("operation requires arity {expected}, context has {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("arity {0} is too large for the brute-force solver")]
    ArityTooLarge(usize),
    #[error("word of length {0} exceeds the coproduct limit of {max}", max = crate::freealg::MAX_WORD_LEN)]
    WordTooLong(usize),
    #[error("braided coproduct is only defined on polynomials without group prefixes")]
    GroupPrefixPresent,
    #[error("polynomial is not homogeneous in the group grading")]
    NotGroupHomogeneous,
    #[error("polynomial is not a semi-invariant (monomials carry different weights)")]
    NotSemiInvariant,
    #[error("variable x{0} does not occur in the polynomial")]
    VariableAbsent(usize),
    #[error("polynomial is not left primitive with respect to x1; obstruction: {0}")]
    NotLeftPrimitive(String),
    #[error("root-of-unity search is unbounded for this value")]
    UnboundedSearch,
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("constructed polynomial failed its primitivity re-check: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
