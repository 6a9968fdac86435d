use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for an ordinal of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid segment [{start}, {end}) for an ordinal of length {len}")]
    InvalidSegment { start: usize, end: usize, len: usize },
    #[error("not a permutation of 0..{len}")]
    NotAPermutation { len: usize },
    #[error("not tree-like: the elements after {index} lie on both sides of it")]
    NotTreeLike { index: usize },
    #[error("sign values must be 1 or -1, got {0}")]
    InvalidSign(i64),
    #[error("truncation caps differ ({left} vs {right})")]
    CapMismatch { left: usize, right: usize },
    #[error("duplicate variable {0}")]
    DuplicateVariable(String),
    #[error("no substitution given for variable {0}")]
    MissingSubstitution(String),
    #[error("substitution for {0} has a non-zero constant term")]
    NonZeroConstantTerm(String),
    #[error("expected constant term {expected}, found {found}")]
    WrongConstantTerm { expected: String, found: String },
    #[error("zero constant term: series is not invertible")]
    NotInvertible,
    #[error("index orders of the two families differ")]
    OrderMismatch,
    #[error("zero or indeterminate series")]
    ZeroOrIndeterminate,
    #[error("series is not positive")]
    NotPositive,
    #[error("non-representable coefficient power")]
    NonRepresentablePower,
    #[error("not of the form x + o(x): {0}")]
    NotInT(String),
    #[error("indeterminate: refine floor")]
    Indeterminate,
    #[error("scale exponent {0} must be < 1")]
    ExponentTooLarge(String),
    #[error("decomposition exponents stopped decreasing at step {0}")]
    NotDecreasing(usize),
    #[error("iteration cap {0} reached before convergence")]
    IterationCap(usize),
    #[error("malformed decomposition: {0}")]
    MalformedDecomposition(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
