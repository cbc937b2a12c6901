use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NonPrime(u64),
    #[error("modulus polynomial {0:?} is not monic irreducible of the requested degree")]
    ReducibleModulus(Vec<u32>),
    #[error("field of size {0} exceeds the supported cap")]
    UnsupportedSize(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("bad field spec {0:?}")]
    BadFieldSpec(String),

    #[error("ambient dimensions or fields differ")]
    AmbientMismatch,
    #[error("malformed matrix text: {0}")]
    MatrixFormat(String),

    #[error("parse error at byte {position}: expected {expected}")]
    Parse { position: usize, expected: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("coset enumeration exceeded {0} cosets")]
    CosetBudgetExceeded(usize),
    #[error("coset enumeration did not complete")]
    IncompleteEnumeration,
    #[error("group order {0} exceeds the construction cap")]
    OrderCapExceeded(usize),
    #[error("unknown group preset {0:?}")]
    UnknownPreset(String),
    #[error("group table violates the group axioms: {0}")]
    InvalidGroup(String),

    #[error("elements or ideals belong to different algebras")]
    ContextMismatch,
    #[error("group is not a p-group for the field characteristic")]
    NotAPGroup,
    #[error("field characteristic does not match")]
    CharMismatch,

    #[error("subspace is not a right ideal")]
    NotARightIdeal,
    #[error("enumeration of {needed} codewords exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("ideal side does not match the requested side")]
    SideMismatch,
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
    #[error("experiment exceeds desk scale: {0}")]
    ScaleExceeded(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
