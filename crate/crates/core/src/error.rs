use thiserror::Error;

use crate::exactnum::NumError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("total degree {degree} exceeds the degree cap {cap} (raise it with --degree-cap)")]
    DegreeCapExceeded { degree: u64, cap: u32 },
    #[error("map is not unimodular: Jacobian is {0}")]
    NotUnimodular(String),
    #[error("not a polynomial automorphism: degree reduction stalls at {0}")]
    NotAnAutomorphism(String),
    #[error("element lies in the common subgroup U")]
    InU,
    #[error("element lies in neither A nor B")]
    NotInFactor,
    #[error("element is of elementary type, not Hénon type")]
    NotHenon,
    #[error("no Hénon form over Q(i): {0}")]
    NoHenonForm(String),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error("malformed scalar literal {0:?}")]
    BadLiteral(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
}

impl Error {
    /// Stable numeric code, shared by the CLI and the C interface.
    pub fn code(&self) -> i32 {
        match self {
            Error::DivisionByZero => 1,
            Error::DegreeCapExceeded { .. } => 2,
            Error::NotUnimodular(_) => 3,
            Error::NotAnAutomorphism(_) => 4,
            Error::InU => 5,
            Error::NotInFactor => 6,
            Error::NotHenon => 7,
            Error::NoHenonForm(_) => 8,
            Error::Syntax { .. } => 9,
            Error::Semantic(_) => 10,
            Error::BadLiteral(_) => 11,
            Error::InvalidWord(_) => 12,
        }
    }

    /// Short kebab-case name matching [`Error::code`].
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division-by-zero",
            Error::DegreeCapExceeded { .. } => "degree-cap-exceeded",
            Error::NotUnimodular(_) => "not-unimodular",
            Error::NotAnAutomorphism(_) => "not-an-automorphism",
            Error::InU => "in-u",
            Error::NotInFactor => "not-in-factor",
            Error::NotHenon => "not-henon",
            Error::NoHenonForm(_) => "no-henon-form",
            Error::Syntax { .. } => "syntax",
            Error::Semantic(_) => "semantic",
            Error::BadLiteral(_) => "bad-literal",
            Error::InvalidWord(_) => "invalid-word",
        }
    }
}

impl From<NumError> for Error {
    fn from(e: NumError) -> Self {
        match e {
            NumError::DivisionByZero => Error::DivisionByZero,
            NumError::DegreeCapExceeded { degree, cap } => Error::DegreeCapExceeded { degree, cap },
            NumError::BadLiteral(s) => Error::BadLiteral(s),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
