use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("morphism is not well defined: {0}")]
    IllDefinedMorphism(String),
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("expected {expected} variables, found {found}")]
    WrongVariableCount { expected: usize, found: usize },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("module is not psi-nilpotent")]
    NotNilpotent,
    #[error("module is not torsion free")]
    NotTorsionFree,
    #[error("search bound {bound} exceeded")]
    BoundExceeded { bound: usize },
    #[error("filtration invariant violated: {0}")]
    InvalidFiltration(String),
    #[error("grading inconsistent with presentation: {0}")]
    InvalidGrading(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// Errors arising from malformed text or JSON input, as opposed to
    /// well-formed input that describes an invalid object.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
