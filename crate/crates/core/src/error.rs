use invlfp_linalg::{LpError, SolveError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValidationError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("target basis is singular: {0}")]
    SingularTargetBasis(String),
    #[error("form mismatch: {0}")]
    FormMismatch(String),
    #[error("invalid target: {0}")]
    InvalidTarget(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { message: String, line: usize, column: usize },
    #[error("size guard: search needs more than {budget} candidate systems ({what})")]
    SizeGuard { what: String, budget: u64 },
    #[error("parameter x violates X at row {0}")]
    XViolation(usize),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("the face induced by the active set is empty")]
    EmptyFace,
    #[error("the set is empty")]
    EmptySet,
    #[error("certificate does not match target, scenario or form: {0}")]
    IncompatibleCertificate(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    Linear(#[from] SolveError),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
