use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("missing value for parameter `{0}`")]
    MissingParameter(String),
    #[error("{0}")]
    DenominatorVanishes(String),
    #[error("operation needs parameter-free (rational) entries")]
    ParametricEntries,
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("not a 3-Lie algebra: {0}")]
    NotAThreeLie(String),
    #[error("not a representation: {0}")]
    NotARepresentation(String),
    #[error("not a generalized representation: {0}")]
    NotAGenRep(String),
    #[error("cochain does not lie in the V-valued, non-pure-V subcomplex: {0}")]
    NotInCGreater(String),
    #[error("incompatible cochain signature: {0}")]
    IncompatibleSignature(String),
    #[error("the algebra is not perfect (derived dimension {derived} < {dim})")]
    NotPerfect { derived: usize, dim: usize },
    #[error("not an abelian-extension shape: {0}")]
    NotAnExtensionShape(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
