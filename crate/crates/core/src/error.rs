use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },

    #[error("axiom `{axiom}` fails for operation `{operation}` on basis triple {triple:?}; defect {defect}")]
    AxiomViolation {
        axiom: String,
        operation: String,
        triple: Vec<String>,
        defect: String,
    },

    #[error("weight grading violated: {0}")]
    Weight(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("d∘d ≠ 0 in degree {degree}")]
    NotAComplex { degree: i64 },

    #[error("operator does not commute with the differential in degree {degree}")]
    NonCommuting { degree: i64 },

    #[error("eigenspaces span {found} of {expected} dimensions in degree {degree}")]
    EigenspacesDoNotSpan {
        degree: i64,
        found: usize,
        expected: usize,
    },

    #[error("subspace in degree {degree} is not preserved by the differential")]
    NotInvariant { degree: i64 },

    #[error("differential raises filtration level in degree {degree}")]
    FiltrationViolated { degree: i64 },

    #[error("non-integer coefficient {value} at arity {arity}")]
    NonInteger { arity: usize, value: String },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
