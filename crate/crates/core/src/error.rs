use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fractions {left} and {right} are not compatible (|ad - bc| != 1)")]
    Incompatible { left: String, right: String },

    #[error("expected {left} < {right}")]
    Order { left: String, right: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource guard exceeded: {0}")]
    Resource(String),

    #[error("sequence is not a principal kneading sequence: {0}")]
    Shape(String),

    #[error("modality mismatch: {left} vs {right}")]
    ModalityMismatch { left: u32, right: u32 },

    #[error("twisted comparison undecidable: {0}")]
    Undecidable(String),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("power series inverse needs a unit constant term, found {0}")]
    NonUnitConstant(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("permutation parameters (n={n}, k={k}) are not admissible")]
    Admissibility { n: usize, k: usize },

    #[error("orbit failed to close: {0}")]
    ClosureFailure(String),

    #[error("root certification failed: {0}")]
    Certification(String),

    #[error("exact division failed: {0}")]
    ExactDivision(String),

    #[error("algebraic expressions have different bases")]
    BaseMismatch,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("identity `{identity}` violated for m={m}, q={q}: lhs={lhs}, rhs={rhs}")]
    IdentityViolation {
        identity: String,
        m: u32,
        q: String,
        lhs: String,
        rhs: String,
    },
}
