use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: u32, strands: usize },

    #[error("strand count must be at least 2, got {0}")]
    InvalidStrands(usize),

    #[error("this operation is defined on {required} strands, got {got}")]
    UnsupportedStrands { got: usize, required: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("handle reduction exceeded its budget of {budget} steps")]
    BudgetExceeded { budget: u64 },

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("no structure constants reproduce [{gamma}, {delta}]")]
    NoSolution { gamma: String, delta: String },

    #[error("parameter {0} cannot be realized as an integer power in this target")]
    NonIntegerParameter(String),

    #[error("equality engines disagree on {0}")]
    EngineDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
