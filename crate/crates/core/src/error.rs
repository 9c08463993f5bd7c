use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible Cartan type {family}{rank}")]
    InadmissibleType { family: char, rank: usize },

    #[error("cannot parse Cartan type from {0:?}")]
    UnparseableType(String),

    #[error("{0} is neither 0 nor a prime")]
    NotPrime(u64),

    #[error("characteristic {p} is bad for {ctype}")]
    BadCharacteristic { p: u64, ctype: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("node set must be a proper subset of the extended diagram")]
    FullExtendedSet,

    #[error("no auxiliary prime below {bound} realizes wall set {nodes}")]
    SearchExhausted { bound: u64, nodes: String },

    #[error("budget of {budget} exceeded while {context}")]
    BudgetExceeded { budget: u64, context: String },

    #[error("unrecognized class fingerprint {orders:?} for diagram {diagram}")]
    UnrecognizedFingerprint { orders: Vec<i64>, diagram: String },

    #[error("invariant violated: {0}")]
    Invariant(String),
}
