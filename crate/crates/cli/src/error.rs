use thiserror::Error;
use ucomp_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization: {0}")]
    Serialize(String),
}

impl CliError {
    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }

    /// 0 success, 1 usage, 2 verification failure, 3 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Verification(_) | CliError::Serialize(_) => 2,
            CliError::Core(e) => match e {
                CoreError::BudgetExceeded { .. } => 3,
                CoreError::InadmissibleType { .. }
                | CoreError::UnparseableType(_)
                | CoreError::NotPrime(_)
                | CoreError::BadCharacteristic { .. }
                | CoreError::DimensionMismatch { .. }
                | CoreError::FullExtendedSet => 1,
                CoreError::SearchExhausted { .. }
                | CoreError::UnrecognizedFingerprint { .. }
                | CoreError::Invariant(_) => 2,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
