use thiserror::Error;

/// Unified error type. `exit_code` fixes the process-level contract:
/// 1 = a checked mathematical statement failed, 2 = bad input or usage,
/// 3 = capacity / regime / feasibility limits.
#[derive(Debug, Error)]
pub enum Error {
    /// Out-of-range parameters or violated call contracts.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Unparseable file content or rational syntax.
    #[error("parse error: {0}")]
    Parse(String),
    /// The dense representation would exceed the configured cap.
    #[error("capacity exceeded: {needed} vertices > cap {cap} (raise with ISO_CAP)")]
    Capacity { needed: u128, cap: u64 },
    /// Inputs outside the regime where the checked statement applies.
    #[error("outside applicable regime: {0}")]
    Regime(String),
    /// A minimum was requested over an empty family.
    #[error("empty domain: {0}")]
    EmptyDomain(String),
    /// An enumeration was aborted by the node guard.
    #[error("enumeration guard tripped after {visited} nodes (limit {limit})")]
    NodeGuard { visited: u64, limit: u64 },
    /// A checked mathematical statement failed; the message carries evidence.
    #[error("verification violation: {0}")]
    Violation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Violation(_) => 1,
            Error::InvalidInput(_) | Error::Parse(_) | Error::Io(_) => 2,
            Error::Capacity { .. }
            | Error::Regime(_)
            | Error::EmptyDomain(_)
            | Error::NodeGuard { .. } => 3,
        }
    }
}
