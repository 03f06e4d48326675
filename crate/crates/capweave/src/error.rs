//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by graph construction, solvers and the simulator.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is not connected: {0}")]
    NotConnected(String),

    #[error("invalid class profile: {0}")]
    InvalidProfile(String),

    /// No spanning tree realizes the requested per-class edge counts.
    #[error("infeasible class profile: {0}")]
    InfeasibleProfile(String),

    /// A self-inverse class (generator n/2) doubles rotation membership
    /// counts, so the default per-class capacities cannot hold.
    #[error(
        "self-inverse class {generator} needs capacity {required} per edge \
         but only {capacity} is available; pass a capacity override to proceed"
    )]
    SelfInverseCapacity {
        generator: usize,
        required: u32,
        capacity: u32,
    },

    #[error("search space too large: {0}")]
    TooLarge(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Capacity for the requested edge-dimension pair is exhausted.
    #[error("blocked: {0}")]
    Blocked(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::NotConnected(_) => "not-connected",
            Error::InvalidProfile(_) => "invalid-profile",
            Error::InfeasibleProfile(_) => "infeasible-profile",
            Error::SelfInverseCapacity { .. } => "self-inverse-capacity-violation",
            Error::TooLarge(_) => "too-large",
            Error::InvalidConfig(_) => "invalid-config",
            Error::InvalidState(_) => "invalid-state",
            Error::Blocked(_) => "blocked",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
