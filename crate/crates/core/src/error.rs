use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operands live on different bases or generator spaces")]
    BasisMismatch,

    #[error("bosonic occupation at mode {mode} would exceed the cap {cap}")]
    OccupationOverflow { mode: usize, cap: u32 },

    #[error("field is not divergence-free: |div| / |field| = {norm:.3e}")]
    NotTransverse { norm: f64 },

    #[error("zero-wavevector component {frac:.3e} exceeds {threshold:.3e}; Good construction is singular at k = 0")]
    ZeroModeOccupied { frac: f64, threshold: f64 },

    #[error("top-of-band mode occupation {frac:.3e} exceeds threshold {threshold:.3e}")]
    TopModeOccupied { frac: f64, threshold: f64 },

    #[error("boost speed must satisfy |v| < c")]
    SuperluminalBoost,

    #[error("cannot excite an already-empty negative-energy mode")]
    EmptySeaMode,

    #[error("occupation {occupation} at mode {mode} is not representable at Hermite depth {depth}")]
    HermiteDepthExceeded {
        mode: usize,
        occupation: u32,
        depth: usize,
    },

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("malformed data: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
