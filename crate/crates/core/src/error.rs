use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("insufficient symbols: need {needed}, got {got}")]
    InsufficientSymbols { needed: usize, got: usize },

    #[error("input too short: need at least {needed} samples, got {got}")]
    TooShort { needed: usize, got: usize },

    #[error("received signal has zero power")]
    ZeroPower,

    #[error("non-finite sample at index {0}")]
    NonFinite(usize),

    #[error("no closed form available for {0}")]
    UnsupportedScheme(String),

    #[error("degenerate training data: {0}")]
    DegenerateData(String),

    #[error("anchor SNR {0} dB not present in the dataset")]
    MissingAnchor(f64),

    #[error("config error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
