use thiserror::Error;

/// Errors raised by the combinatorics engine.
///
/// The variants map one-to-one onto the CLI exit codes (see [`Error::exit_code`]).
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("capability error: {0}")]
    Capability(String),
    #[error("bound exceeded: {what} has size {size}, cap is {cap}")]
    Bound {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("root subset is not closed: {0}")]
    NotClosed(String),
    #[error("Weyl element does not map the root subset into the positive roots")]
    NotInWPsi,
    #[error("character and datum disagree: {0}")]
    DatumMismatch(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Usage(_) | Error::Parse(_) | Error::Json(_) => 2,
            Error::NotClosed(_) | Error::NotInWPsi | Error::DatumMismatch(_) => 2,
            Error::Capability(_) => 3,
            Error::Bound { .. } => 4,
            Error::Io(_) => 2,
        }
    }

    /// Short machine-readable tag used in one-line diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Config(_) => "config",
            Error::Usage(_) => "usage",
            Error::Parse(_) | Error::Json(_) => "parse",
            Error::Capability(_) => "capability",
            Error::Bound { .. } => "bound",
            Error::NotClosed(_) => "not_closed",
            Error::NotInWPsi => "not_in_w_psi",
            Error::DatumMismatch(_) => "datum_mismatch",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
