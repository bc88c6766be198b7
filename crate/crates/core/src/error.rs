use thiserror::Error;

/// Errors raised by the library. The CLI maps each variant to an exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Requested size exceeds what an operation can materialize.
    #[error("{op}: n = {n} exceeds the limit n <= {max}")]
    ResourceCap { op: &'static str, n: usize, max: usize },

    /// An argument is outside the operation's domain.
    #[error("{0}")]
    Domain(String),

    /// Malformed graph or polynomial text.
    #[error("parse error: {0}")]
    Parse(String),

    /// `verify` was asked for a claim id it does not know.
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    /// An internal cross-check failed; carries the offending edge mask.
    #[error("invariant violated at mask 0x{mask:X}: {what}")]
    Invariant { what: String, mask: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
