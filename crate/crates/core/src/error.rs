use thiserror::Error;

/// Errors raised by the word calculus, the subshift engine and the
/// dimension pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An operation was applied outside its domain (e.g. `prime` of an
    /// all-zero word, `f` of a word ending in 0).
    #[error("domain error: {0}")]
    Domain(String),

    /// A word could not be split into blocks of the substitution alphabet.
    #[error("decode error: {0}")]
    Decode(String),

    /// A configured resource cap (window length, enumeration size) was hit.
    #[error("resource limit: {0}")]
    Resource(String),

    /// An iteration did not reach the requested tolerance. The best
    /// enclosure found so far is carried along.
    #[error("no convergence: {message} (best enclosure [{lower}, {upper}])")]
    Convergence {
        message: String,
        lower: f64,
        upper: f64,
    },

    /// Two results that theory says must agree did not (e.g. overlapping
    /// plateaus with different representatives).
    #[error("consistency error: {0}")]
    Consistency(String),

    /// Textual input did not parse.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
