//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the mathematical domain of an operation
    /// (non-positive gamma argument, log of a non-positive entry, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Matrix shapes do not line up for the requested operation.
    #[error("dimension mismatch in {op}: {details}")]
    Dimension { op: &'static str, details: String },

    /// An index (row, column, factor index, ...) is out of range.
    #[error("index out of range: {0}")]
    IndexRange(String),

    /// A pivot vanished during exact elimination; `stage` is the 1-based
    /// elimination step at which the matrix turned out singular.
    #[error("singular matrix: zero pivot at elimination stage {stage}")]
    Singular { stage: usize },

    /// Neville elimination hit a zero pivot with a nonzero entry below it.
    #[error("not factorizable by Neville elimination: zero pivot above row {row} in column {col}")]
    NevilleBreakdown { row: usize, col: usize },

    /// A structural precondition failed (non-symmetric, non-Hankel,
    /// non-triangular input to a check that requires it).
    #[error("structure error: {0}")]
    Structure(String),

    /// Text could not be parsed as a scalar or matrix; row/col are 1-based
    /// when the failure is inside tabular data.
    #[error("parse error{}: {msg}", location.as_ref().map(|(r, c)| format!(" at row {r}, column {c}")).unwrap_or_default())]
    Parse {
        location: Option<(usize, usize)>,
        msg: String,
    },

    /// I/O failure while reading or writing a matrix or report file.
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse {
            location: None,
            msg: msg.into(),
        }
    }

    pub fn parse_at(row: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            location: Some((row, col)),
            msg: msg.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
