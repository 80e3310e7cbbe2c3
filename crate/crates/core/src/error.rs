//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by series, polynomial, table and engine operations.
///
/// The variants map onto the CLI exit-code contract: `Usage` is a caller
/// mistake (exit 2), `Horizon` is a precision budget failure (exit 3), and
/// the remaining variants indicate a falsified or uncheckable claim
/// (exit 1 via a failed certificate).
#[derive(Debug, Error)]
pub enum CoreError {
    /// Operation preconditions violated by the caller.
    #[error("usage error: {0}")]
    Usage(String),

    /// A series inversion would leave the integers.
    #[error("integrality error: leading coefficient {lead} at q^{val} is not a unit")]
    Integrality { lead: String, val: i64 },

    /// A requested precision exceeds the configured global horizon cap.
    #[error("horizon error: requested precision {requested} exceeds cap {cap}")]
    Horizon { requested: i64, cap: i64 },

    /// A finite-order series comparison found a mismatch.
    #[error("certification error in {claim}: first mismatch at exponent {exponent} (lhs {lhs}, rhs {rhs})")]
    Certification {
        claim: String,
        exponent: i64,
        lhs: String,
        rhs: String,
    },

    /// A structural invariant of a table or iteration step failed.
    #[error("structural error: {0}")]
    Structural(String),

    /// A table does not cover the rows required by an operation.
    #[error("table too short: need rows through {needed}, have {have}")]
    TableTooShort { needed: usize, have: usize },

    /// Underlying I/O failure (cache files, certificate output).
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed persisted data (table cache, certificates).
    #[error("malformed data: {0}")]
    Malformed(String),
}
