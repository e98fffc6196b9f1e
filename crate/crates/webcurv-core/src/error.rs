//! Error type shared by the whole kernel.

use alloc::string::String;
use core::fmt;

/// Errors surfaced by kernel operations.
///
/// Construction-time invariant violations (zero denominators, zero forms,
/// mismatched fields) are rejected eagerly so that downstream arithmetic
/// can assume normalized inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live over different number fields.
    FieldMismatch,
    /// Division by zero, zero denominator, or inversion of zero.
    DivisionByZero,
    /// A value violated a documented precondition.
    Precondition(String),
    /// The requested catalog entry is not supported in this build.
    Unsupported(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "operands belong to different number fields"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

/// Shorthand for `Error::Precondition` with formatted text.
#[macro_export]
macro_rules! precondition {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::Error::Precondition(alloc::format!($($arg)*)));
        }
    };
}
