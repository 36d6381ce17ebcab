use thiserror::Error;

/// Errors raised by the series, array and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ZeroConstantTerm: constant coefficient of {0} is zero")]
    ZeroConstantTerm(&'static str),

    #[error("OrderMismatch: divisor has x-order {divisor} but dividend has a nonzero coefficient at x^{dividend}")]
    OrderMismatch { divisor: usize, dividend: usize },

    #[error("ZeroDivisor: divisor is zero up to its truncation order")]
    ZeroDivisor,

    #[error("InnerOrderZero: inner series of a composition must have zero constant term")]
    InnerOrderZero,

    #[error("NotInvertible: series needs w_0 = 0 and w_1 != 0 for a compositional inverse")]
    NotInvertible,

    #[error("NotHadamardUnit: coefficient {index} is zero")]
    NotHadamardUnit { index: usize },

    #[error("UnknownName: {0}")]
    UnknownName(String),

    #[error("InsufficientTruncation: need order {needed}, have {available}")]
    InsufficientTruncation { needed: usize, available: usize },

    #[error("NotProper: f_0 is zero")]
    NotProper,

    #[error("NotRiordan: reconstruction differs at row {row}, column {col}")]
    NotRiordan { row: usize, col: usize },

    #[error("ZeroDiagonal: diagonal entry {index} is zero")]
    ZeroDiagonal { index: usize },

    #[error("LengthMismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("ZeroParameter: {0} must be nonzero")]
    ZeroParameter(&'static str),

    #[error("NonzeroConstantTerm: delta operator series must have zero constant term")]
    NonzeroConstantTerm,

    #[error("UnknownCase: {0}")]
    UnknownCase(String),

    #[error("UnknownFamily: {0}")]
    UnknownFamily(String),

    #[error("MalformedTriangle: row {row} has {len} entries, expected {expected}")]
    MalformedTriangle { row: usize, len: usize, expected: usize },

    #[error("CheckFailed: {0}")]
    CheckFailed(String),

    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// Variant name, used as the error tag on the CLI diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroConstantTerm(_) => "ZeroConstantTerm",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::InnerOrderZero => "InnerOrderZero",
            Error::NotInvertible => "NotInvertible",
            Error::NotHadamardUnit { .. } => "NotHadamardUnit",
            Error::UnknownName(_) => "UnknownName",
            Error::InsufficientTruncation { .. } => "InsufficientTruncation",
            Error::NotProper => "NotProper",
            Error::NotRiordan { .. } => "NotRiordan",
            Error::ZeroDiagonal { .. } => "ZeroDiagonal",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::ZeroParameter(_) => "ZeroParameter",
            Error::NonzeroConstantTerm => "NonzeroConstantTerm",
            Error::UnknownCase(_) => "UnknownCase",
            Error::UnknownFamily(_) => "UnknownFamily",
            Error::MalformedTriangle { .. } => "MalformedTriangle",
            Error::CheckFailed(_) => "CheckFailed",
            Error::Parse(_) => "Parse",
        }
    }

    /// True for errors caused by malformed input rather than by the mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::UnknownName(_)
                | Error::UnknownFamily(_)
                | Error::UnknownCase(_)
                | Error::Parse(_)
                | Error::MalformedTriangle { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
