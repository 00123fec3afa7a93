use num_rational::BigRational;
use thiserror::Error;

use crate::algebra::format_rational;

/// Errors raised by the exact-arithmetic layer, the catalog and the
/// threefold formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("division by the zero rational function")]
    DivisionByZeroFunction,
    #[error("pole at w = {}", format_rational(.0))]
    Pole(BigRational),
    #[error("pole at w=1")]
    PoleAtOne,
    #[error("no power series at 0")]
    NoSeriesAtZero,
    #[error("invalid A-D-E type: {0}")]
    InvalidType(String),
    #[error("resolution graph for {ty} failed validation: {failures}")]
    Validation { ty: String, failures: String },
    #[error("invalid threefold specification: {0}")]
    InvalidSpec(String),
    #[error("cannot parse {what} from {token:?}: {reason}")]
    Parse {
        what: &'static str,
        token: String,
        reason: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
