use thiserror::Error;

use crate::qseries::{Exponent, Rational};

/// Failures of the series kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("operation needs a leading term but the series is empty")]
    EmptySeries,
    #[error("square root needs an even lead exponent, got q^{{{0}}}")]
    OddLeadExponent(Exponent),
    #[error("leading coefficient {0} is not the square of a rational")]
    NonSquareLeadCoefficient(Rational),
    #[error("q -> -q is undefined at the fractional exponent {0}")]
    NonIntegerExponent(Exponent),
    #[error("coefficient of q^{{{exponent}}} requested, series is only valid below q^{{{valid_to}}}")]
    BeyondTruncation { exponent: Exponent, valid_to: Exponent },
    #[error("an exact multi-term series has no finite inverse or root")]
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("symbol `{0}` is not bound")]
    UnboundSymbol(String),
    #[error("cannot parse expression `{expr}`: {reason}")]
    Parse { expr: String, reason: String },
    #[error("n-th roots are not available on series (in `{0}`)")]
    RootInSeries(String),
    #[error("`{0}` is a numeric-mode identity")]
    WrongMode(String),
    #[error("`{0}` has no ambiguity slots to resolve")]
    NoSignSlots(String),
    #[error("`{0}` has unresolved ambiguity slots")]
    UnresolvedSigns(String),
    #[error("even root of a negative value")]
    NegativeRadicand,
    #[error("division by zero")]
    DivisionByZero,
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("series tail bound {bound:e} is too large for a meaningful comparison")]
    TailBoundTooLarge { bound: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
