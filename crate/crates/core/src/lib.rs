pub mod catalog;
pub mod cli;
pub mod error;
pub mod expr;
pub mod numeric;
pub mod qseries;
pub mod verifier;

pub use error::{Error, Result, SeriesError};
pub use expr::Expr;
pub use qseries::{Exponent, QSeries, Rational};
