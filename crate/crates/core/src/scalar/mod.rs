//! Base fields, sparse polynomials and the Laurent towers `F((t₁))…((tₙ))`.

pub mod field;
pub mod gamma;
pub mod integer;
pub mod laurent;
pub mod parse;
pub mod poly;

pub use field::{BaseField, Fp, Rational};
pub use gamma::GammaValue;
pub use laurent::{LaurentScalar, SquareClass};
pub use parse::{parse_scalar, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("{0}: zero input")]
    ZeroInput(&'static str),
    #[error("residue requires valuation 0, got {0}")]
    NonZeroValuation(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot factor {value}: no factor found below bound {bound}")]
    FactorBound { value: String, bound: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
}
