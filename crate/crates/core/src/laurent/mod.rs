//! Exact arithmetic in `Z[s^±, q^±]` where `s` stands for `q^alpha`.

mod charged;
mod coeff;
mod gcd;
mod poly;
mod ratfunc;
mod serial;

pub use charged::ChargedLaurent;
pub use coeff::Coeff;
pub use gcd::{gcd, normalize};
pub use poly::{curly, LaurentPoly, Mono};
pub use ratfunc::{curly_rat, mono_rat, qint, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("division is not exact in the Laurent ring")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot halve an odd exponent")]
    OddExponent,
    #[error("charges differ: {left} vs {right}")]
    ChargeMismatch { left: i32, right: i32 },
}
