//! Scalar kinds: exact rationals and high-precision binary reals, plus the
//! gamma and reciprocal-beta functions on the latter.

mod gamma;
mod rational;
mod real;

pub use gamma::{beta_recip_hp, gamma_hp};
pub use rational::{
    format_rational, format_rational_plain, parse_rational, rational_from_decimal, Rational,
};
pub use real::{HpReal, Sign3, MIN_PRECISION};
