//! Exact and high-precision positivity analysis for special matrices.
//!
//! The crate builds the classical families connected to the beta function and
//! to set-partition combinatorics — beta, Pascal, Cauchy, Stirling (both
//! kinds, plain and symmetrized), Bell–Hankel and gamma-kernel matrices —
//! entirely over arbitrary-precision rationals or configurable-precision
//! binary floats. On top of the constructors it provides:
//!
//! - exact factorizations: fraction-free determinants, inverses, radical-free
//!   `Z·diag(d)·Zᵀ` congruences, and successive elementary bidiagonal
//!   (Neville) factorizations, together with the known closed forms for the
//!   beta and Stirling families;
//! - decision procedures with witness reports for positive (semi)definiteness,
//!   total positivity/nonnegativity, triangular total positivity, and
//!   sampled/sufficient criteria for infinite divisibility.
//!
//! Start with the runnable programs under `examples/`; each one walks through
//! a major capability. The `totpos` binary exposes the same operations as
//! subcommands (`gen`, `det`, `inv`, `ldl`, `seb`, `check`, `infdiv`,
//! `reproduce`).

pub mod combinatorics;
pub mod error;
pub mod factor;
pub mod families;
pub mod io;
pub mod matrix;
pub mod numerics;
pub mod positivity;
pub mod reproduce;

pub mod cli;

pub use error::Error;
pub use matrix::{IndexOffset, Matrix};
pub use numerics::{HpReal, Rational};

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
