//! High-precision evaluation of Hurwitz zeta values at rational points,
//! Catalan's constant and the alternating sums
//! `M_k^{(m,i)} = Σ_{j≥0} (-1)^j / (mj+i)^k`
//! through their Euler-transformed series.
//!
//! The transformed series converge like `2^{-n}`; their coefficients are
//! generalized harmonic numbers and normalized finite differences, which the
//! [`exact`] module computes as exact rationals so every recursion can be
//! checked against its brute-force definition.
//!
//! Layout:
//!
//! - [`exact`]: rationals, harmonic numbers, the difference tables, Bernoulli and Euler numbers.
//! - [`precision`]: [`BigReal`], decimal I/O and the tail-certified summation engine.
//! - [`accel`]: the accelerated evaluators (`M_k`, eta, zeta, Catalan, Hurwitz).
//! - [`genfun`]: generating functions of the harmonic numbers and of eta values.
//! - [`closed`]: Bernoulli/Euler closed forms used as references.
//! - [`check`]: numerical identity checks and the suite behind `eulerzeta check`.

pub mod accel;
pub mod check;
pub mod closed;
mod error;
pub mod exact;
pub mod genfun;
pub mod precision;

pub use accel::RationalArgument;
pub use check::Check;
pub use error::{Error, Result};
pub use exact::Rational;
pub use precision::{BigReal, PrecisionConfig, SeriesResult};
