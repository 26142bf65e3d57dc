//! Exact combinatorics and fidelity laws for optimal quantum purity
//! amplification (QPA).
//!
//! Finite-`n` quantities are computed with arbitrary-precision rationals.
//! The [`asymptotics`] module works in `f64`.
//!
//! Index conventions: row labels, target indices `k` and terminal indices
//! follow the 1-based convention of the underlying math; plain slices are
//! 0-based as usual.

pub mod asymptotics;
pub mod error;
pub mod fidelity;
pub mod gyd;
pub mod protocol;
pub mod rational;
pub mod scalar;
pub mod spectrum;
pub mod tableaux;
pub mod verify;

pub use error::{QpaError, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use protocol::RemovalVector;
pub use scalar::Scalar;
pub use spectrum::Spectrum;
pub use tableaux::{GtPattern, YoungDiagram};
