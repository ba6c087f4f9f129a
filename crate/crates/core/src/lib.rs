//! Exact homological algebra for Lie algebras over Z, prime fields and
//! square-zero algebras `F_p[t_1..t_m]/(t_i^2)`.
//!
//! The integer side is generic over the scalar type ([`scalar::IntScalar`]);
//! the aliases below fix the types used throughout the crate.

pub mod algebra;
pub mod derived;
pub mod error;
pub mod exactla;
pub mod homology;
pub mod lie;
pub mod multilinear;
pub mod presentation;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};

/// Arbitrary-precision integer matrix.
pub type IntMatrix = exactla::Matrix<num_bigint::BigInt>;
/// Fixed-width matrix with checked arithmetic.
pub type SmallIntMatrix = exactla::Matrix<i64>;
/// Smith decomposition over arbitrary-precision integers.
pub type IntSmith = exactla::SmithDecomposition<num_bigint::BigInt>;
