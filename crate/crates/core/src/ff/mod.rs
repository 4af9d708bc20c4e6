//! Exact arithmetic in prime fields, their extensions, polynomials over them,
//! and dense linear algebra.

mod extension;
mod galois;
mod matrix;
pub mod poly;

pub use extension::{field_arith, ArithOp, ExtensionField, FieldElement};
pub use galois::{GaloisField, PrimeFieldSpec, MAX_EXTENSION_ORDER, MAX_PRIME};
pub use matrix::Matrix;
pub use poly::find_irreducible;

use thiserror::Error;

use crate::arith::{divisors, mobius};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported range")]
    OrderTooLarge(u64),
    #[error("modulus must have degree at least 1")]
    DegreeZero,
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus {0} is reducible")]
    Reducible(String),
    #[error("coefficient outside the base field")]
    CoefficientOutOfRange,
    #[error("expected {expected} coordinates, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("matrix is singular: no pivot in column {column}")]
    Singular { column: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("rank {rank} is below the required {needed}")]
    RankDeficient { rank: usize, needed: usize },
}

/// Number of places of degree `d` of the rational function field over `F_q`:
/// `q + 1` for `d = 1`, otherwise the number of monic irreducible polynomials of
/// degree `d`, `(1/d) * sum_{e | d} mobius(e) q^(d/e)`.
///
/// Panics if `q^d` does not fit in 127 bits.
pub fn count_places_rational_ff(q: u64, d: u32) -> u128 {
    assert!(d >= 1, "place degree must be positive");
    if d == 1 {
        return q as u128 + 1;
    }
    let pow = |e: u32| -> i128 {
        (q as i128)
            .checked_pow(e)
            .expect("q^d overflows the place counter")
    };
    let total: i128 = divisors(d as u64)
        .into_iter()
        .map(|e| mobius(e) as i128 * pow(d / e as u32))
        .sum();
    (total / d as i128) as u128
}
