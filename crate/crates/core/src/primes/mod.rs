//! Prime tables, prime-gap verification, gap policies, and selection of the
//! prime pair `(l_k, l_{k+1})` that sizes a curve from a modular family.

mod gaps;
mod pair;
mod policy;
mod sieve;

pub use gaps::{gap_within, gap_within_exact, verify_gaps, Alpha, GapReport};
pub use pair::{select_pair, threshold_parts, Family, FamilyKind, FieldKind, PrimePair};
pub use policy::{policy_floor, GapPolicy, NFloor, PolicyName, XAlpha, DUDEK_X_ALPHA};
pub use sieve::{sieve, sieve_with_cap, PrimeTable, DEFAULT_SIEVE_CAP, DEFAULT_SIEVE_LIMIT};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeError {
    #[error("limit {limit} is below the minimum {min}")]
    LimitTooSmall { limit: u64, min: u64 },
    #[error("limit {limit} exceeds the sieve cap {cap}")]
    LimitTooLarge { limit: u64, cap: u64 },
    #[error("alpha must be a fraction c/d with 0 < c < d, got {0:?}")]
    BadAlpha(String),
    #[error("characteristic {0} must be a prime >= 5")]
    InvalidCharacteristic(u64),
    #[error("family {family:?} does not apply to p = {p}")]
    FamilyMismatch { p: u64, family: Family },
    #[error("n too small for family: p = {p}, n = {n} gives threshold {threshold} < 2")]
    NTooSmall { p: u64, n: u64, threshold: String },
}
