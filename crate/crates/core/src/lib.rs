//! Symmetric bilinear multiplication algorithms for finite field extensions,
//! and uniform upper bounds on their symmetric tensor rank.
//!
//! - [`ff`]: exact arithmetic in `F_q`, `F_{q^n}`, polynomials and matrices.
//! - [`primes`]: sieving, prime-gap verification and gap policies, and the
//!   consecutive prime pair behind each curve-family bound.
//! - [`curves`]: genus of `X_0(N)` and the point-count data of the
//!   `X_0(11l)` and `X_0(23l)` families.
//! - [`bounds`]: closed-form, prior and constructive bounds, and comparisons.
//! - [`mult`]: executable genus-0 multiplication algorithms with verification.

pub mod arith;
pub mod bounds;
pub mod curves;
pub mod ff;
pub mod mult;
pub mod primes;
pub mod selftest;
