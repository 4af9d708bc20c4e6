//! Genus-0 symmetric multiplication algorithms.
//!
//! An element of `F_{q^n} = F_q[t]/(Q)` is a polynomial `f` of degree below
//! `n`. The product of two such polynomials has degree at most `2n - 2`, so it
//! is determined by its values at places of total degree `2n - 1`: rational
//! nodes `t = a`, the leading coefficient (infinity), and residues modulo
//! irreducible quadratics. Each residue in `F_{q^2}` is multiplied with a
//! rank-3 algorithm built the same way. Interpolating and reducing modulo `Q`
//! gives the reconstruction matrix.

mod algorithm;
mod plan;
mod tensor;
mod verify;

pub use algorithm::{build_algorithm, BilinearAlgorithm, LedgerEntry};
pub use plan::{plan_evaluation, EvalPlan, Place};
pub use tensor::{emit_tensor, parse_tensor, tensor_file, TensorFile};
pub use verify::{
    envelope, verify, Mismatch, RunMode, VerificationReport, VerifyMode, DEFAULT_SEED, DEFAULT_TRIALS,
    EXHAUSTIVE_LIMIT,
};

use thiserror::Error;

use crate::ff::{FieldError, LinAlgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultError {
    #[error("extension degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("no plan for q = {q}, n = {n}: {hypothesis}")]
    Infeasible {
        q: u64,
        n: usize,
        available: usize,
        needed: usize,
        hypothesis: String,
    },
    #[error("plan was made for a different base field")]
    PlanMismatch,
    #[error("q^(2n) is too large for exhaustive verification (q = {q}, n = {n})")]
    ExhaustiveTooLarge { q: u64, n: usize },
    #[error("bilinear identity fails at x = {:?}, y = {:?}", .0.x, .0.y)]
    Mismatch(Box<Mismatch>),
    #[error("bad tensor file: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// Plans, builds and returns the algorithm for the canonical `F_{q^n}`.
pub fn build(q: u64, n: usize, allow_deg2: bool) -> Result<BilinearAlgorithm, MultError> {
    let f = crate::ff::GaloisField::new(q)?;
    let plan = plan_evaluation(&f, n, allow_deg2)?;
    build_algorithm(&f, &plan)
}
