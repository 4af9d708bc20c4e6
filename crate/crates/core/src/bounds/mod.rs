//! Upper bounds on the symmetric tensor rank of multiplication in `F_{p^2 n}`
//! over `F_{p^2}` and in `F_{p^n}` over `F_p`.
//!
//! Three sources are kept apart: the closed forms (valid above a policy floor),
//! the constructive pipeline (valid whenever its listed checks hold), and prior
//! published uniform bounds used as comparators.

mod closed;
mod compare;
mod constructive;
pub mod decimal;
mod epsilon;
mod prior;
mod report;

pub use closed::{asymptotic_coefficient, closed_form, closed_form_exact, closed_form_prime, closed_form_quadratic};
pub use compare::{
    compare_all, remark_prime, remark_quadratic, tabulate, AsymptoticEntry, ComparisonReport, FieldComparison,
};
pub use constructive::{constructive_bound, Infeasible};
pub use epsilon::{epsilon, EpsilonSpec};
pub use prior::{applicable_priors, prior_bound, prior_coefficient, prior_report, PriorBound, PriorVariant};
pub use report::{BoundReport, Check, Method, Witnesses};

pub use crate::primes::FieldKind;

use thiserror::Error;

use crate::curves::CurveError;
use crate::primes::PrimeError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("characteristic {0} must be a prime >= 5")]
    InvalidCharacteristic(u64),
    #[error("extension degree must be at least {min}, got {n}")]
    DegreeTooSmall { n: u64, min: u64 },
    #[error("{variant} is not defined for q = {q}")]
    PriorDomain { variant: PriorVariant, q: u64 },
    #[error(transparent)]
    Prime(#[from] PrimeError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// Which place hypothesis of the genus-`g` construction is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnvelopeCase {
    /// Enough rational places: `2n + g - 1`.
    RationalPlaces,
    /// Rational and degree-2 places, with a non-special divisor of degree
    /// `g - 1`: `3n + 2g`.
    DegreeTwoPlaces,
}

/// Rank envelope of the construction on a curve of genus `g`.
pub fn thm1_bound(case: EnvelopeCase, n: u64, g: u64) -> u64 {
    match case {
        EnvelopeCase::RationalPlaces => 2 * n + g - 1,
        EnvelopeCase::DegreeTwoPlaces => 3 * n + 2 * g,
    }
}

pub(crate) fn check_characteristic(p: u64) -> Result<(), BoundError> {
    if p < 5 || !crate::arith::is_prime(p) {
        return Err(BoundError::InvalidCharacteristic(p));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelopes() {
        assert_eq!(thm1_bound(EnvelopeCase::RationalPlaces, 2, 0), 3);
        assert_eq!(thm1_bound(EnvelopeCase::DegreeTwoPlaces, 3, 0), 9);
        assert_eq!(thm1_bound(EnvelopeCase::RationalPlaces, 100, 101), 300);
    }
}
