//! Previously published uniform bounds `mu^sym <= C * n`, used as comparators.

use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::arith::{is_prime, prime_power};
use crate::primes::FieldKind;

use super::decimal::{int, one, ratio};
use super::report::{rounded, BoundReport, Method};
use super::BoundError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PriorVariant {
    /// `q = 2`: `15.46 n`.
    Binary,
    /// `q = 3`: `7.732 n`.
    Ternary,
    /// `q >= 4`: `3(1 + (4/3)p / (q - 3 + 2(p-1) q/(q+1))) n` for `mu_q`.
    GeneralQ,
    /// `p >= 5`: `3(1 + 8/(3p - 5)) n` for `mu_p`.
    PrimeField,
    /// `q >= 4`: `2(1 + p / (q - 3 + (p-1) q/(q+1))) n` for `mu_{q^2}`.
    SquareOfQ,
    /// `p >= 5`: `2(1 + 2/(p - 33/16)) n` for `mu_{p^2}`.
    SquareOfP,
}

impl fmt::Display for PriorVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PriorVariant::Binary => "prior_q2",
            PriorVariant::Ternary => "prior_q3",
            PriorVariant::GeneralQ => "prior_q",
            PriorVariant::PrimeField => "prior_p",
            PriorVariant::SquareOfQ => "prior_q_squared",
            PriorVariant::SquareOfP => "prior_p_squared",
        })
    }
}

impl Serialize for PriorVariant {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Exact coefficient `C` of a prior bound `C * n`. `q` is the order named by
/// the variant (`p` for the prime variants).
pub fn prior_coefficient(variant: PriorVariant, q: u64) -> Result<BigRational, BoundError> {
    let domain = || BoundError::PriorDomain { variant, q };
    match variant {
        PriorVariant::Binary => (q == 2).then(|| ratio(773, 50)).ok_or_else(domain),
        PriorVariant::Ternary => (q == 3).then(|| ratio(1933, 250)).ok_or_else(domain),
        PriorVariant::GeneralQ | PriorVariant::SquareOfQ => {
            let (p, _) = prime_power(q).ok_or_else(domain)?;
            if q < 4 {
                return Err(domain());
            }
            let (p, q) = (int(p as i64), int(q as i64));
            let frac = &q / (&q + one());
            Ok(if variant == PriorVariant::GeneralQ {
                let den = &q - int(3) + int(2) * (&p - one()) * frac;
                int(3) * (one() + ratio(4, 3) * p / den)
            } else {
                let den = &q - int(3) + (&p - one()) * frac;
                int(2) * (one() + p / den)
            })
        }
        PriorVariant::PrimeField | PriorVariant::SquareOfP => {
            if q < 5 || !is_prime(q) {
                return Err(domain());
            }
            let p = q as i64;
            Ok(if variant == PriorVariant::PrimeField {
                int(3) * (one() + ratio(8, 3 * p - 5))
            } else {
                int(2) * (one() + int(2) / (int(p) - ratio(33, 16)))
            })
        }
    }
}

/// Coefficient and per-`n` value of a prior bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PriorBound {
    pub variant: PriorVariant,
    pub q: u64,
    pub coefficient: String,
    pub coefficient_real: f64,
    pub value_real: f64,
    pub value_int: i64,
}

pub fn prior_bound(variant: PriorVariant, q: u64, n: u64) -> Result<PriorBound, BoundError> {
    let c = prior_coefficient(variant, q)?;
    let (value_real, value_int) = rounded(&(&c * int(n as i64)));
    Ok(PriorBound {
        variant,
        q,
        coefficient: c.to_string(),
        coefficient_real: c.to_f64().unwrap_or(f64::NAN),
        value_real,
        value_int,
    })
}

/// The prior bounds that apply to extensions of `F_{p^2}` or `F_p`, with the
/// order each one is evaluated at.
pub fn applicable_priors(p: u64, field: FieldKind) -> Vec<(PriorVariant, u64)> {
    match field {
        FieldKind::Quadratic => vec![
            (PriorVariant::SquareOfQ, p),
            (PriorVariant::SquareOfP, p),
            (PriorVariant::GeneralQ, p * p),
        ],
        FieldKind::Prime => vec![(PriorVariant::GeneralQ, p), (PriorVariant::PrimeField, p)],
    }
}

/// A prior bound packaged as a [`BoundReport`]; published bounds hold for
/// every `n > 1`.
pub fn prior_report(variant: PriorVariant, q: u64, p: u64, n: u64, field: FieldKind) -> Result<BoundReport, BoundError> {
    let b = prior_bound(variant, q, n)?;
    Ok(BoundReport {
        p,
        n,
        field,
        method: Method::Prior(variant),
        value_real: b.value_real,
        value_int: b.value_int,
        valid_unconditional: n > 1,
        policy: None,
        witnesses: None,
        caveats: vec![format!("coefficient {} at q = {}", b.coefficient, q)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients() {
        assert_eq!(prior_coefficient(PriorVariant::PrimeField, 5).unwrap(), ratio(27, 5));
        assert_eq!(prior_coefficient(PriorVariant::SquareOfP, 5).unwrap(), ratio(158, 47));
        assert_eq!(prior_coefficient(PriorVariant::PrimeField, 7).unwrap(), ratio(9, 2));
        // 2(1 + 5/(2 + 4*5/6)) = 2(1 + 15/16)
        assert_eq!(prior_coefficient(PriorVariant::SquareOfQ, 5).unwrap(), ratio(31, 8));
    }

    #[test]
    fn per_n_values() {
        let b = prior_bound(PriorVariant::Binary, 2, 10).unwrap();
        assert_eq!(b.value_real, 154.6);
        assert_eq!(b.value_int, 154);
        let b = prior_bound(PriorVariant::Ternary, 3, 1000).unwrap();
        assert_eq!(b.value_real, 7732.0);
        let b = prior_bound(PriorVariant::SquareOfP, 5, 100).unwrap();
        assert_eq!(b.value_int, 336);
        assert!((b.value_real - 336.170212765958).abs() < 1e-9);
        assert!((b.coefficient_real - 3.36170).abs() < 1e-5);
    }

    #[test]
    fn domains() {
        assert!(prior_coefficient(PriorVariant::Binary, 3).is_err());
        assert!(prior_coefficient(PriorVariant::GeneralQ, 3).is_err());
        assert!(prior_coefficient(PriorVariant::GeneralQ, 6).is_err());
        assert!(prior_coefficient(PriorVariant::GeneralQ, 4).is_ok());
        assert!(prior_coefficient(PriorVariant::PrimeField, 3).is_err());
        assert!(prior_coefficient(PriorVariant::SquareOfP, 25).is_err());
    }
}
