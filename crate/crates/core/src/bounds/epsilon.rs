use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::primes::{Alpha, FamilyKind};

use super::decimal::ratio;

/// `eps_p(n) = x^(alpha - 1)` with `x = 2n/(p-3)` (generic families) or
/// `x = n/(p-3)` (the `p = 11` families).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EpsilonSpec {
    pub p: u64,
    pub n: u64,
    pub alpha: Alpha,
    pub family: FamilyKind,
    /// An `f64` no smaller than the exact value.
    pub value: f64,
}

impl EpsilonSpec {
    /// The stored value as an exact rational.
    pub fn exact(&self) -> BigRational {
        BigRational::from_float(self.value).expect("epsilon is finite")
    }
}

fn base_ratio(p: u64, n: u64, family: FamilyKind) -> BigRational {
    let num = match family {
        FamilyKind::Generic => 2 * n as i64,
        FamilyKind::Eleven => n as i64,
    };
    ratio(num, p as i64 - 3)
}

/// `v >= x^((c-d)/d)`, i.e. `v^d * x^(d-c) >= 1`.
fn dominates(v: f64, x: &BigRational, alpha: Alpha) -> bool {
    let v = BigRational::from_float(v).expect("finite");
    let lhs = Pow::pow(&v, alpha.den()) * Pow::pow(x, alpha.den() - alpha.num());
    lhs >= BigRational::one()
}

fn next_up(v: f64) -> f64 {
    f64::from_bits(v.to_bits() + 1)
}

/// Evaluates `eps_p(n)` in `f64` and rounds it up by one ulp, then keeps
/// stepping up until an exact rational check confirms the value is an upper
/// bound. An evaluation that is already exact is kept as is.
pub fn epsilon(p: u64, n: u64, alpha: Alpha, family: FamilyKind) -> EpsilonSpec {
    assert!(p >= 5, "epsilon needs p >= 5");
    assert!(n >= 1, "epsilon needs n >= 1");
    let x = base_ratio(p, n, family);
    let xf = match family {
        FamilyKind::Generic => 2.0 * n as f64 / (p - 3) as f64,
        FamilyKind::Eleven => n as f64 / (p - 3) as f64,
    };
    let mut value = xf.powf(alpha.to_f64() - 1.0);
    let exact = {
        let v = BigRational::from_float(value).expect("finite");
        Pow::pow(&v, alpha.den()) * Pow::pow(&x, alpha.den() - alpha.num()) == BigRational::one()
    };
    if !exact {
        value = next_up(value);
        while !dominates(value, &x, alpha) {
            value = next_up(value);
        }
    }
    EpsilonSpec {
        p,
        n,
        alpha,
        family,
        value,
    }
}
