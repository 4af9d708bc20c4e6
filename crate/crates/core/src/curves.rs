//! Genus and rational-point data for modular curves `X_0(N)`.
//!
//! The general genus comes from the index and elliptic/cusp data of
//! `Gamma_0(N)`. The two families used by the bounds, `X_0(11l)` and
//! `X_0(23l)`, have closed forms `g = l` and `g = 2l + 1`; their point-count
//! lower bounds over `F_{p^2}` (supersingular points) are taken as given.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{divisors, euler_phi, factorize, gcd, is_prime};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("level must be positive")]
    ZeroLevel,
    #[error("characteristic {0} must be a prime >= 5")]
    InvalidCharacteristic(u64),
    #[error("level factor {0} is not prime")]
    NotPrime(u64),
    #[error("degenerate level factor l = {l}: {reason}")]
    DegenerateLevel { l: u64, reason: &'static str },
    #[error("closed-form genus {closed} disagrees with the Gamma_0(N) formula {general}")]
    GenusMismatch { closed: u64, general: u64 },
}

/// Index, elliptic points, cusps and genus of `Gamma_0(N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gamma0Data {
    #[serde(rename = "N")]
    pub level: u64,
    pub mu: u64,
    pub nu2: u64,
    pub nu3: u64,
    pub nu_inf: u64,
    pub genus: u64,
}

/// `(-1 | p)`, with the value 0 at `p = 2`.
fn chi_minus_one(p: u64) -> i64 {
    match p % 4 {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

/// `(-3 | p)`, with the value 0 at `p = 3`.
fn chi_minus_three(p: u64) -> i64 {
    match p % 3 {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

pub fn genus_x0(level: u64) -> Result<Gamma0Data, CurveError> {
    if level == 0 {
        return Err(CurveError::ZeroLevel);
    }
    let fac = factorize(level);
    let mu: u64 = fac.iter().map(|&(p, e)| p.pow(e - 1) * (p + 1)).product();
    let nu2 = if level % 4 == 0 {
        0
    } else {
        fac.iter().map(|&(p, _)| (1 + chi_minus_one(p)) as u64).product()
    };
    let nu3 = if level % 9 == 0 {
        0
    } else {
        fac.iter().map(|&(p, _)| (1 + chi_minus_three(p)) as u64).product()
    };
    let nu_inf: u64 = divisors(level)
        .into_iter()
        .map(|d| euler_phi(gcd(d, level / d)))
        .sum();
    let twelve_g = 12 + mu as i64 - 3 * nu2 as i64 - 4 * nu3 as i64 - 6 * nu_inf as i64;
    assert!(
        twelve_g >= 0 && twelve_g % 12 == 0,
        "genus formula produced a non-integer for N = {level}"
    );
    Ok(Gamma0Data {
        level,
        mu,
        nu2,
        nu3,
        nu_inf,
        genus: (twelve_g / 12) as u64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CurveFamily {
    /// `X_0(11l)`, used for `p != 11`.
    #[serde(rename = "11l")]
    ElevenL,
    /// `X_0(23l)`, used for `p = 11`.
    #[serde(rename = "23l")]
    TwentyThreeL,
}

impl CurveFamily {
    pub fn for_characteristic(p: u64) -> Self {
        if p == 11 {
            CurveFamily::TwentyThreeL
        } else {
            CurveFamily::ElevenL
        }
    }

    pub fn level_prime(&self) -> u64 {
        match self {
            CurveFamily::ElevenL => 11,
            CurveFamily::TwentyThreeL => 23,
        }
    }

    pub fn genus(&self, l: u64) -> u64 {
        match self {
            CurveFamily::ElevenL => l,
            CurveFamily::TwentyThreeL => 2 * l + 1,
        }
    }

    /// Lower bound on `N_1` over `F_{p^2}` from the supersingular points.
    pub fn n1_lower_p2(&self, p: u64, l: u64) -> u64 {
        match self {
            CurveFamily::ElevenL => (p - 1) * (l + 1),
            CurveFamily::TwentyThreeL => 2 * (p - 1) * (l + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveFamilyData {
    pub family: CurveFamily,
    pub l: u64,
    #[serde(rename = "N")]
    pub level: u64,
    pub genus: u64,
    /// Lower bound on `N_1(F/F_{p^2})`.
    pub n1_lower_p2: u64,
    /// Lower bound on `N_1(F/F_p) + 2 N_2(F/F_p)`; equal to `n1_lower_p2`
    /// since `N_1` over `F_{p^2}` counts exactly those places after descent.
    pub n1_2n2_lower_p: u64,
    pub p: u64,
}

/// Data of the family curve for level factor `l` reduced at `p`: `X_0(11l)`
/// when `p != 11`, `X_0(23l)` when `p = 11`.
pub fn family_data(p: u64, l: u64) -> Result<CurveFamilyData, CurveError> {
    if p < 5 || !is_prime(p) {
        return Err(CurveError::InvalidCharacteristic(p));
    }
    if !is_prime(l) {
        return Err(CurveError::NotPrime(l));
    }
    let family = CurveFamily::for_characteristic(p);
    if l == p {
        return Err(CurveError::DegenerateLevel {
            l,
            reason: "bad reduction at p",
        });
    }
    if l == family.level_prime() {
        return Err(CurveError::DegenerateLevel {
            l,
            reason: "level is not squarefree",
        });
    }
    let level = family.level_prime() * l;
    let genus = family.genus(l);
    let general = genus_x0(level)?.genus;
    if general != genus {
        return Err(CurveError::GenusMismatch {
            closed: genus,
            general,
        });
    }
    let n1 = family.n1_lower_p2(p, l);
    Ok(CurveFamilyData {
        family,
        l,
        level,
        genus,
        n1_lower_p2: n1,
        n1_2n2_lower_p: n1,
        p,
    })
}

/// Decides `2g + 1 <= q^((n-1)/2) (q^(1/2) - 1)` exactly.
///
/// With `A = 2g + 1`: for odd `n` and `B = q^((n-1)/2)` the condition is
/// `(A + B)^2 <= q B^2`; for even `n` and `C = q^(n/2)` it is `A <= C` and
/// `C^2 <= q (C - A)^2`.
pub fn check_rr_hypothesis(q: u64, n: u64, g: u64) -> bool {
    assert!(n >= 1, "extension degree must be positive");
    assert!(q >= 2, "field order must be at least 2");
    let a = BigUint::from(2 * g as u128 + 1);
    // q >= 4 gives sqrt(q) - 1 >= 1 and q^((n-1)/2) >= 2^(n-1) > A
    if q >= 4 && n >= 66 {
        return true;
    }
    let q_big = BigUint::from(q);
    if n % 2 == 1 {
        let b = q_big.pow(((n - 1) / 2) as u32);
        let lhs = &a + &b;
        &lhs * &lhs <= &q_big * &b * &b
    } else {
        let c = q_big.pow((n / 2) as u32);
        if c < a {
            return false;
        }
        let d = &c - &a;
        &c * &c <= &q_big * &d * &d
    }
}
