use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::arith::{is_prime, next_prime};

use super::PrimeError;

/// Target field of a bound: `F_{p^2}` or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FieldKind {
    /// Extensions of `F_{p^2}`.
    #[serde(rename = "p2")]
    Quadratic,
    /// Extensions of `F_p`.
    #[serde(rename = "p")]
    Prime,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Quadratic => "p2",
            FieldKind::Prime => "p",
        })
    }
}

/// Curve family used by the bound: `X_0(11l)` for `p != 11`, `X_0(23l)` for `p = 11`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    Generic,
    Eleven,
}

impl FamilyKind {
    pub fn for_characteristic(p: u64) -> Self {
        if p == 11 {
            FamilyKind::Eleven
        } else {
            FamilyKind::Generic
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    QuadraticGeneric,
    QuadraticEleven,
    PrimeGeneric,
    PrimeEleven,
}

impl Family {
    pub fn new(field: FieldKind, kind: FamilyKind) -> Self {
        match (field, kind) {
            (FieldKind::Quadratic, FamilyKind::Generic) => Family::QuadraticGeneric,
            (FieldKind::Quadratic, FamilyKind::Eleven) => Family::QuadraticEleven,
            (FieldKind::Prime, FamilyKind::Generic) => Family::PrimeGeneric,
            (FieldKind::Prime, FamilyKind::Eleven) => Family::PrimeEleven,
        }
    }

    pub fn for_field(field: FieldKind, p: u64) -> Self {
        Self::new(field, FamilyKind::for_characteristic(p))
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::QuadraticGeneric | Family::PrimeGeneric => FamilyKind::Generic,
            Family::QuadraticEleven | Family::PrimeEleven => FamilyKind::Eleven,
        }
    }

    pub fn field(&self) -> FieldKind {
        match self {
            Family::QuadraticGeneric | Family::QuadraticEleven => FieldKind::Quadratic,
            Family::PrimeGeneric | Family::PrimeEleven => FieldKind::Prime,
        }
    }

    /// Level factors excluded besides `p` itself.
    fn degenerate_level(&self) -> u64 {
        match self.kind() {
            FamilyKind::Generic => 11,
            FamilyKind::Eleven => 23,
        }
    }
}

/// Numerator and denominator of the pair threshold `T`, before reduction.
///
/// Generic families: `(p-1)(l+1) <= 2n + 2l - 2` iff `l <= (2n - p - 1)/(p - 3)`.
/// Eleven families: `(p-1)(l+1) <= n + 2l` iff `l <= (n - p + 1)/(p - 3)`.
pub fn threshold_parts(p: u64, n: u64, kind: FamilyKind) -> (i128, i128) {
    let (p, n) = (p as i128, n as i128);
    let num = match kind {
        FamilyKind::Generic => 2 * n - p - 1,
        FamilyKind::Eleven => n - p + 1,
    };
    (num, p - 3)
}

/// Consecutive primes `l_k <= T < l_{k+1}` straddling the threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimePair {
    pub l_k: u64,
    pub l_k1: u64,
    #[serde(serialize_with = "ratio_as_string")]
    pub threshold: Ratio<u64>,
    pub gap: u64,
    /// Degenerate primes passed over on either side of the threshold.
    pub skipped: Vec<u64>,
}

fn ratio_as_string<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl PrimePair {
    pub fn had_skip(&self) -> bool {
        !self.skipped.is_empty()
    }
}

/// Selects the prime pair realizing the threshold inequalities for `family`.
///
/// `l_k` is the largest prime `<= T` and `l_k1` the smallest prime `> T`; a
/// candidate equal to `p` (bad reduction) or to the family's own level prime
/// (11 or 23) is skipped in favour of the previous (resp. next) prime.
pub fn select_pair(p: u64, n: u64, family: Family) -> Result<PrimePair, PrimeError> {
    if p < 5 || !is_prime(p) {
        return Err(PrimeError::InvalidCharacteristic(p));
    }
    if FamilyKind::for_characteristic(p) != family.kind() {
        return Err(PrimeError::FamilyMismatch { p, family });
    }
    let (num, den) = threshold_parts(p, n, family.kind());
    if num < 2 * den {
        return Err(PrimeError::NTooSmall {
            p,
            n,
            threshold: format!("{num}/{den}"),
        });
    }
    let threshold = Ratio::new(num as u64, den as u64);
    let floor_t = threshold.to_integer();
    let degenerate = |l: u64| l == p || l == family.degenerate_level();

    let mut skipped = Vec::new();
    let nominal = (2..=floor_t).rev().find(|&c| is_prime(c)).unwrap();
    let mut l_k = nominal;
    while degenerate(l_k) {
        skipped.push(l_k);
        l_k = (2..l_k).rev().find(|&c| is_prime(c)).unwrap();
    }
    let mut l_k1 = next_prime(nominal);
    while degenerate(l_k1) {
        skipped.push(l_k1);
        l_k1 = next_prime(l_k1);
    }
    skipped.sort_unstable();
    Ok(PrimePair {
        l_k,
        l_k1,
        threshold,
        gap: l_k1 - l_k,
        skipped,
    })
}
