use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::arith::gcd;

use super::{sieve, PrimeError};

/// A gap exponent `alpha = num/den` in lowest terms with `0 < alpha < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alpha {
    num: u32,
    den: u32,
}

impl Alpha {
    pub const TWO_THIRDS: Alpha = Alpha { num: 2, den: 3 };
    pub const TWENTY_ONE_FORTIETHS: Alpha = Alpha { num: 21, den: 40 };

    pub fn new(num: u32, den: u32) -> Result<Self, PrimeError> {
        if num == 0 || den == 0 || num >= den {
            return Err(PrimeError::BadAlpha(format!("{num}/{den}")));
        }
        let g = gcd(num as u64, den as u64) as u32;
        Ok(Self {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(&self) -> u32 {
        self.num
    }

    pub fn den(&self) -> u32 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Alpha {
    type Err = PrimeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PrimeError::BadAlpha(s.to_string());
        let (c, d) = s.split_once('/').ok_or_else(bad)?;
        let c = c.trim().parse().map_err(|_| bad())?;
        let d = d.trim().parse().map_err(|_| bad())?;
        Alpha::new(c, d)
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Decides `gap <= l^alpha`, i.e. `gap^den <= l^num`, exactly.
///
/// A logarithmic comparison settles every case whose margin is far above the
/// floating-point error; near-ties fall through to big-integer powers.
pub fn gap_within(gap: u64, l: u64, alpha: Alpha) -> bool {
    if gap <= 1 {
        return l >= 1;
    }
    let lhs = alpha.den as f64 * (gap as f64).ln();
    let rhs = alpha.num as f64 * (l as f64).ln();
    let margin = 1e-9 * rhs.abs().max(1.0);
    if lhs < rhs - margin {
        return true;
    }
    if lhs > rhs + margin {
        return false;
    }
    gap_within_exact(gap, l, alpha)
}

pub fn gap_within_exact(gap: u64, l: u64, alpha: Alpha) -> bool {
    BigUint::from(gap).pow(alpha.den) <= BigUint::from(l).pow(alpha.num)
}

/// Result of a gap scan over all primes below `limit`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub limit: u64,
    pub alpha: Alpha,
    /// Primes `l < limit` whose successor gap exceeds `l^alpha`.
    pub violations: Vec<u64>,
    pub max_gap_seen: u64,
}

impl GapReport {
    /// Smallest prime from which no violation was seen below the limit.
    pub fn verified_floor(&self) -> u64 {
        self.violations
            .last()
            .map_or(2, |&l| crate::arith::next_prime(l))
    }
}

pub fn verify_gaps(limit: u64, alpha: Alpha) -> Result<GapReport, PrimeError> {
    if limit < 3 {
        return Err(PrimeError::LimitTooSmall { limit, min: 3 });
    }
    let table = sieve(limit)?;
    let primes = table.primes();
    let mut violations = Vec::new();
    let mut max_gap_seen = 0;
    for (i, &l) in primes.iter().enumerate() {
        if l >= limit {
            break;
        }
        let next = primes
            .get(i + 1)
            .copied()
            .unwrap_or_else(|| table.next_after(l));
        let gap = next - l;
        max_gap_seen = max_gap_seen.max(gap);
        if !gap_within(gap, l, alpha) {
            violations.push(l);
        }
    }
    Ok(GapReport {
        limit,
        alpha,
        violations,
        max_gap_seen,
    })
}
