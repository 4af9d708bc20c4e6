use std::fmt;

use serde::{Serialize, Serializer};

use super::{verify_gaps, Alpha, FamilyKind, GapReport, PrimeError};

/// Dudek's explicit floor for `alpha = 2/3`. Kept symbolic: it is about
/// `10^(1.2e14)` and never fits in a machine integer.
pub const DUDEK_X_ALPHA: &str = "exp(exp(33.3))";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PolicyName {
    #[serde(rename = "BHP")]
    Bhp,
    Dudek,
    Empirical,
}

impl fmt::Display for PolicyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolicyName::Bhp => "BHP",
            PolicyName::Dudek => "Dudek",
            PolicyName::Empirical => "Empirical",
        })
    }
}

/// Floor `x_alpha` from which `l_{k+1} - l_k <= l_k^alpha` holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XAlpha {
    Finite(u64),
    Unknown,
    Symbolic(String),
}

impl Serialize for XAlpha {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            XAlpha::Finite(v) => s.serialize_u64(*v),
            XAlpha::Unknown => s.serialize_str("unknown"),
            XAlpha::Symbolic(e) => s.serialize_str(e),
        }
    }
}

impl fmt::Display for XAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XAlpha::Finite(v) => write!(f, "{v}"),
            XAlpha::Unknown => f.write_str("unknown"),
            XAlpha::Symbolic(e) => f.write_str(e),
        }
    }
}

/// Which prime-gap theorem (or sieve evidence) justifies the gap condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapPolicy {
    pub name: PolicyName,
    pub alpha: Alpha,
    pub x_alpha: XAlpha,
    /// Sieve range for the empirical policy.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified_to: Option<u64>,
}

impl GapPolicy {
    /// Baker-Harman-Pintz: `alpha = 21/40`, floor effective but never computed.
    pub fn bhp() -> Self {
        Self {
            name: PolicyName::Bhp,
            alpha: Alpha::TWENTY_ONE_FORTIETHS,
            x_alpha: XAlpha::Unknown,
            verified_to: None,
        }
    }

    /// Dudek: `alpha = 2/3` with `x_alpha = exp(exp(33.3))`.
    pub fn dudek() -> Self {
        Self {
            name: PolicyName::Dudek,
            alpha: Alpha::TWO_THIRDS,
            x_alpha: XAlpha::Symbolic(DUDEK_X_ALPHA.to_string()),
            verified_to: None,
        }
    }

    /// Sieve-verified floor for a user-chosen `alpha`.
    pub fn empirical(alpha: Alpha, limit: u64) -> Result<(Self, GapReport), PrimeError> {
        let report = verify_gaps(limit, alpha)?;
        Ok((Self::from_report(&report), report))
    }

    pub fn from_report(report: &GapReport) -> Self {
        Self {
            name: PolicyName::Empirical,
            alpha: report.alpha,
            x_alpha: XAlpha::Finite(report.verified_floor()),
            verified_to: Some(report.limit),
        }
    }

    /// Whether the gap condition is certified at the prime `l` under this policy.
    pub fn covers(&self, l: u64) -> bool {
        match (&self.x_alpha, self.verified_to) {
            (XAlpha::Finite(x), Some(limit)) => l >= *x && l < limit,
            (XAlpha::Finite(x), None) => l >= *x,
            _ => false,
        }
    }

    pub fn caveat(&self) -> Option<String> {
        match self.name {
            PolicyName::Empirical => Some(format!(
                "conditional on sieve range: gap condition verified for primes below {}",
                self.verified_to.unwrap_or(0)
            )),
            PolicyName::Bhp => Some(
                "x_alpha for alpha=21/40 has never been computed; validity cannot be certified"
                    .to_string(),
            ),
            PolicyName::Dudek => None,
        }
    }
}

/// Threshold on `n` from which a closed-form bound is certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NFloor {
    Finite(u64),
    /// `coef * x_alpha + offset` with a symbolic `x_alpha`.
    Symbolic { coef: u64, offset: u64, x_alpha: String },
    Unknown,
}

impl NFloor {
    /// Whether `n` reaches the floor. A symbolic floor is never reached by a
    /// machine-size `n`.
    pub fn admits(&self, n: u64) -> bool {
        match self {
            NFloor::Finite(v) => n >= *v,
            NFloor::Symbolic { .. } | NFloor::Unknown => false,
        }
    }
}

impl fmt::Display for NFloor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NFloor::Finite(v) => write!(f, "{v}"),
            NFloor::Unknown => f.write_str("unknown"),
            NFloor::Symbolic { coef, offset, x_alpha } => {
                if *coef == 1 {
                    write!(f, "{x_alpha}+{offset}")
                } else {
                    write!(f, "{coef}*{x_alpha}+{offset}")
                }
            }
        }
    }
}

impl Serialize for NFloor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            NFloor::Finite(v) => s.serialize_u64(*v),
            other => s.collect_str(other),
        }
    }
}

/// `n`-threshold for unconditional validity: `(p-3)/2 * x_alpha + (p+1)/2` for
/// the generic families, `(p-3) * x_alpha + p - 1` for the `p = 11` families.
pub fn policy_floor(policy: &GapPolicy, kind: FamilyKind, p: u64) -> NFloor {
    assert!(p >= 5 && p % 2 == 1, "policy floors are defined for odd p >= 5");
    let (coef, offset) = match kind {
        FamilyKind::Generic => ((p - 3) / 2, (p + 1) / 2),
        FamilyKind::Eleven => (p - 3, p - 1),
    };
    match &policy.x_alpha {
        XAlpha::Finite(x) => coef
            .checked_mul(*x)
            .and_then(|v| v.checked_add(offset))
            .map_or(NFloor::Unknown, NFloor::Finite),
        XAlpha::Unknown => NFloor::Unknown,
        XAlpha::Symbolic(e) => NFloor::Symbolic {
            coef,
            offset,
            x_alpha: e.clone(),
        },
    }
}
