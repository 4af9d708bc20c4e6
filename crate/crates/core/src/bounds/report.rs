use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::curves::CurveFamily;
use crate::primes::{FieldKind, GapPolicy};

use super::decimal::{Decimal, SIGNIFICANT_DIGITS};
use super::PriorVariant;

/// How a bound was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Constructive,
    ClosedForm,
    Prior(PriorVariant),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Constructive => f.write_str("constructive"),
            Method::ClosedForm => f.write_str("closed_form"),
            Method::Prior(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One verified (or refuted) precondition, with both sides rendered exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
    pub holds: bool,
    /// Informational checks do not gate the bound.
    pub required: bool,
}

impl Check {
    pub fn new(name: &str, lhs: impl ToString, relation: &str, rhs: impl ToString, holds: bool) -> Self {
        Self {
            name: name.to_string(),
            lhs: lhs.to_string(),
            relation: relation.to_string(),
            rhs: rhs.to_string(),
            holds,
            required: true,
        }
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub family: CurveFamily,
    pub l_k: u64,
    pub l_k1: u64,
    #[serde(rename = "N")]
    pub level: u64,
    pub genus: u64,
    pub n1_lower: u64,
    pub checks: Vec<Check>,
    pub skipped: Vec<u64>,
}

impl Witnesses {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub p: u64,
    pub n: u64,
    pub field: FieldKind,
    pub method: Method,
    /// Upper bound rounded up to 15 significant digits.
    pub value_real: f64,
    /// `floor(value_real)`; a valid bound on the integer-valued rank.
    pub value_int: i64,
    pub valid_unconditional: bool,
    pub policy: Option<GapPolicy>,
    pub witnesses: Option<Witnesses>,
    pub caveats: Vec<String>,
}

/// Real and integer forms of an exact bound value.
pub(crate) fn rounded(v: &BigRational) -> (f64, i64) {
    let d = Decimal::round_up(v, SIGNIFICANT_DIGITS);
    let int = d.floor().to_i64().expect("bound fits in i64");
    (d.to_f64(), int)
}
