use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Significant digits carried by reported real bounds.
pub const SIGNIFICANT_DIGITS: u32 = 15;

/// `mantissa * 10^(-scale)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    mantissa: BigInt,
    scale: i32,
}

fn pow10(e: u32) -> BigInt {
    BigInt::from(10u32).pow(e)
}

/// `v * 10^e` for a possibly negative `e`.
fn shift(v: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        v * BigRational::from_integer(pow10(e as u32))
    } else {
        v / BigRational::from_integer(pow10((-e) as u32))
    }
}

impl Decimal {
    /// Smallest decimal with `digits` significant digits that is `>= v`.
    pub fn round_up(v: &BigRational, digits: u32) -> Self {
        if v.is_zero() {
            return Self {
                mantissa: BigInt::zero(),
                scale: 0,
            };
        }
        let a = v.abs();
        let lo = BigRational::from_integer(pow10(digits - 1));
        let hi = BigRational::from_integer(pow10(digits));
        let approx = a.to_f64().map_or(0.0, |x| x.log10().floor());
        let mut scale = digits as i32 - 1 - approx as i32;
        loop {
            let m = shift(&a, scale);
            if m < lo {
                scale += 1;
            } else if m >= hi {
                scale -= 1;
            } else {
                break;
            }
        }
        let m = shift(v, scale);
        let mut mantissa = m.ceil().to_integer();
        if mantissa.abs() == pow10(digits) {
            mantissa /= 10;
            scale -= 1;
        }
        Self { mantissa, scale }
    }

    pub fn to_rational(&self) -> BigRational {
        shift(&BigRational::from_integer(self.mantissa.clone()), -self.scale)
    }

    pub fn floor(&self) -> BigInt {
        if self.scale <= 0 {
            return &self.mantissa * pow10((-self.scale) as u32);
        }
        self.mantissa.div_floor(&pow10(self.scale as u32))
    }

    /// The decimal as an `f64`. Any decimal with at most 15 significant digits
    /// survives the round trip through `f64` and back to shortest text.
    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().expect("decimal text parses as f64")
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg = self.mantissa.sign() == Sign::Minus;
        let digits = self.mantissa.abs().to_string();
        let sign = if neg { "-" } else { "" };
        if self.scale <= 0 {
            let zeros = "0".repeat((-self.scale) as usize);
            return write!(f, "{sign}{digits}{zeros}");
        }
        let scale = self.scale as usize;
        let (int, frac) = if digits.len() > scale {
            let (i, fr) = digits.split_at(digits.len() - scale);
            (i.to_string(), fr.to_string())
        } else {
            ("0".to_string(), format!("{}{}", "0".repeat(scale - digits.len()), digits))
        };
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            write!(f, "{sign}{int}")
        } else {
            write!(f, "{sign}{int}.{frac}")
        }
    }
}

/// Exact rational from an integer numerator and denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn one() -> BigRational {
    BigRational::one()
}
