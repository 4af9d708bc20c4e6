use std::fmt;
use std::sync::Arc;

use crate::arith::{is_prime, mul_mod, pow_mod, prime_power};

use super::{poly, FieldError};

/// Largest prime modulus supported by the single-word representation.
pub const MAX_PRIME: u64 = 1 << 61;
/// Largest order of a non-prime base field.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 16;
const TABLE_ORDER: u64 = 256;

/// A prime modulus that has passed the primality test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldSpec {
    p: u64,
}

impl PrimeFieldSpec {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= MAX_PRIME {
            return Err(FieldError::OrderTooLarge(p));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

/// The finite field `F_q`, `q = p^s`.
///
/// Elements are integer codes in `0..q`: the base-`p` digits of a code,
/// least significant first, are the coordinates of the element in the
/// polynomial basis `1, t, ..., t^(s-1)` of `F_p[t]/(modulus)`. For `s = 1`
/// the code is the residue itself.
#[derive(Clone)]
pub struct GaloisField {
    p: u64,
    degree: u32,
    order: u64,
    /// Monic modulus over `F_p`, low degree first; `[0, 1]` for prime fields.
    modulus: Vec<u64>,
    tables: Option<Arc<Tables>>,
}

struct Tables {
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl GaloisField {
    pub fn prime(spec: PrimeFieldSpec) -> Self {
        Self {
            p: spec.p,
            degree: 1,
            order: spec.p,
            modulus: vec![0, 1],
            tables: None,
        }
    }

    /// Builds `F_q` for a prime power `q`. Non-prime orders use the canonical
    /// (smallest) irreducible modulus over `F_p`.
    pub fn new(q: u64) -> Result<Self, FieldError> {
        let (p, s) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        let prime = Self::prime(PrimeFieldSpec::new(p)?);
        if s == 1 {
            return Ok(prime);
        }
        if q > MAX_EXTENSION_ORDER {
            return Err(FieldError::OrderTooLarge(q));
        }
        let modulus = poly::find_irreducible(&prime, s as usize);
        let mut field = Self {
            p,
            degree: s,
            order: q,
            modulus,
            tables: None,
        };
        if q <= TABLE_ORDER {
            field.tables = Some(Arc::new(field.build_tables()));
        }
        Ok(field)
    }

    fn build_tables(&self) -> Tables {
        let q = self.order;
        let mut mul = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                mul[(a * q + b) as usize] = self.mul_slow(a, b) as u32;
            }
        }
        let mut inv = vec![0u32; q as usize];
        for a in 1..q {
            let b = (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap();
            inv[a as usize] = b as u32;
        }
        Tables { mul, inv }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Degree `s` of the field over its prime subfield.
    pub fn prime_degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.order
    }

    fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut d = vec![0; self.degree as usize];
        for slot in d.iter_mut() {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.degree == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return a;
        }
        let d: Vec<u64> = self
            .digits(a)
            .into_iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.encode(&d)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            return mul_mod(a, b, self.p);
        }
        if let Some(t) = &self.tables {
            return t.mul[(a * self.order + b) as usize] as u64;
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        let s = self.degree as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * s - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        // reduce by the monic modulus, top-down
        for k in (s..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus[..s].iter().enumerate() {
                let t = mul_mod(c, m, p);
                prod[k - s + i] = (prod[k - s + i] + p - t) % p;
            }
            prod[k] = 0;
        }
        self.encode(&prod[..s])
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if self.degree == 1 {
            return Some(pow_mod(a, self.p - 2, self.p));
        }
        if let Some(t) = &self.tables {
            return Some(t.inv[a as usize] as u64);
        }
        Some(self.pow(a, self.order - 2))
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{}) mod {:?}", self.p, self.degree, self.modulus)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_products() {
        let f5 = GaloisField::new(5).unwrap();
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.inv(2), Some(3));
        assert_eq!(f5.sub(1, 3), 3);
        assert_eq!(f5.inv(0), None);
    }

    #[test]
    fn gf4_codes() {
        // code 2 is t, code 3 is 1 + t, modulus t^2 + t + 1
        let f4 = GaloisField::new(4).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert_eq!(f4.mul(2, 2), 3);
        assert_eq!(f4.mul(3, 3), 2);
        assert_eq!(f4.add(2, 3), 1);
        for a in 1..4 {
            assert_eq!(f4.mul(a, f4.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn tables_agree_with_direct_arithmetic() {
        for q in [4u64, 8, 9, 16, 25, 27, 49, 64, 81, 125, 243] {
            let f = GaloisField::new(q).unwrap();
            for a in 0..q {
                for b in (0..q).step_by(7) {
                    assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(matches!(GaloisField::new(6), Err(FieldError::NotPrimePower(6))));
        assert!(matches!(GaloisField::new(1), Err(FieldError::NotPrimePower(1))));
        assert!(matches!(PrimeFieldSpec::new(9), Err(FieldError::NotPrime(9))));
        assert!(matches!(
            GaloisField::new(1 << 20),
            Err(FieldError::OrderTooLarge(_))
        ));
    }
}
