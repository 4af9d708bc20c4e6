use std::sync::Arc;

use serde::Serialize;

use super::{poly, FieldError, GaloisField};

/// `F_{q^n} = F_q[u]/(modulus)` in the polynomial basis `1, u, ..., u^(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionField {
    base: GaloisField,
    modulus: Vec<u64>,
}

impl ExtensionField {
    pub fn new(base: GaloisField, modulus: Vec<u64>) -> Result<Self, FieldError> {
        let modulus = poly::trimmed(modulus);
        if modulus.iter().any(|&c| !base.contains(c)) {
            return Err(FieldError::CoefficientOutOfRange);
        }
        match poly::degree(&modulus) {
            None | Some(0) => return Err(FieldError::DegreeZero),
            Some(_) if !poly::is_monic(&base, &modulus) => return Err(FieldError::NotMonic),
            Some(_) if !poly::is_irreducible(&base, &modulus) => {
                return Err(FieldError::Reducible(poly::display(&modulus)))
            }
            Some(_) => {}
        }
        Ok(Self { base, modulus })
    }

    /// Extension of degree `n` with the canonical modulus.
    pub fn canonical(base: GaloisField, n: usize) -> Result<Self, FieldError> {
        if n == 0 {
            return Err(FieldError::DegreeZero);
        }
        let modulus = poly::find_irreducible(&base, n);
        Ok(Self { base, modulus })
    }

    pub fn base(&self) -> &GaloisField {
        &self.base
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// `q^n`, or `None` if it does not fit in 128 bits.
    pub fn order(&self) -> Option<u128> {
        (self.base.order() as u128).checked_pow(self.degree() as u32)
    }

    fn pad(&self, mut v: Vec<u64>) -> Vec<u64> {
        v.resize(self.degree(), 0);
        v
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.degree()]
    }

    pub fn one(&self) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = self.base.one();
        v
    }

    /// Coordinates of the element with integer index `idx` (base-`q` digits).
    pub fn coords_from_index(&self, mut idx: u128) -> Vec<u64> {
        let q = self.base.order() as u128;
        (0..self.degree())
            .map(|_| {
                let c = (idx % q) as u64;
                idx /= q;
                c
            })
            .collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| self.base.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| self.base.sub(x, y)).collect()
    }

    /// Schoolbook product reduced by the modulus.
    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.pad(poly::mulmod(&self.base, a, b, &self.modulus))
    }

    pub fn inv(&self, a: &[u64]) -> Option<Vec<u64>> {
        poly::inverse_mod(&self.base, a, &self.modulus).map(|v| self.pad(v))
    }

    pub fn element(self: &Arc<Self>, coords: Vec<u64>) -> Result<FieldElement, FieldError> {
        if coords.len() != self.degree() {
            return Err(FieldError::WrongLength {
                expected: self.degree(),
                got: coords.len(),
            });
        }
        if coords.iter().any(|&c| !self.base.contains(c)) {
            return Err(FieldError::CoefficientOutOfRange);
        }
        Ok(FieldElement {
            field: Arc::clone(self),
            coords,
        })
    }
}

/// An element of an [`ExtensionField`], tied to its field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldElement {
    #[serde(skip)]
    field: Arc<ExtensionField>,
    coords: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Inv,
    Div,
}

impl FieldElement {
    pub fn field(&self) -> &Arc<ExtensionField> {
        &self.field
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    fn with(&self, coords: Vec<u64>) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coords,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(&self.coords, &other.coords)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(&self.coords, &other.coords)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(&self.coords, &other.coords)))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        self.field
            .inv(&self.coords)
            .map(|c| self.with(c))
            .ok_or(FieldError::DivisionByZero)
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        self.mul(&other.inv()?)
    }
}

/// Applies `op` to `a` and `b`; `Inv` ignores `b`.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement, FieldError> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Inv => a.inv(),
        ArithOp::Div => a.div(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext(q: u64, n: usize) -> Arc<ExtensionField> {
        Arc::new(ExtensionField::canonical(GaloisField::new(q).unwrap(), n).unwrap())
    }

    #[test]
    fn f4_products() {
        let f4 = ext(2, 2);
        let t = f4.element(vec![0, 1]).unwrap();
        let one_plus_t = f4.element(vec![1, 1]).unwrap();
        assert_eq!(t.mul(&t).unwrap().coords(), &[1, 1]);
        assert_eq!(one_plus_t.mul(&one_plus_t).unwrap().coords(), &[0, 1]);
    }

    #[test]
    fn f5_as_degree_one_extension() {
        let f5 = ext(5, 1);
        let a = f5.element(vec![3]).unwrap();
        let b = f5.element(vec![4]).unwrap();
        assert_eq!(field_arith(&a, &b, ArithOp::Mul).unwrap().coords(), &[2]);
        assert_eq!(field_arith(&a, &b, ArithOp::Div).unwrap().coords(), &[2]);
    }

    #[test]
    fn errors_are_distinct() {
        let f9 = ext(3, 2);
        let zero = f9.element(vec![0, 0]).unwrap();
        let one = f9.element(vec![1, 0]).unwrap();
        assert_eq!(one.div(&zero), Err(FieldError::DivisionByZero));
        assert_eq!(zero.inv(), Err(FieldError::DivisionByZero));
        let other = ext(5, 2).element(vec![1, 0]).unwrap();
        assert_eq!(one.mul(&other), Err(FieldError::FieldMismatch));
        assert!(matches!(f9.element(vec![1]), Err(FieldError::WrongLength { .. })));
        assert_eq!(f9.element(vec![3, 0]), Err(FieldError::CoefficientOutOfRange));
    }

    #[test]
    fn rejects_bad_moduli() {
        let f2 = GaloisField::new(2).unwrap();
        assert!(matches!(
            ExtensionField::new(f2.clone(), vec![1, 0, 1]),
            Err(FieldError::Reducible(_))
        ));
        let f5 = GaloisField::new(5).unwrap();
        assert_eq!(ExtensionField::new(f5, vec![2, 0, 3]), Err(FieldError::NotMonic));
        assert_eq!(ExtensionField::new(f2, vec![1]), Err(FieldError::DegreeZero));
    }

    #[test]
    fn tower_over_f4() {
        let f64 = ext(4, 3);
        assert_eq!(f64.order(), Some(64));
        for i in 1..64u128 {
            let a = f64.coords_from_index(i);
            let b = f64.inv(&a).unwrap();
            assert_eq!(f64.mul(&a, &b), f64.one());
        }
    }
}
