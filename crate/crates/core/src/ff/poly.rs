//! Dense univariate polynomials over a [`GaloisField`], stored as coefficient
//! vectors with the constant term first. The zero polynomial is empty.

use crate::arith::factorize;

use super::GaloisField;

pub fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn trimmed(mut a: Vec<u64>) -> Vec<u64> {
    trim(&mut a);
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn is_monic(f: &GaloisField, a: &[u64]) -> bool {
    degree(a).is_some_and(|d| a[d] == f.one())
}

pub fn add(f: &GaloisField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            f.add(x, y)
        })
        .collect();
    trimmed(out)
}

pub fn sub(f: &GaloisField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            f.sub(x, y)
        })
        .collect();
    trimmed(out)
}

pub fn scale(f: &GaloisField, a: &[u64], c: u64) -> Vec<u64> {
    trimmed(a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul(f: &GaloisField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trimmed(out)
}

/// Quotient and remainder. Panics if `m` is zero.
pub fn divrem(f: &GaloisField, a: &[u64], m: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = f.inv(m[dm]).unwrap();
    let mut r = trimmed(a.to_vec());
    let mut quot = vec![0u64; r.len().saturating_sub(dm)];
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - dm;
        quot[shift] = c;
        for (i, &mi) in m[..=dm].iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, mi));
        }
        trim(&mut r);
    }
    (trimmed(quot), r)
}

pub fn rem(f: &GaloisField, a: &[u64], m: &[u64]) -> Vec<u64> {
    divrem(f, a, m).1
}

pub fn mulmod(f: &GaloisField, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: &GaloisField, a: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut base = rem(f, a, m);
    let mut acc = rem(f, &[f.one()], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        base = mulmod(f, &base, &base, m);
        e >>= 1;
    }
    acc
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub fn gcd(f: &GaloisField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = trimmed(a.to_vec());
    let mut y = trimmed(b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    make_monic(f, &x)
}

pub fn make_monic(f: &GaloisField, a: &[u64]) -> Vec<u64> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => scale(f, &a[..=d], f.inv(a[d]).unwrap()),
    }
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn inverse_mod(f: &GaloisField, a: &[u64], m: &[u64]) -> Option<Vec<u64>> {
    let (mut r0, mut r1) = (trimmed(m.to_vec()), rem(f, a, m));
    let (mut s0, mut s1) = (Vec::new(), vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = f.inv(r0[0]).unwrap();
    Some(rem(f, &scale(f, &s0, c), m))
}

pub fn eval(f: &GaloisField, a: &[u64], x: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// `u^(q^k) mod m`, by `k` repeated `q`-th powers.
fn frobenius_power(f: &GaloisField, k: usize, m: &[u64]) -> Vec<u64> {
    let mut h = rem(f, &[0, f.one()], m);
    for _ in 0..k {
        h = powmod(f, &h, f.order(), m);
    }
    h
}

/// Rabin's irreducibility test for a polynomial of degree >= 1.
pub fn is_irreducible(f: &GaloisField, m: &[u64]) -> bool {
    let Some(n) = degree(m) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let m = &m[..=n];
    let x = [0, f.one()];
    for (r, _) in factorize(n as u64) {
        let h = frobenius_power(f, n / r as usize, m);
        let g = gcd(f, &sub(f, &h, &x), m);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    let h = frobenius_power(f, n, m);
    sub(f, &h, &rem(f, &x, m)).is_empty()
}

/// The monic polynomial of degree `d` whose lower coefficients are the base-`q`
/// digits of `code` (constant term least significant).
pub fn monic_from_code(f: &GaloisField, mut code: u128, d: usize) -> Vec<u64> {
    let q = f.order() as u128;
    let mut out = vec![0u64; d + 1];
    for slot in out.iter_mut().take(d) {
        *slot = (code % q) as u64;
        code /= q;
    }
    out[d] = f.one();
    out
}

/// Monic irreducible polynomials of degree `d` in canonical order: increasing
/// integer code of the non-leading coefficients.
pub fn monic_irreducibles(f: &GaloisField, d: usize) -> impl Iterator<Item = Vec<u64>> + '_ {
    let count = (f.order() as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    (0..count)
        .map(move |code| monic_from_code(f, code, d))
        .filter(move |m| is_irreducible(f, m))
}

/// The canonical (smallest-code) monic irreducible polynomial of degree `n`.
pub fn find_irreducible(f: &GaloisField, n: usize) -> Vec<u64> {
    assert!(n >= 1, "degree must be at least 1");
    monic_irreducibles(f, n)
        .next()
        .expect("irreducible polynomials exist in every degree")
}

/// Human-readable form in the variable `u`, highest degree first.
pub fn display(a: &[u64]) -> String {
    let Some(d) = degree(a) else {
        return "0".to_string();
    };
    let mut terms = Vec::new();
    for i in (0..=d).rev() {
        let c = a[i];
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "u".to_string(),
            _ => format!("u^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    terms.join("+")
}
