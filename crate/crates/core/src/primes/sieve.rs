use crate::arith::next_prime;

use super::PrimeError;

/// Largest sieve limit accepted by [`sieve`].
pub const DEFAULT_SIEVE_CAP: u64 = 1_000_000_000;
/// Sieve limit used when none is configured.
pub const DEFAULT_SIEVE_LIMIT: u64 = 10_000_000;

/// All primes `<= limit`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Membership for `x <= limit`; `None` beyond the table.
    pub fn contains(&self, x: u64) -> Option<bool> {
        (x <= self.limit).then(|| self.primes.binary_search(&x).is_ok())
    }

    /// Smallest prime `> x`, read from the table when possible.
    pub fn next_after(&self, x: u64) -> u64 {
        let i = self.primes.partition_point(|&p| p <= x);
        match self.primes.get(i) {
            Some(&p) => p,
            None => next_prime(x.max(self.limit)),
        }
    }

    /// Primes in the open interval `(a, b)`; `b` must not exceed the limit.
    pub fn between(&self, a: u64, b: u64) -> &[u64] {
        assert!(b <= self.limit.saturating_add(1), "interval leaves the table");
        let lo = self.primes.partition_point(|&p| p <= a);
        let hi = self.primes.partition_point(|&p| p < b);
        &self.primes[lo..hi.max(lo)]
    }
}

pub fn sieve(limit: u64) -> Result<PrimeTable, PrimeError> {
    sieve_with_cap(limit, DEFAULT_SIEVE_CAP)
}

/// Sieve of Eratosthenes over odd numbers, one bit per odd candidate.
pub fn sieve_with_cap(limit: u64, cap: u64) -> Result<PrimeTable, PrimeError> {
    if limit < 2 {
        return Err(PrimeError::LimitTooSmall { limit, min: 2 });
    }
    if limit > cap {
        return Err(PrimeError::LimitTooLarge { limit, cap });
    }
    // bit i stands for 2i + 1; set = composite
    let slots = (limit as usize - 1) / 2 + 1;
    let mut composite = vec![0u64; slots.div_ceil(64)];
    let is_set = |bits: &[u64], i: usize| bits[i >> 6] >> (i & 63) & 1 == 1;
    composite[0] |= 1; // 1 is not prime
    let mut i = 1usize;
    loop {
        let p = 2 * i + 1;
        if p * p > limit as usize {
            break;
        }
        if !is_set(&composite, i) {
            let mut j = p * p / 2;
            while j < slots {
                composite[j >> 6] |= 1 << (j & 63);
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = Vec::with_capacity(estimate_count(limit));
    primes.push(2);
    primes.extend((1..slots).filter(|&i| !is_set(&composite, i)).map(|i| 2 * i as u64 + 1));
    Ok(PrimeTable { limit, primes })
}

fn estimate_count(limit: u64) -> usize {
    let x = limit as f64;
    (1.26 * x / x.ln().max(1.0)) as usize + 16
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;

    #[test]
    fn small_tables() {
        assert_eq!(sieve(10).unwrap().primes(), &[2, 3, 5, 7]);
        assert_eq!(sieve(2).unwrap().primes(), &[2]);
        assert_eq!(sieve(3).unwrap().primes(), &[2, 3]);
        assert_eq!(sieve(100).unwrap().len(), 25);
        assert_eq!(sieve(1_000_000).unwrap().len(), 78_498);
    }

    #[test]
    fn table_matches_miller_rabin() {
        let t = sieve(50_001).unwrap();
        let expected: Vec<u64> = (0..=50_001).filter(|&n| is_prime(n)).collect();
        assert_eq!(t.primes(), expected.as_slice());
    }

    #[test]
    fn limits_are_enforced() {
        assert_eq!(sieve(1), Err(PrimeError::LimitTooSmall { limit: 1, min: 2 }));
        assert_eq!(
            sieve(DEFAULT_SIEVE_CAP + 1),
            Err(PrimeError::LimitTooLarge {
                limit: DEFAULT_SIEVE_CAP + 1,
                cap: DEFAULT_SIEVE_CAP
            })
        );
        assert!(sieve_with_cap(1000, 999).is_err());
    }

    #[test]
    fn queries() {
        let t = sieve(100).unwrap();
        assert_eq!(t.contains(97), Some(true));
        assert_eq!(t.contains(91), Some(false));
        assert_eq!(t.contains(101), None);
        assert_eq!(t.next_after(89), 97);
        assert_eq!(t.next_after(97), 101);
        assert_eq!(t.between(89, 97), &[] as &[u64]);
        assert_eq!(t.between(10, 20), &[11, 13, 17, 19]);
    }
}
