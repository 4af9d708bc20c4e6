use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bounds::{thm1_bound, EnvelopeCase};

use super::algorithm::BilinearAlgorithm;
use super::MultError;

/// Largest `q^(2n)` checked pair by pair.
pub const EXHAUSTIVE_LIMIT: u128 = 1 << 24;
pub const DEFAULT_TRIALS: u64 = 1000;
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Exhaustive when `q^(2n) <= 2^24`, otherwise the default random trials.
    Auto,
    Exhaustive,
    Random(u64),
}

impl FromStr for VerifyMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(VerifyMode::Auto),
            "exhaustive" => Ok(VerifyMode::Exhaustive),
            "random" => Ok(VerifyMode::Random(DEFAULT_TRIALS)),
            _ => {
                let n = s
                    .strip_prefix("random:")
                    .and_then(|t| t.parse().ok())
                    .filter(|&t: &u64| t > 0)
                    .ok_or_else(|| format!("unknown verification mode {s:?}"))?;
                Ok(VerifyMode::Random(n))
            }
        }
    }
}

/// The mode actually run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunMode {
    Exhaustive,
    Random { trials: u64, seed: u64 },
}

impl fmt::Display for RunMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunMode::Exhaustive => f.write_str("exhaustive"),
            RunMode::Random { trials, .. } => write!(f, "random({trials})"),
        }
    }
}

impl Serialize for RunMode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub x: Vec<u64>,
    pub y: Vec<u64>,
    pub expected: Vec<u64>,
    pub got: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub mode: RunMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub pairs_checked: u64,
    pub failures: Vec<Mismatch>,
    pub rank: usize,
    /// `2n - 1` for rational-only algorithms, `3n` when degree-2 places are used.
    pub envelope: u64,
}

/// `q^(2n)`, saturating.
fn pair_space(algo: &BilinearAlgorithm) -> u128 {
    (algo.q() as u128)
        .checked_pow(2 * algo.n() as u32)
        .unwrap_or(u128::MAX)
}

pub fn envelope(algo: &BilinearAlgorithm) -> u64 {
    let case = if algo.uses_degree_two() {
        EnvelopeCase::DegreeTwoPlaces
    } else {
        EnvelopeCase::RationalPlaces
    };
    thm1_bound(case, algo.n() as u64, 0)
}

fn check_pair(algo: &BilinearAlgorithm, x: &[u64], y: &[u64], ex: &[u64], ey: &[u64]) -> Option<Mismatch> {
    let got = algo.combine(ex, ey);
    let expected = algo.extension().mul(x, y);
    (got != expected).then(|| Mismatch {
        x: x.to_vec(),
        y: y.to_vec(),
        expected,
        got,
    })
}

/// Checks the bilinear identity against reference multiplication. The space
/// of pairs is enumerated whenever `q^(2n) <= 2^24`, whatever mode is
/// requested; a random request on a larger space draws seeded uniform pairs.
/// The first mismatch aborts with the offending pair.
pub fn verify(algo: &BilinearAlgorithm, mode: VerifyMode, seed: u64) -> Result<VerificationReport, MultError> {
    let space = pair_space(algo);
    let run = if space <= EXHAUSTIVE_LIMIT {
        RunMode::Exhaustive
    } else {
        match mode {
            VerifyMode::Exhaustive => {
                return Err(MultError::ExhaustiveTooLarge {
                    q: algo.q(),
                    n: algo.n(),
                })
            }
            VerifyMode::Auto => RunMode::Random {
                trials: DEFAULT_TRIALS,
                seed,
            },
            VerifyMode::Random(trials) => RunMode::Random { trials, seed },
        }
    };
    let ext = algo.extension();
    let pairs_checked = match run {
        RunMode::Exhaustive => {
            let size = ext.order().expect("small field") as usize;
            let elems: Vec<Vec<u64>> = (0..size as u128).map(|i| ext.coords_from_index(i)).collect();
            let evals: Vec<Vec<u64>> = elems.iter().map(|x| algo.evaluate(x)).collect();
            let bad = (0..size).into_par_iter().find_map_first(|i| {
                (0..size).find_map(|j| check_pair(algo, &elems[i], &elems[j], &evals[i], &evals[j]))
            });
            if let Some(m) = bad {
                return Err(MultError::Mismatch(Box::new(m)));
            }
            (size * size) as u64
        }
        RunMode::Random { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let q = algo.q();
            for _ in 0..trials {
                let x: Vec<u64> = (0..algo.n()).map(|_| rng.gen_range(0..q)).collect();
                let y: Vec<u64> = (0..algo.n()).map(|_| rng.gen_range(0..q)).collect();
                if let Some(m) = check_pair(algo, &x, &y, &algo.evaluate(&x), &algo.evaluate(&y)) {
                    return Err(MultError::Mismatch(Box::new(m)));
                }
            }
            trials
        }
    };
    Ok(VerificationReport {
        mode: run,
        seed: match run {
            RunMode::Random { seed, .. } => Some(seed),
            RunMode::Exhaustive => None,
        },
        pairs_checked,
        failures: Vec::new(),
        rank: algo.rank(),
        envelope: envelope(algo),
    })
}
