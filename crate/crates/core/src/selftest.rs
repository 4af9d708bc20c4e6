//! Invariant suites run by the `selftest` command. Output is deterministic:
//! no timings, fixed seeds, fixed iteration order.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{is_prime, prime_power};
use crate::bounds::{
    asymptotic_coefficient, closed_form, constructive_bound, remark_prime, remark_quadratic, FieldKind,
};
use crate::curves::{genus_x0, CurveFamily};
use crate::ff::count_places_rational_ff;
use crate::mult::{build, verify, VerifyMode, DEFAULT_SEED};
use crate::primes::{gap_within_exact, select_pair, verify_gaps, Alpha, Family, GapPolicy};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

fn suite(name: &str, passed: bool, checked: u64, detail: impl Into<String>) -> SuiteResult {
    SuiteResult {
        name: name.to_string(),
        passed,
        checked,
        detail: detail.into(),
    }
}

/// `(q, n, allow_deg2, expected rank)` for the exhaustive multiplication suite;
/// `None` where only correctness is pinned.
pub const MULT_CASES: &[(u64, usize, Option<usize>)] = &[
    (2, 2, Some(3)),
    (3, 2, Some(3)),
    (4, 2, Some(3)),
    (5, 2, None),
    (2, 3, Some(6)),
    (4, 3, Some(5)),
    (5, 3, None),
    (3, 3, None),
    (5, 4, None),
];

fn mult_suite(seed: u64) -> SuiteResult {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for &(q, n, rank) in MULT_CASES {
        let outcome = build(q, n, true).map_err(|e| e.to_string()).and_then(|a| {
            verify(&a, VerifyMode::Exhaustive, seed)
                .map_err(|e| e.to_string())
                .map(|r| (a.rank(), r))
        });
        match outcome {
            Ok((r, rep)) => {
                pairs += rep.pairs_checked;
                if rank.is_some_and(|want| want != r) || r as u64 > rep.envelope || r < 2 * n - 1 {
                    bad.push(format!("(q={q}, n={n}) rank {r}"));
                }
            }
            Err(e) => bad.push(format!("(q={q}, n={n}) {e}")),
        }
    }
    suite("multiplication", bad.is_empty(), pairs, bad.join("; "))
}

/// Primes `l < limit` where the `Gamma_0(N)` genus disagrees with the family
/// closed form, for both families.
pub fn genus_family_mismatches(limit: u64) -> (u64, Vec<u64>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for l in (2..limit).filter(|&l| is_prime(l)) {
        for fam in [CurveFamily::ElevenL, CurveFamily::TwentyThreeL] {
            if l == fam.level_prime() {
                continue;
            }
            checked += 1;
            if genus_x0(fam.level_prime() * l).map(|d| d.genus) != Ok(fam.genus(l)) {
                bad.push(fam.level_prime() * l);
            }
        }
    }
    (checked, bad)
}

/// Levels `N <= limit` violating `12g - 12 + 3 nu2 + 4 nu3 + 6 nu_inf = mu`.
pub fn gamma0_identity_failures(limit: u64) -> Vec<u64> {
    (1..=limit)
        .filter(|&n| {
            let d = genus_x0(n).expect("positive level");
            12 * d.genus as i64 - 12 + 3 * d.nu2 as i64 + 4 * d.nu3 as i64 + 6 * d.nu_inf as i64 != d.mu as i64
        })
        .collect()
}

/// Prime powers `q <= limit` violating `N1(q^2) = N1(q) + 2 N2(q)`.
pub fn descent_failures(limit: u64) -> (u64, Vec<u64>) {
    let qs: Vec<u64> = (2..=limit).filter(|&q| prime_power(q).is_some()).collect();
    let bad = qs
        .iter()
        .copied()
        .filter(|&q| count_places_rational_ff(q * q, 1) != count_places_rational_ff(q, 1) + 2 * count_places_rational_ff(q, 2))
        .collect();
    (qs.len() as u64, bad)
}

/// One cell where the constructive value exceeds the closed form although the
/// pair needed no skip and the gap condition holds at the witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConsistencyViolation {
    pub p: u64,
    pub n: u64,
    pub field: FieldKind,
    pub l_k: u64,
    pub l_k1: u64,
    pub constructive: i64,
    pub closed_form: f64,
}

/// Compares constructive and closed-form values (gap exponent 2/3, validity
/// flag ignored) on every eligible cell. Returns the number of eligible
/// cells and the violations, in `(p, n, field)` order.
pub fn proof_consistency(ps: &[u64], n_lo: u64, n_hi: u64) -> (u64, Vec<ConsistencyViolation>) {
    let policy = GapPolicy::dudek();
    let cells: Vec<(u64, u64, FieldKind)> = ps
        .iter()
        .flat_map(|&p| {
            (n_lo..=n_hi).flat_map(move |n| [FieldKind::Quadratic, FieldKind::Prime].map(|f| (p, n, f)))
        })
        .collect();
    let results: Vec<Option<Option<ConsistencyViolation>>> = cells
        .par_iter()
        .map(|&(p, n, field)| {
            let pair = select_pair(p, n, Family::for_field(field, p)).ok()?;
            if pair.had_skip() || !gap_within_exact(pair.gap, pair.l_k, Alpha::TWO_THIRDS) {
                return None;
            }
            let c = constructive_bound(p, n, field, &policy).ok()?.ok()?;
            let cf = closed_form(p, n, field, &policy).ok()?;
            Some((c.value_real > cf.value_real).then(|| ConsistencyViolation {
                p,
                n,
                field,
                l_k: pair.l_k,
                l_k1: pair.l_k1,
                constructive: c.value_int,
                closed_form: cf.value_real,
            }))
        })
        .collect();
    let eligible = results.iter().filter(|r| r.is_some()).count() as u64;
    (eligible, results.into_iter().flatten().flatten().collect())
}

fn primes_in(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&p| is_prime(p))
}

pub fn run(seed: u64) -> SelftestReport {
    let mut suites = vec![mult_suite(seed)];

    let (checked, bad) = genus_family_mismatches(10_000);
    suites.push(suite("genus_families", bad.is_empty(), checked, format!("mismatched levels: {bad:?}")));

    let gaps = verify_gaps(1_000_000, Alpha::TWO_THIRDS).expect("limit is valid");
    suites.push(suite(
        "gap_violations",
        gaps.violations == [7],
        1,
        format!("violations below 10^6 at 2/3: {:?}", gaps.violations),
    ));

    let (mut checked, mut bad) = (0, Vec::new());
    for p in primes_in(5, 10_000) {
        checked += 1;
        if remark_quadratic(p) != (true, true) || remark_prime(p) != (true, true) {
            bad.push(p);
        }
    }
    suites.push(suite("asymptotic_dominance", bad.is_empty(), checked, format!("failing p: {bad:?}")));

    let (pol, _) = GapPolicy::empirical(Alpha::TWO_THIRDS, 1_000_000).expect("limit is valid");
    let value = |p, n, field| {
        constructive_bound(p, n, field, &pol)
            .ok()
            .and_then(|r| r.ok())
            .map(|r| r.value_int)
    };
    let got = [
        value(5, 100, FieldKind::Quadratic),
        value(5, 100, FieldKind::Prime),
        value(11, 810, FieldKind::Quadratic),
    ];
    suites.push(suite(
        "constructive_examples",
        got == [Some(300), Some(502), Some(1822)],
        3,
        format!("{got:?}"),
    ));

    let (eligible, violations) = proof_consistency(&[5, 7, 13, 17], 20, 5000);
    let listed: Vec<String> = violations
        .iter()
        .map(|v| format!("p={} n={} {} {} > {}", v.p, v.n, v.field, v.constructive, v.closed_form))
        .collect();
    suites.push(suite(
        "constructive_vs_closed_form",
        violations.is_empty(),
        eligible,
        listed.join("; "),
    ));

    let cf = closed_form(5, 100, FieldKind::Quadratic, &GapPolicy::dudek()).expect("p = 5 is valid");
    let asym_ok = [5u64, 7, 11, 13].iter().all(|&p| {
        let pi = p as i64;
        asymptotic_coefficient(p, FieldKind::Quadratic).ok()
            == Some(crate::bounds::decimal::ratio(2 * (pi - 2), pi - 3))
            && asymptotic_coefficient(p, FieldKind::Prime).ok()
                == Some(crate::bounds::decimal::ratio(3 * pi - 5, pi - 3))
    });
    suites.push(suite(
        "closed_form_reproduction",
        (cf.value_real - 316.91).abs() <= 0.02 && !cf.valid_unconditional && asym_ok,
        5,
        format!("closed form (5, 100) = {}", cf.value_real),
    ));

    let (qs, bad_descent) = descent_failures(64);
    let bad_gamma = gamma0_identity_failures(10_000);
    suites.push(suite(
        "place_and_genus_identities",
        bad_descent.is_empty() && bad_gamma.is_empty(),
        qs + 10_000,
        format!("descent failures {bad_descent:?}, Gamma_0 failures {bad_gamma:?}"),
    ));

    SelftestReport {
        seed,
        passed: suites.iter().all(|s| s.passed),
        suites,
    }
}

pub fn run_default() -> SelftestReport {
    run(DEFAULT_SEED)
}
