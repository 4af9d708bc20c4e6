use std::fmt;

use serde::Serialize;

use crate::curves::{check_rr_hypothesis, family_data};
use crate::primes::{gap_within_exact, select_pair, Family, FieldKind, GapPolicy, PrimePair};

use super::report::{BoundReport, Check, Method, Witnesses};
use super::{check_characteristic, thm1_bound, BoundError, EnvelopeCase};

/// The pipeline could not certify a bound; names the first failing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Infeasible {
    pub reason: String,
    pub p: u64,
    pub n: u64,
    pub field: FieldKind,
    pub failing_check: String,
    pub checks: Vec<Check>,
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no constructive bound for p = {}, n = {} over {}: {} ({})",
            self.p, self.n, self.field, self.failing_check, self.reason
        )
    }
}

impl std::error::Error for Infeasible {}

fn infeasible(p: u64, n: u64, field: FieldKind, check: &str, reason: String, checks: Vec<Check>) -> Infeasible {
    Infeasible {
        reason,
        p,
        n,
        field,
        failing_check: check.to_string(),
        checks,
    }
}

/// `(p-1)(l+1)`-type bound for the lower prime against `2n + 2g - 2`. This is
/// the inequality that made `l_k` the last prime below the threshold.
fn pair_lower_check(p: u64, n: u64, pair: &PrimePair) -> Option<Check> {
    let d = family_data(p, pair.l_k).ok()?;
    let rhs = 2 * n + 2 * d.genus - 2;
    Some(
        Check::new(
            "pair_lower",
            d.n1_lower_p2,
            "<=",
            format!("2n+2g-2 = {rhs} (l_k = {})", pair.l_k),
            d.n1_lower_p2 <= rhs,
        )
        .informational(),
    )
}

/// Runs the witness pipeline: choose the prime pair straddling the threshold,
/// take the family curve for the upper prime `l_{k+1}`, and verify the place
/// count and Riemann-Roch hypotheses for it.
///
/// Over `F_{p^2}` the bound is `2n + g' - 1`; over `F_p` it is `3n + 2g'`.
/// The gap condition only matters for the closed forms and is recorded here
/// as an informational check.
pub fn constructive_bound(
    p: u64,
    n: u64,
    field: FieldKind,
    policy: &GapPolicy,
) -> Result<Result<BoundReport, Infeasible>, BoundError> {
    check_characteristic(p)?;
    if n < 2 {
        return Err(BoundError::DegreeTooSmall { n, min: 2 });
    }
    let family = Family::for_field(field, p);
    let pair = match select_pair(p, n, family) {
        Ok(pair) => pair,
        Err(e) => return Ok(Err(infeasible(p, n, field, "pair_selection", e.to_string(), vec![]))),
    };
    let data = match family_data(p, pair.l_k1) {
        Ok(d) => d,
        Err(e) => return Ok(Err(infeasible(p, n, field, "family_data", e.to_string(), vec![]))),
    };
    let g = data.genus;
    let mut checks = Vec::new();

    let need = 2 * n + 2 * g - 2;
    let (n1, q, case) = match field {
        FieldKind::Quadratic => (data.n1_lower_p2, p * p, EnvelopeCase::RationalPlaces),
        FieldKind::Prime => (data.n1_2n2_lower_p, p, EnvelopeCase::DegreeTwoPlaces),
    };
    checks.push(Check::new("places", n1, ">", need, n1 > need));

    let rr = check_rr_hypothesis(q, n, g);
    checks.push(Check::new(
        "rr",
        2 * g + 1,
        "<=",
        format!("{q}^(({n}-1)/2)*({q}^(1/2)-1)"),
        rr,
    ));

    if field == FieldKind::Prime {
        checks.push(Check::new(
            "non_special_divisor",
            format!("deg D = g'-1 = {}", g - 1),
            "exists",
            "non-special divisor of degree g-1 on X_0(N) for p >= 5 (cited)",
            true,
        ));
    }

    let gap_ok = gap_within_exact(pair.gap, pair.l_k, policy.alpha);
    checks.push(
        Check::new(
            "gap_at_witness",
            pair.gap,
            "<=",
            format!("{}^({})", pair.l_k, policy.alpha),
            gap_ok,
        )
        .informational(),
    );
    if let Some(c) = pair_lower_check(p, n, &pair) {
        checks.push(c);
    }

    if let Some(bad) = checks.iter().find(|c| c.required && !c.holds) {
        let name = bad.name.clone();
        let reason = format!("{} {} {} fails", bad.lhs, bad.relation, bad.rhs);
        return Ok(Err(infeasible(p, n, field, &name, reason, checks)));
    }

    let value = thm1_bound(case, n, g);
    let mut caveats = Vec::new();
    if pair.had_skip() {
        caveats.push(format!(
            "constructive-with-caveat: degenerate primes {:?} skipped in pair selection",
            pair.skipped
        ));
    }
    if !gap_ok {
        caveats.push(format!(
            "gap {} exceeds {}^({}); the bound stands but the closed form does not cover this n",
            pair.gap, pair.l_k, policy.alpha
        ));
    }
    Ok(Ok(BoundReport {
        p,
        n,
        field,
        method: Method::Constructive,
        value_real: value as f64,
        value_int: value as i64,
        valid_unconditional: true,
        policy: Some(policy.clone()),
        witnesses: Some(Witnesses {
            family: data.family,
            l_k: pair.l_k,
            l_k1: pair.l_k1,
            level: data.level,
            genus: g,
            n1_lower: n1,
            checks,
            skipped: pair.skipped.clone(),
        }),
        caveats,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::Alpha;

    fn empirical() -> GapPolicy {
        GapPolicy::empirical(Alpha::TWO_THIRDS, 100_000).unwrap().0
    }

    #[test]
    fn quadratic_p5() {
        let r = constructive_bound(5, 100, FieldKind::Quadratic, &empirical())
            .unwrap()
            .unwrap();
        assert_eq!(r.value_int, 300);
        assert!(r.valid_unconditional);
        let w = r.witnesses.unwrap();
        assert_eq!((w.l_k, w.l_k1, w.genus, w.level), (97, 101, 101, 1111));
        let c = w.check("places").unwrap();
        assert_eq!((c.lhs.as_str(), c.rhs.as_str(), c.holds), ("408", "400", true));
        assert!(w.check("rr").unwrap().holds);
        assert!(w.check("non_special_divisor").is_none());
    }

    #[test]
    fn prime_p5() {
        let r = constructive_bound(5, 100, FieldKind::Prime, &empirical())
            .unwrap()
            .unwrap();
        assert_eq!(r.value_int, 502);
        assert_eq!(r.value_real, 502.0);
        assert!(r.witnesses.unwrap().check("non_special_divisor").unwrap().holds);
    }

    #[test]
    fn quadratic_p11() {
        let r = constructive_bound(11, 810, FieldKind::Quadratic, &empirical())
            .unwrap()
            .unwrap();
        assert_eq!(r.value_int, 1822);
        let w = r.witnesses.unwrap();
        assert_eq!((w.l_k, w.l_k1, w.genus), (97, 101, 203));
        let c = w.check("places").unwrap();
        assert_eq!((c.lhs.as_str(), c.rhs.as_str()), ("2040", "2024"));
    }

    #[test]
    fn skip_is_a_caveat() {
        let r = constructive_bound(5, 8, FieldKind::Quadratic, &empirical())
            .unwrap()
            .unwrap();
        assert_eq!(r.witnesses.as_ref().unwrap().skipped, vec![5]);
        assert!(r.caveats[0].starts_with("constructive-with-caveat"));
    }

    #[test]
    fn infeasible_small_n() {
        let e = constructive_bound(5, 4, FieldKind::Quadratic, &empirical())
            .unwrap()
            .unwrap_err();
        assert_eq!(e.failing_check, "pair_selection");
        let v = serde_json::to_value(&e).unwrap();
        assert!(v["reason"].is_string());
        assert!(constructive_bound(4, 100, FieldKind::Prime, &empirical()).is_err());
    }

    #[test]
    fn ledger_of_checks_is_json() {
        let r = constructive_bound(7, 60, FieldKind::Prime, &GapPolicy::dudek())
            .unwrap()
            .unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["method"], "constructive");
        assert_eq!(v["witnesses"]["N"], 11 * r.witnesses.as_ref().unwrap().l_k1);
        assert_eq!(v["policy"]["name"], "Dudek");
    }
}
