use num_rational::BigRational;

use crate::primes::{policy_floor, select_pair, Family, FamilyKind, FieldKind, GapPolicy, PolicyName};

use super::decimal::{int, one, ratio};
use super::epsilon::epsilon;
use super::report::{rounded, BoundReport, Method};
use super::{check_characteristic, BoundError};

/// Exact value of the closed form for a given (already rounded) `eps`.
fn formula(p: u64, n: u64, field: FieldKind, eps: &BigRational) -> BigRational {
    let pm3 = int(p as i64 - 3);
    let n = int(n as i64);
    let e1 = one() + eps;
    let eleven = p == 11;
    match field {
        FieldKind::Quadratic => {
            let lead = int(2) * (one() + &e1 / &pm3) * n;
            if eleven {
                lead - int(2) * &e1 * int(p as i64 - 1) / &pm3
            } else {
                lead - &e1 * int(p as i64 + 1) / &pm3 - one()
            }
        }
        FieldKind::Prime => {
            let lead = int(3) * (one() + ratio(4, 3) * &e1 / &pm3) * n;
            if eleven {
                lead - int(4) * &e1 * int(p as i64 - 1) / &pm3 + one()
            } else {
                lead - int(2) * &e1 * int(p as i64 + 1) / &pm3
            }
        }
    }
}

/// The closed form evaluated exactly at the conservatively rounded `eps_p(n)`.
pub fn closed_form_exact(p: u64, n: u64, field: FieldKind, policy: &GapPolicy) -> Result<BigRational, BoundError> {
    check_characteristic(p)?;
    if n < 1 {
        return Err(BoundError::DegreeTooSmall { n, min: 1 });
    }
    let eps = epsilon(p, n, policy.alpha, FamilyKind::for_characteristic(p));
    Ok(formula(p, n, field, &eps.exact()))
}

/// Closed-form bound for `F_{p^2}` or `F_p`; `valid_unconditional` records
/// whether `n` reaches the policy floor.
pub fn closed_form(p: u64, n: u64, field: FieldKind, policy: &GapPolicy) -> Result<BoundReport, BoundError> {
    let value = closed_form_exact(p, n, field, policy)?;
    let (value_real, value_int) = rounded(&value);
    let kind = FamilyKind::for_characteristic(p);
    let floor = policy_floor(policy, kind, p);
    let mut valid = floor.admits(n);
    let mut caveats = Vec::new();
    if let Some(c) = policy.caveat() {
        caveats.push(c);
    }
    if policy.name == PolicyName::Empirical && valid {
        // the sieve evidence has to reach the pair the proof actually uses
        match select_pair(p, n, Family::new(field, kind)) {
            Ok(pair) if pair.had_skip() => {
                valid = false;
                caveats.push(format!("prime pair skipped {:?}", pair.skipped));
            }
            Ok(pair) if !policy.covers(pair.l_k) => {
                valid = false;
                caveats.push(format!("l_k = {} lies outside the verified sieve range", pair.l_k));
            }
            Ok(_) => {}
            Err(e) => {
                valid = false;
                caveats.push(e.to_string());
            }
        }
    }
    if !valid {
        caveats.push(format!("valid only for n >= {floor}"));
    }
    if p == 11 && field == FieldKind::Prime {
        caveats.push("p = 11 offset is +1; summing 3n + 2(2l+1) gives +2".to_string());
    }
    Ok(BoundReport {
        p,
        n,
        field,
        method: Method::ClosedForm,
        value_real,
        value_int,
        valid_unconditional: valid,
        policy: Some(policy.clone()),
        witnesses: None,
        caveats,
    })
}

pub fn closed_form_quadratic(p: u64, n: u64, policy: &GapPolicy) -> Result<BoundReport, BoundError> {
    closed_form(p, n, FieldKind::Quadratic, policy)
}

pub fn closed_form_prime(p: u64, n: u64, policy: &GapPolicy) -> Result<BoundReport, BoundError> {
    closed_form(p, n, FieldKind::Prime, policy)
}

/// Limit of `bound / n` as `n` grows: `2(p-2)/(p-3)` over `F_{p^2}` and
/// `(3p-5)/(p-3)` over `F_p`.
pub fn asymptotic_coefficient(p: u64, field: FieldKind) -> Result<BigRational, BoundError> {
    check_characteristic(p)?;
    let p = p as i64;
    Ok(match field {
        FieldKind::Quadratic => ratio(2 * (p - 2), p - 3),
        FieldKind::Prime => ratio(3 * p - 5, p - 3),
    })
}
