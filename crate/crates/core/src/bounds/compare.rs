use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::primes::{FieldKind, GapPolicy};

use super::closed::{asymptotic_coefficient, closed_form};
use super::constructive::constructive_bound;
use super::decimal::{int, ratio};
use super::prior::{applicable_priors, prior_coefficient, prior_report};
use super::report::{BoundReport, Method};
use super::{check_characteristic, BoundError};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticEntry {
    pub method: Method,
    pub q: u64,
    /// Exact rational coefficient.
    pub coefficient: String,
    pub coefficient_real: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FieldComparison {
    pub field: FieldKind,
    /// Ascending by `value_real`.
    pub entries: Vec<BoundReport>,
    pub best: Option<Method>,
    pub asymptotic: Vec<AsymptoticEntry>,
    /// New asymptotic coefficient is strictly below every prior one.
    pub asymptotic_dominates: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub p: u64,
    pub n: u64,
    pub quadratic: FieldComparison,
    pub prime: FieldComparison,
}

fn asym(method: Method, q: u64, c: BigRational) -> AsymptoticEntry {
    AsymptoticEntry {
        method,
        q,
        coefficient: c.to_string(),
        coefficient_real: c.to_f64().unwrap_or(f64::NAN),
    }
}

fn compare_field(p: u64, n: u64, field: FieldKind, policy: &GapPolicy) -> Result<FieldComparison, BoundError> {
    let mut entries = Vec::new();
    let mut notes = Vec::new();
    let closed = closed_form(p, n, field, policy)?;
    entries.push(closed.clone());
    match constructive_bound(p, n, field, policy)? {
        Ok(r) => {
            if r.value_real > closed.value_real {
                notes.push(format!(
                    "constructive {} exceeds closed form {}",
                    r.value_int, closed.value_real
                ));
            }
            entries.push(r);
        }
        Err(inf) => notes.push(format!("constructive infeasible: {}", inf.failing_check)),
    }
    let mut asymptotic = vec![asym(Method::ClosedForm, p, asymptotic_coefficient(p, field)?)];
    for (variant, q) in applicable_priors(p, field) {
        entries.push(prior_report(variant, q, p, n, field)?);
        asymptotic.push(asym(Method::Prior(variant), q, prior_coefficient(variant, q)?));
    }
    if p == 11 && field == FieldKind::Prime {
        notes.push("p = 11 closed form uses offset +1; the proof-level sum 3n + 2(2l+1) gives +2".to_string());
    }
    entries.sort_by(|a, b| {
        a.value_real
            .total_cmp(&b.value_real)
            .then_with(|| a.method.cmp(&b.method))
    });
    let new = asymptotic_coefficient(p, field)?;
    let asymptotic_dominates = applicable_priors(p, field)
        .into_iter()
        .all(|(v, q)| prior_coefficient(v, q).map_or(false, |c| new < c));
    Ok(FieldComparison {
        field,
        best: entries.first().map(|e| e.method),
        entries,
        asymptotic,
        asymptotic_dominates,
        notes,
    })
}

/// Every applicable bound for `(p, n)` over both fields, smallest first.
pub fn compare_all(p: u64, n: u64, policy: &GapPolicy) -> Result<ComparisonReport, BoundError> {
    check_characteristic(p)?;
    Ok(ComparisonReport {
        p,
        n,
        quadratic: compare_field(p, n, FieldKind::Quadratic, policy)?,
        prime: compare_field(p, n, FieldKind::Prime, policy)?,
    })
}

/// Exact comparison of the `1/(p-3)` term against the two `F_{p^2}` priors:
/// `1/(p-3) < p/(p-3+(p-1)p/(p+1))` and `1/(p-3) < 2/(p-33/16)`.
pub fn remark_quadratic(p: u64) -> (bool, bool) {
    let pi = p as i64;
    let lhs = ratio(1, pi - 3);
    let pr = int(pi);
    let prior_q = &pr / (int(pi - 3) + int(pi - 1) * &pr / int(pi + 1));
    let prior_p = int(2) / (&pr - ratio(33, 16));
    (lhs < prior_q, lhs < prior_p)
}

/// Exact comparison of `(4/3)/(p-3)` against the two `F_p` priors:
/// `(4/3)/(p-3) < (4/3)p/(p-3+2(p-1)p/(p+1))` and `(4/3)/(p-3) < 8/(3p-5)`.
pub fn remark_prime(p: u64) -> (bool, bool) {
    let pi = p as i64;
    let four_thirds = ratio(4, 3);
    let lhs = &four_thirds / int(pi - 3);
    let pr = int(pi);
    let prior_q = four_thirds * &pr / (int(pi - 3) + int(2) * int(pi - 1) * &pr / int(pi + 1));
    let prior_p = ratio(8, 3 * pi - 5);
    (lhs < prior_q, lhs < prior_p)
}

/// Closed-form, constructive and prior rows for every `(p, n)` cell, in
/// `(p, n, field, method)` order. Cells are evaluated in parallel.
pub fn tabulate(p_set: &[u64], ns: &[u64], policy: &GapPolicy) -> Result<Vec<BoundReport>, BoundError> {
    let cells: Vec<(u64, u64)> = p_set
        .iter()
        .flat_map(|&p| ns.iter().map(move |&n| (p, n)))
        .collect();
    let rows: Result<Vec<Vec<BoundReport>>, BoundError> = cells
        .par_iter()
        .map(|&(p, n)| {
            check_characteristic(p)?;
            let mut out = Vec::new();
            for field in [FieldKind::Quadratic, FieldKind::Prime] {
                let mut cell = vec![closed_form(p, n, field, policy)?];
                if n >= 2 {
                    if let Ok(r) = constructive_bound(p, n, field, policy)? {
                        cell.push(r);
                    }
                }
                for (v, q) in applicable_priors(p, field) {
                    cell.push(prior_report(v, q, p, n, field)?);
                }
                cell.sort_by_key(|r| r.method);
                out.extend(cell);
            }
            Ok(out)
        })
        .collect();
    Ok(rows?.into_iter().flatten().collect())
}
