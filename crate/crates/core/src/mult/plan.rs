use serde::{Deserialize, Serialize};

use crate::ff::{poly, GaloisField};

use super::MultError;

/// An evaluation point of the rational function field `F_q(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Place {
    /// The rational place `t = a`.
    Node(u64),
    /// The place at infinity; reads the leading coefficient.
    Infinity,
    /// The degree-2 place of a monic irreducible quadratic (low degree first).
    Quadratic(Vec<u64>),
}

impl Place {
    pub fn degree(&self) -> usize {
        match self {
            Place::Node(_) | Place::Infinity => 1,
            Place::Quadratic(_) => 2,
        }
    }

    /// Rank-one summands this place contributes.
    pub fn cost(&self) -> usize {
        match self {
            Place::Node(_) | Place::Infinity => 1,
            Place::Quadratic(_) => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvalPlan {
    pub q: u64,
    pub n: usize,
    pub rational_nodes: Vec<u64>,
    pub use_infinity: bool,
    pub deg2_places: Vec<Vec<u64>>,
    pub total_degree: usize,
}

impl EvalPlan {
    /// Places in evaluation order: nodes, then infinity, then quadratics.
    pub fn places(&self) -> Vec<Place> {
        let mut out: Vec<Place> = self.rational_nodes.iter().map(|&a| Place::Node(a)).collect();
        if self.use_infinity {
            out.push(Place::Infinity);
        }
        out.extend(self.deg2_places.iter().cloned().map(Place::Quadratic));
        out
    }

    pub fn cost(&self) -> usize {
        self.places().iter().map(Place::cost).sum()
    }

    pub fn is_rational_only(&self) -> bool {
        self.deg2_places.is_empty()
    }
}

/// Cheapest plan of total degree `2n - 1`.
///
/// Rational slots (`0, 1, ..., q-1`, then infinity) are used first, up to
/// `2n - 1` of them. Any remaining degree is covered by quadratics, each worth
/// two degrees at cost three; if the remainder is odd the last rational slot is
/// dropped so the quadratics fill it exactly.
pub fn plan_evaluation(f: &GaloisField, n: usize, allow_deg2: bool) -> Result<EvalPlan, MultError> {
    if n < 2 {
        return Err(MultError::DegreeTooSmall(n));
    }
    let q = f.order();
    let need = 2 * n - 1;
    let rational_available = q as usize + 1;
    let mut slots = rational_available.min(need);
    let mut deg2 = 0;
    if slots < need {
        if !allow_deg2 {
            return Err(MultError::Infeasible {
                q,
                n,
                available: rational_available,
                needed: need,
                hypothesis: format!(
                    "rational places only: N1 = {rational_available} < 2n-1 = {need}"
                ),
            });
        }
        if (need - slots) % 2 == 1 {
            slots -= 1;
        }
        deg2 = (need - slots) / 2;
        let quad_count = crate::ff::count_places_rational_ff(q, 2);
        if (deg2 as u128) > quad_count {
            let capacity = rational_available as u128 + 2 * quad_count;
            return Err(MultError::Infeasible {
                q,
                n,
                available: capacity.min(usize::MAX as u128) as usize,
                needed: need,
                hypothesis: format!("N1 + 2 N2 = {capacity} < 2n-1 = {need}"),
            });
        }
    }
    let use_infinity = slots == rational_available;
    let node_count = if use_infinity { slots - 1 } else { slots };
    let rational_nodes: Vec<u64> = f.elements().take(node_count).collect();
    let deg2_places: Vec<Vec<u64>> = poly::monic_irreducibles(f, 2).take(deg2).collect();
    Ok(EvalPlan {
        q,
        n,
        rational_nodes,
        use_infinity,
        deg2_places,
        total_degree: slots + 2 * deg2,
    })
}
