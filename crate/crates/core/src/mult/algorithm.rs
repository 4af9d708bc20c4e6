use std::sync::Arc;

use serde::Serialize;

use crate::ff::{poly, ExtensionField, FieldElement, FieldError, GaloisField, Matrix};

use super::plan::{plan_evaluation, EvalPlan, Place};
use super::MultError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct LedgerEntry {
    pub place: Place,
    pub contribution: usize,
}

/// A symmetric bilinear multiplication algorithm for `F_{q^n}` over `F_q`:
/// `x * y = recon * ((forms * x) . (forms * y))`.
#[derive(Clone, Debug)]
pub struct BilinearAlgorithm {
    pub(crate) ext: Arc<ExtensionField>,
    pub(crate) forms: Matrix,
    pub(crate) recon: Matrix,
    pub(crate) ledger: Vec<LedgerEntry>,
}

/// `t^j mod m` for `j < count`, as the columns of a `deg(m) x count` matrix.
fn reduction_matrix(f: &GaloisField, m: &[u64], count: usize) -> Matrix {
    let d = m.len() - 1;
    let mut out = Matrix::zeros(d, count);
    let mut power = vec![f.one()];
    for j in 0..count {
        let r = poly::rem(f, &power, m);
        for (i, &c) in r.iter().enumerate() {
            out[(i, j)] = c;
        }
        power.insert(0, 0);
    }
    out
}

fn powers_row(f: &GaloisField, a: u64, len: usize) -> Vec<u64> {
    let mut row = Vec::with_capacity(len);
    let mut acc = f.one();
    for _ in 0..len {
        row.push(acc);
        acc = f.mul(acc, a);
    }
    row
}

fn unit_row(len: usize, at: usize) -> Vec<u64> {
    let mut row = vec![0; len];
    row[at] = 1;
    row
}

/// Builds the algorithm for `F_q[t]/(modulus)` from a plan.
pub(crate) fn build_for_modulus(
    f: &GaloisField,
    modulus: &[u64],
    plan: &EvalPlan,
) -> Result<(Matrix, Matrix, Vec<LedgerEntry>), MultError> {
    let n = modulus.len() - 1;
    let prod_len = 2 * n - 1;
    let mut form_rows: Vec<Vec<u64>> = Vec::new();
    let mut eval_rows: Vec<Vec<u64>> = Vec::new();
    // blocks of the map from pointwise products to evaluations: (rows, B-block)
    let mut blocks: Vec<Matrix> = Vec::new();
    let mut ledger = Vec::new();

    for place in plan.places() {
        match &place {
            Place::Node(a) => {
                form_rows.push(powers_row(f, *a, n));
                eval_rows.push(powers_row(f, *a, prod_len));
                blocks.push(Matrix::identity(1));
            }
            Place::Infinity => {
                form_rows.push(unit_row(n, n - 1));
                eval_rows.push(unit_row(prod_len, prod_len - 1));
                blocks.push(Matrix::identity(1));
            }
            Place::Quadratic(pi) => {
                let sub_plan = plan_evaluation(f, 2, false)?;
                let (sub_forms, sub_recon, _) = build_for_modulus(f, pi, &sub_plan)?;
                let residue = reduction_matrix(f, pi, n);
                let composed = sub_forms.mul(f, &residue)?;
                form_rows.extend(composed.to_rows());
                eval_rows.extend(reduction_matrix(f, pi, prod_len).to_rows());
                blocks.push(sub_recon);
            }
        }
        ledger.push(LedgerEntry {
            contribution: place.cost(),
            place,
        });
    }

    let rank = form_rows.len();
    let evals = eval_rows.len();
    let mut b = Matrix::zeros(evals, rank);
    let (mut r0, mut c0) = (0, 0);
    for blk in &blocks {
        for i in 0..blk.rows() {
            for j in 0..blk.cols() {
                b[(r0 + i, c0 + j)] = blk[(i, j)];
            }
        }
        r0 += blk.rows();
        c0 += blk.cols();
    }
    let e = Matrix::from_rows(&eval_rows);
    let left = e.left_inverse(f)?;
    let red = reduction_matrix(f, modulus, prod_len);
    let recon = red.mul(f, &left)?.mul(f, &b)?;
    Ok((Matrix::from_rows(&form_rows), recon, ledger))
}

/// Builds the algorithm for the canonical extension of degree `plan.n`.
pub fn build_algorithm(f: &GaloisField, plan: &EvalPlan) -> Result<BilinearAlgorithm, MultError> {
    if plan.q != f.order() {
        return Err(MultError::PlanMismatch);
    }
    let ext = Arc::new(ExtensionField::canonical(f.clone(), plan.n)?);
    let (forms, recon, ledger) = build_for_modulus(f, ext.modulus(), plan)?;
    Ok(BilinearAlgorithm {
        ext,
        forms,
        recon,
        ledger,
    })
}

impl BilinearAlgorithm {
    pub(crate) fn from_parts(
        ext: Arc<ExtensionField>,
        forms: Matrix,
        recon: Matrix,
        ledger: Vec<LedgerEntry>,
    ) -> Self {
        Self {
            ext,
            forms,
            recon,
            ledger,
        }
    }

    pub fn extension(&self) -> &Arc<ExtensionField> {
        &self.ext
    }

    pub fn base(&self) -> &GaloisField {
        self.ext.base()
    }

    pub fn q(&self) -> u64 {
        self.ext.base().order()
    }

    pub fn n(&self) -> usize {
        self.ext.degree()
    }

    pub fn rank(&self) -> usize {
        self.forms.rows()
    }

    pub fn forms(&self) -> &Matrix {
        &self.forms
    }

    pub fn recon(&self) -> &Matrix {
        &self.recon
    }

    pub fn ledger(&self) -> &[LedgerEntry] {
        &self.ledger
    }

    pub fn uses_degree_two(&self) -> bool {
        self.ledger.iter().any(|e| matches!(e.place, Place::Quadratic(_)))
    }

    /// `forms * x`; the same forms are applied to both operands.
    pub fn evaluate(&self, x: &[u64]) -> Vec<u64> {
        self.forms.mul_vec(self.base(), x)
    }

    /// Combines two evaluation vectors into the product's coordinates.
    pub fn combine(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.base();
        let z: Vec<u64> = a.iter().zip(b).map(|(&u, &v)| f.mul(u, v)).collect();
        self.recon.mul_vec(f, &z)
    }

    pub fn multiply_coords(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        self.combine(&self.evaluate(x), &self.evaluate(y))
    }

    pub fn multiply(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement, FieldError> {
        if **x.field() != *self.ext || **y.field() != *self.ext {
            return Err(FieldError::FieldMismatch);
        }
        self.ext.element(self.multiply_coords(x.coords(), y.coords()))
    }
}
