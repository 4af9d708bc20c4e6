use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ff::{ExtensionField, GaloisField, Matrix};

use super::algorithm::{BilinearAlgorithm, LedgerEntry};
use super::MultError;

/// On-disk form of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorFile {
    pub q: u64,
    pub n: usize,
    pub modulus: Vec<u64>,
    pub rank: usize,
    pub forms: Vec<Vec<u64>>,
    pub recon: Vec<Vec<u64>>,
    pub ledger: Vec<LedgerEntry>,
}

pub fn tensor_file(algo: &BilinearAlgorithm) -> TensorFile {
    TensorFile {
        q: algo.q(),
        n: algo.n(),
        modulus: algo.extension().modulus().to_vec(),
        rank: algo.rank(),
        forms: algo.forms().to_rows(),
        recon: algo.recon().to_rows(),
        ledger: algo.ledger().to_vec(),
    }
}

pub fn emit_tensor(algo: &BilinearAlgorithm) -> String {
    serde_json::to_string_pretty(&tensor_file(algo)).expect("tensor serializes")
}

fn shape_ok(rows: &[Vec<u64>], r: usize, c: usize, f: &GaloisField) -> bool {
    rows.len() == r && rows.iter().all(|row| row.len() == c && row.iter().all(|&v| f.contains(v)))
}

pub fn parse_tensor(text: &str) -> Result<BilinearAlgorithm, MultError> {
    let t: TensorFile = serde_json::from_str(text).map_err(|e| MultError::Parse(e.to_string()))?;
    let f = GaloisField::new(t.q)?;
    let ext = ExtensionField::new(f.clone(), t.modulus)?;
    if ext.degree() != t.n {
        return Err(MultError::Parse(format!("modulus has degree {}, expected n = {}", ext.degree(), t.n)));
    }
    if !shape_ok(&t.forms, t.rank, t.n, &f) || !shape_ok(&t.recon, t.n, t.rank, &f) {
        return Err(MultError::Parse("forms must be rank x n and recon n x rank over F_q".into()));
    }
    let ledger_total: usize = t.ledger.iter().map(|e| e.contribution).sum();
    if ledger_total != t.rank {
        return Err(MultError::Parse(format!("ledger sums to {ledger_total}, rank is {}", t.rank)));
    }
    Ok(BilinearAlgorithm::from_parts(
        Arc::new(ext),
        Matrix::from_rows(&t.forms),
        Matrix::from_rows(&t.recon),
        t.ledger,
    ))
}
