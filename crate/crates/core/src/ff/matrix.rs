use std::ops::{Index, IndexMut};

use super::{GaloisField, LinAlgError};

/// Dense row-major matrix over a [`GaloisField`]. Entries are field codes; the
/// field is passed to every operation that needs arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix shape does not match data");
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![0; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn select_rows(&self, sel: &[usize]) -> Matrix {
        let rows: Vec<Vec<u64>> = sel.iter().map(|&i| self.row(i).to_vec()).collect();
        Matrix::new(sel.len(), self.cols, rows.concat())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn mul(&self, f: &GaloisField, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product. Panics on a length mismatch.
    pub fn mul_vec(&self, f: &GaloisField, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &x)| f.add(acc, f.mul(a, x)))
            })
            .collect()
    }

    /// Solves `self * X = rhs` for square `self` by Gauss-Jordan elimination,
    /// pivoting on the first nonzero entry of each column.
    pub fn solve(&self, f: &GaloisField, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if rhs.rows != self.rows {
            return Err(LinAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let n = self.rows;
        let w = n + rhs.cols;
        let mut aug = Matrix::zeros(n, w);
        for i in 0..n {
            aug.data[i * w..i * w + n].copy_from_slice(self.row(i));
            aug.data[i * w + n..(i + 1) * w].copy_from_slice(rhs.row(i));
        }
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| aug[(r, col)] != 0)
                .ok_or(LinAlgError::Singular { column: col })?;
            aug.swap_rows(pivot, col);
            let inv = f.inv(aug[(col, col)]).unwrap();
            for j in 0..w {
                aug[(col, j)] = f.mul(aug[(col, j)], inv);
            }
            for r in 0..n {
                let factor = aug[(r, col)];
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..w {
                    let t = f.mul(factor, aug[(col, j)]);
                    aug[(r, j)] = f.sub(aug[(r, j)], t);
                }
            }
        }
        let mut out = Matrix::zeros(n, rhs.cols);
        for i in 0..n {
            out.data[i * rhs.cols..(i + 1) * rhs.cols].copy_from_slice(&aug.data[i * w + n..(i + 1) * w]);
        }
        Ok(out)
    }

    pub fn inverse(&self, f: &GaloisField) -> Result<Matrix, LinAlgError> {
        self.solve(f, &Matrix::identity(self.rows))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Indices of the first rows, in order, that together are linearly
    /// independent and span the row space.
    pub fn independent_rows(&self, f: &GaloisField) -> Vec<usize> {
        // echelon basis kept as (pivot column, normalized row)
        let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
        let mut chosen = Vec::new();
        for i in 0..self.rows {
            let mut v = self.row(i).to_vec();
            for (pc, b) in &basis {
                let c = v[*pc];
                if c != 0 {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
            if let Some(pc) = v.iter().position(|&x| x != 0) {
                let inv = f.inv(v[pc]).unwrap();
                v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                basis.push((pc, v));
                chosen.push(i);
            }
        }
        chosen
    }

    pub fn rank(&self, f: &GaloisField) -> usize {
        self.independent_rows(f).len()
    }

    /// A left inverse `L` (`cols x rows`) with `L * self = I` for a matrix of
    /// full column rank. Built from the first square subsystem of independent
    /// rows in row order; the remaining columns of `L` are zero.
    pub fn left_inverse(&self, f: &GaloisField) -> Result<Matrix, LinAlgError> {
        let sel = self.independent_rows(f);
        if sel.len() < self.cols {
            return Err(LinAlgError::RankDeficient {
                rank: sel.len(),
                needed: self.cols,
            });
        }
        let square_inv = self.select_rows(&sel).inverse(f)?;
        let mut out = Matrix::zeros(self.cols, self.rows);
        for (j, &r) in sel.iter().enumerate() {
            for i in 0..self.cols {
                out[(i, r)] = square_inv[(i, j)];
            }
        }
        Ok(out)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = u64;

    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}
