//! Real symmetric operators with dense or coordinate-list backing.

use crate::error::{Error, Result};
use crate::matrix::{dot, DenseMatrix};

/// One stored entry of a sparse symmetric matrix, kept with `row >= col`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SparseEntry {
    pub row: usize,
    pub col: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
enum Backing {
    Dense(DenseMatrix),
    /// Lower-triangle entries, one per unordered index pair, sorted by (row, col).
    Sparse(Vec<SparseEntry>),
}

/// A real symmetric `n x n` matrix exposed through its dimension and `matvec`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricOperator {
    n: usize,
    backing: Backing,
}

impl SymmetricOperator {
    /// Dense backing. The matrix must be square, finite and exactly symmetric as stored.
    pub fn dense(matrix: DenseMatrix) -> Result<Self> {
        let n = matrix.rows();
        if n == 0 {
            return Err(Error::invalid("operator dimension must be at least 1"));
        }
        if matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: matrix.cols(),
            });
        }
        if matrix.as_slice().iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("dense matrix"));
        }
        for i in 0..n {
            for j in 0..i {
                if matrix[(i, j)] != matrix[(j, i)] {
                    return Err(Error::invalid(format!(
                        "matrix is not symmetric at ({}, {}): {} vs {}",
                        i + 1,
                        j + 1,
                        matrix[(i, j)],
                        matrix[(j, i)]
                    )));
                }
            }
        }
        Ok(Self {
            n,
            backing: Backing::Dense(matrix),
        })
    }

    /// Dense backing built from the upper triangle of `f(i, j)`, mirrored so that
    /// the stored matrix is exactly symmetric.
    pub fn dense_from_upper(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        Self::dense(m)
    }

    /// Coordinate-list backing. Each unordered pair may appear once, in either
    /// orientation; the mirror image is applied during `matvec`.
    pub fn sparse(n: usize, entries: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("operator dimension must be at least 1"));
        }
        let mut stored = Vec::new();
        for (i, j, value) in entries {
            if i >= n || j >= n {
                return Err(Error::invalid(format!(
                    "entry ({}, {}) is out of range for dimension {n}",
                    i + 1,
                    j + 1
                )));
            }
            if !value.is_finite() {
                return Err(Error::NonFinite("sparse entry"));
            }
            let (row, col) = if i >= j { (i, j) } else { (j, i) };
            stored.push(SparseEntry { row, col, value });
        }
        stored.sort_by_key(|e| (e.row, e.col));
        if let Some(w) = stored.windows(2).find(|w| (w[0].row, w[0].col) == (w[1].row, w[1].col)) {
            return Err(Error::invalid(format!(
                "entry ({}, {}) is stored more than once",
                w[0].row + 1,
                w[0].col + 1
            )));
        }
        Ok(Self {
            n,
            backing: Backing::Sparse(stored),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.backing, Backing::Sparse(_))
    }

    /// Stored lower-triangle entries for sparse backing.
    pub fn sparse_entries(&self) -> Option<&[SparseEntry]> {
        match &self.backing {
            Backing::Sparse(e) => Some(e),
            Backing::Dense(_) => None,
        }
    }

    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(self.apply(x))
    }

    /// `matvec` without the length check, for callers that already validated.
    pub(crate) fn apply(&self, x: &[f64]) -> Vec<f64> {
        match &self.backing {
            Backing::Dense(m) => (0..self.n).map(|i| dot(m.row(i), x)).collect(),
            Backing::Sparse(entries) => {
                let mut y = vec![0.0; self.n];
                for e in entries {
                    y[e.row] += e.value * x[e.col];
                    if e.row != e.col {
                        y[e.col] += e.value * x[e.row];
                    }
                }
                y
            }
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        match &self.backing {
            Backing::Dense(m) => m.frobenius_norm(),
            Backing::Sparse(entries) => entries
                .iter()
                .map(|e| {
                    let sq = e.value * e.value;
                    if e.row == e.col {
                        sq
                    } else {
                        2.0 * sq
                    }
                })
                .sum::<f64>()
                .sqrt(),
        }
    }

    pub fn trace(&self) -> f64 {
        match &self.backing {
            Backing::Dense(m) => (0..self.n).map(|i| m[(i, i)]).sum(),
            Backing::Sparse(entries) => entries.iter().filter(|e| e.row == e.col).map(|e| e.value).sum(),
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        match &self.backing {
            Backing::Dense(m) => m.clone(),
            Backing::Sparse(entries) => {
                let mut m = DenseMatrix::zeros(self.n, self.n);
                for e in entries {
                    m[(e.row, e.col)] = e.value;
                    m[(e.col, e.row)] = e.value;
                }
                m
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_action() {
        let a = SymmetricOperator::dense(DenseMatrix::identity(3)).unwrap();
        assert_eq!(a.matvec(&[1.0, 2.0, 3.0]).unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn swap_action() {
        let a = SymmetricOperator::dense(DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()).unwrap();
        assert_eq!(a.matvec(&[1.0, 0.0]).unwrap(), vec![0.0, 1.0]);
    }

    #[test]
    fn sparse_mirrors_off_diagonal() {
        let a = SymmetricOperator::sparse(2, [(1, 0, 3.5)]).unwrap();
        assert_eq!(a.matvec(&[1.0, 0.0]).unwrap(), vec![0.0, 3.5]);
        assert_eq!(a.matvec(&[0.0, 1.0]).unwrap(), vec![3.5, 0.0]);
        assert!((a.frobenius_norm() - 3.5 * 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn dimension_mismatch() {
        let a = SymmetricOperator::dense(DenseMatrix::identity(3)).unwrap();
        assert!(matches!(
            a.matvec(&[1.0]),
            Err(Error::DimensionMismatch { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn rejects_asymmetric_and_nonfinite() {
        let m = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0 + 1e-16 * 4.0, 0.0]]).unwrap();
        assert!(SymmetricOperator::dense(m).is_err());
        let m = DenseMatrix::from_rows(&[vec![f64::NAN]]).unwrap();
        assert!(SymmetricOperator::dense(m).is_err());
        assert!(SymmetricOperator::sparse(2, [(0, 1, 1.0), (1, 0, 2.0)]).is_err());
        assert!(SymmetricOperator::sparse(2, [(2, 0, 1.0)]).is_err());
        assert!(SymmetricOperator::sparse(0, []).is_err());
    }
}
