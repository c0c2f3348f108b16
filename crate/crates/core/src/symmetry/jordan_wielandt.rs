use serde::Serialize;

use crate::eigen::{orthonormal_complement, svd, TridiagonalMatrix};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::operator::SymmetricOperator;

/// Singular values at or below this fraction of the largest count as zero.
pub const RANK_RELATIVE_TOL: f64 = 1e-12;

/// `[[gamma I, B], [B^T, gamma I]]`, dimension `rows(B) + cols(B)`.
pub fn jordan_wielandt_assemble(b: &DenseMatrix, gamma: f64) -> Result<SymmetricOperator> {
    let (n1, n2) = (b.rows(), b.cols());
    if b.as_slice().iter().any(|x| !x.is_finite()) || !gamma.is_finite() {
        return Err(Error::NonFinite("Jordan-Wielandt block"));
    }
    SymmetricOperator::dense_from_upper(n1 + n2, |i, j| {
        if i == j {
            gamma
        } else if i < n1 && j >= n1 {
            b[(i, j - n1)]
        } else {
            0.0
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair {
    pub value: f64,
    pub vector: Vec<f64>,
}

/// Eigenpairs of the Jordan-Wielandt matrix built from the singular triplets
/// of `B`: `(gamma +- sigma_i, [u_i; +-v_i] / sqrt 2)` for the `r` nonzero
/// singular values, plus `gamma` with eigenvectors `[u; 0]` for `u` in the
/// null space of `B^T` and `[0; v]` for `v` in the null space of `B`.
/// Returned ascending by eigenvalue.
pub fn jordan_wielandt_eigenpairs(b: &DenseMatrix, gamma: f64) -> Result<Vec<Eigenpair>> {
    let (n1, n2) = (b.rows(), b.cols());
    if n1 + n2 == 0 {
        return Err(Error::invalid("Jordan-Wielandt matrix must have positive dimension"));
    }
    if n1 == 0 || n2 == 0 {
        // no coupling: gamma * I
        return Ok((0..n1 + n2)
            .map(|k| {
                let mut vector = vec![0.0; n1 + n2];
                vector[k] = 1.0;
                Eigenpair { value: gamma, vector }
            })
            .collect());
    }
    let s = svd(b)?;
    let sigma_max = s.singular_values.first().copied().unwrap_or(0.0);
    let rank = s
        .singular_values
        .iter()
        .take_while(|&&x| x > RANK_RELATIVE_TOL * sigma_max)
        .count();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut pairs = Vec::with_capacity(n1 + n2);
    for i in 0..rank {
        let sigma = s.singular_values[i];
        for sign in [1.0, -1.0] {
            let vector = s.left[i]
                .iter()
                .map(|x| h * x)
                .chain(s.right[i].iter().map(|x| sign * h * x))
                .collect();
            pairs.push(Eigenpair {
                value: gamma + sign * sigma,
                vector,
            });
        }
    }
    for u in orthonormal_complement(&s.left[..rank], n1) {
        let mut vector = u;
        vector.resize(n1 + n2, 0.0);
        pairs.push(Eigenpair { value: gamma, vector });
    }
    for v in orthonormal_complement(&s.right[..rank], n2) {
        let mut vector = vec![0.0; n1];
        vector.extend(v);
        pairs.push(Eigenpair { value: gamma, vector });
    }
    pairs.sort_by(|a, b| a.value.total_cmp(&b.value));
    Ok(pairs)
}

/// Red-black (odd-then-even) rearrangement of a constant-diagonal
/// tridiagonal matrix into Jordan-Wielandt form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RedBlackForm {
    /// `permutation[new] = old` (zero-based): odd positions `1, 3, 5, ...`
    /// (one-based) first, then even positions.
    pub permutation: Vec<usize>,
    pub gamma: f64,
    pub n1: usize,
    pub n2: usize,
    /// Row-major `n1 x n2` coupling block.
    pub block: Vec<Vec<f64>>,
}

impl RedBlackForm {
    pub fn block_matrix(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.n1, self.n2, |i, j| self.block[i][j])
    }
}

/// Permutes `T` so that it reads `[[gamma I, B], [B^T, gamma I]]`, with
/// `gamma` the mean diagonal entry. Fails when some diagonal entry is
/// farther than `tol` from `gamma`.
pub fn red_black_permute(t: &TridiagonalMatrix, tol: f64) -> Result<RedBlackForm> {
    let m = t.dim();
    let alphas = t.alphas();
    let gamma = alphas.iter().sum::<f64>() / m as f64;
    let deviation = alphas.iter().map(|a| (a - gamma).abs()).fold(0.0, f64::max);
    if deviation > tol {
        return Err(Error::NonConstantDiagonal { deviation, tol });
    }
    let n1 = m.div_ceil(2);
    let n2 = m / 2;
    let permutation: Vec<usize> = (0..m).step_by(2).chain((1..m).step_by(2)).collect();
    let betas = t.betas();
    // red row i is position 2i; black column j is position 2j + 1
    let block = (0..n1)
        .map(|i| {
            (0..n2)
                .map(|j| {
                    if j == i {
                        betas[2 * i]
                    } else if j + 1 == i {
                        betas[2 * i - 1]
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect();
    Ok(RedBlackForm {
        permutation,
        gamma,
        n1,
        n2,
        block,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one_block() {
        let b = DenseMatrix::from_rows(&[vec![1.0]]).unwrap();
        let a = jordan_wielandt_assemble(&b, 0.0).unwrap();
        assert_eq!(a.to_dense().as_slice(), &[0.0, 1.0, 1.0, 0.0]);
        let pairs = jordan_wielandt_eigenpairs(&b, 0.0).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(pairs[0].value, -1.0);
        assert_eq!(pairs[0].vector, vec![h, -h]);
        assert_eq!(pairs[1].value, 1.0);
        assert_eq!(pairs[1].vector, vec![h, h]);
    }

    #[test]
    fn shifted_block() {
        let b = DenseMatrix::from_rows(&[vec![1.0]]).unwrap();
        let values: Vec<f64> = jordan_wielandt_eigenpairs(&b, 2.0)
            .unwrap()
            .iter()
            .map(|p| p.value)
            .collect();
        assert_eq!(values, vec![1.0, 3.0]);
    }

    #[test]
    fn rank_deficient_block_gets_null_vectors() {
        let b = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0], vec![0.0, 0.0]]).unwrap();
        let pairs = jordan_wielandt_eigenpairs(&b, 0.5).unwrap();
        assert_eq!(pairs.len(), 5);
        let at_gamma = pairs.iter().filter(|p| p.value == 0.5).count();
        assert_eq!(at_gamma, 3);
        let a = jordan_wielandt_assemble(&b, 0.5).unwrap();
        for p in &pairs {
            let az = a.matvec(&p.vector).unwrap();
            for (x, z) in az.iter().zip(&p.vector) {
                assert!((x - p.value * z).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn red_black_small_cases() {
        let t = TridiagonalMatrix::new(vec![0.5, 0.5], vec![2.0]).unwrap();
        let rb = red_black_permute(&t, 0.0).unwrap();
        assert_eq!(rb.block, vec![vec![2.0]]);
        assert_eq!(rb.permutation, vec![0, 1]);

        let t = TridiagonalMatrix::new(vec![0.0; 4], vec![1.0, 2.0, 3.0]).unwrap();
        let rb = red_black_permute(&t, 0.0).unwrap();
        assert_eq!(rb.permutation, vec![0, 2, 1, 3]);
        assert_eq!(rb.block, vec![vec![1.0, 0.0], vec![2.0, 3.0]]);

        let t = TridiagonalMatrix::new(vec![1.0; 5], vec![1.0; 4]).unwrap();
        let rb = red_black_permute(&t, 0.0).unwrap();
        assert_eq!((rb.n1, rb.n2), (3, 2));
        assert_eq!(rb.block, vec![vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]]);
    }

    #[test]
    fn red_black_rejects_varying_diagonal() {
        let t = TridiagonalMatrix::new(vec![0.0, 1.0], vec![1.0]).unwrap();
        assert!(matches!(
            red_black_permute(&t, 1e-3),
            Err(Error::NonConstantDiagonal { .. })
        ));
    }

    #[test]
    fn red_black_one_by_one() {
        let t = TridiagonalMatrix::new(vec![4.0], vec![]).unwrap();
        let rb = red_black_permute(&t, 0.0).unwrap();
        assert_eq!((rb.n1, rb.n2), (1, 0));
        assert_eq!(rb.block, vec![Vec::<f64>::new()]);
    }
}
