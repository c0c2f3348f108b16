use crate::error::{Error, Result};
use crate::matrix::{axpy, dot, norm2, DenseMatrix};

const MAX_SWEEPS: usize = 60;

/// Thin singular value decomposition `B = sum_i sigma_i u_i v_i^T`.
#[derive(Debug, Clone)]
pub struct Svd {
    /// Descending, length `min(rows, cols)`.
    pub singular_values: Vec<f64>,
    pub left: Vec<Vec<f64>>,
    pub right: Vec<Vec<f64>>,
}

/// One-sided (Hestenes) Jacobi SVD. Small singular values keep high relative
/// accuracy, which matters for numerical rank decisions.
pub fn svd(b: &DenseMatrix) -> Result<Svd> {
    if b.rows() < b.cols() {
        let t = svd(&b.transpose())?;
        return Ok(Svd {
            singular_values: t.singular_values,
            left: t.right,
            right: t.left,
        });
    }
    let (rows, cols) = (b.rows(), b.cols());
    let mut u: Vec<Vec<f64>> = (0..cols).map(|j| b.column(j)).collect();
    let mut v: Vec<Vec<f64>> = (0..cols)
        .map(|j| (0..cols).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in p + 1..cols {
                let alpha = dot(&u[p], &u[p]);
                let beta = dot(&u[q], &u[q]);
                let gamma = dot(&u[p], &u[q]);
                if gamma == 0.0 || gamma.abs() <= 1e-15 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = 1.0f64.copysign(zeta) / (zeta.abs() + zeta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = c * t;
                rotate_pair(&mut u, p, q, c, s);
                rotate_pair(&mut v, p, q, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            solver: "one-sided Jacobi SVD",
            index: 0,
            iterations: MAX_SWEEPS,
        });
    }

    let mut order: Vec<(f64, usize)> = u.iter().map(|c| norm2(c)).zip(0..).collect();
    order.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut singular_values = Vec::with_capacity(cols);
    let mut left = Vec::with_capacity(cols);
    let mut right = Vec::with_capacity(cols);
    for (sigma, j) in order {
        singular_values.push(sigma);
        left.push(if sigma > 0.0 {
            u[j].iter().map(|x| x / sigma).collect()
        } else {
            vec![0.0; rows]
        });
        right.push(v[j].clone());
    }
    Ok(Svd {
        singular_values,
        left,
        right,
    })
}

fn rotate_pair(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let (head, tail) = cols.split_at_mut(q);
    let (xp, xq) = (&mut head[p], &mut tail[0]);
    for (a, b) in xp.iter_mut().zip(xq.iter_mut()) {
        let (ap, bq) = (*a, *b);
        *a = c * ap - s * bq;
        *b = s * ap + c * bq;
    }
}

/// Extends an orthonormal set in R^dim to a full orthonormal basis, returning
/// only the added vectors. Candidates are the coordinate axes, each orthogonalized
/// twice against everything accepted so far.
pub(crate) fn orthonormal_complement(basis: &[Vec<f64>], dim: usize) -> Vec<Vec<f64>> {
    let mut accepted: Vec<Vec<f64>> = basis.to_vec();
    let mut added = Vec::new();
    for axis in 0..dim {
        if accepted.len() == dim {
            break;
        }
        let mut w = vec![0.0; dim];
        w[axis] = 1.0;
        for _ in 0..2 {
            for q in &accepted {
                let h = dot(q, &w);
                axpy(-h, q, &mut w);
            }
        }
        let nrm = norm2(&w);
        if nrm > 1e-8 {
            let w: Vec<f64> = w.iter().map(|x| x / nrm).collect();
            accepted.push(w.clone());
            added.push(w);
        }
    }
    added
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstructs_tall_and_wide() {
        let b = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![0.5, -1.0], vec![3.0, 0.25]]).unwrap();
        for m in [b.clone(), b.transpose()] {
            let s = svd(&m).unwrap();
            assert_eq!(s.singular_values.len(), 2);
            assert!(s.singular_values[0] >= s.singular_values[1]);
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let r: f64 = (0..2)
                        .map(|k| s.singular_values[k] * s.left[k][i] * s.right[k][j])
                        .sum();
                    assert!((r - m[(i, j)]).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn rank_deficient_has_exact_zero_scale() {
        let b = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        let s = svd(&b).unwrap();
        assert!(s.singular_values[1] <= 1e-15 * s.singular_values[0]);
        assert!((s.singular_values[0] - 5.0).abs() < 1e-14);
    }

    #[test]
    fn complement_is_orthonormal() {
        let e = vec![vec![1.0 / 2f64.sqrt(), 1.0 / 2f64.sqrt(), 0.0]];
        let c = orthonormal_complement(&e, 3);
        assert_eq!(c.len(), 2);
        for x in &c {
            assert!((norm2(x) - 1.0).abs() < 1e-15);
            assert!(dot(x, &e[0]).abs() < 1e-15);
        }
        assert!(dot(&c[0], &c[1]).abs() < 1e-15);
    }
}
