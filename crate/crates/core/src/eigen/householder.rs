use super::tridiagonal::implicit_ql;
use super::{sorted_decomposition, EigenDecomposition, Eigenvectors};
use crate::error::Result;
use crate::matrix::{axpy, dot, DenseMatrix};

/// Householder reduction to tridiagonal form followed by implicit QL on the
/// reduced matrix, with the reflectors accumulated into the eigenvectors.
/// O(n^3) with a much smaller constant than Jacobi sweeps; meant for large
/// dense problems.
pub fn householder_ql_eigen(a: &DenseMatrix) -> Result<EigenDecomposition> {
    let n = a.rows();
    let mut a = a.clone();
    let mut q = DenseMatrix::identity(n);

    for k in 0..n.saturating_sub(2) {
        let mut v: Vec<f64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        let col_norm = dot(&v, &v).sqrt();
        if col_norm == 0.0 {
            continue;
        }
        let alpha = -col_norm.copysign(v[0]);
        v[0] -= alpha;
        let vv = dot(&v, &v);
        if vv == 0.0 {
            continue;
        }
        let beta = 2.0 / vv;
        let len = v.len();

        // trailing block update: A22 <- P A22 P with P = I - beta v v^T
        let mut w = vec![0.0; len];
        for (r, wr) in w.iter_mut().enumerate() {
            let row = &a.row(k + 1 + r)[k + 1..];
            *wr = beta * dot(row, &v);
        }
        let kk = 0.5 * beta * dot(&v, &w);
        axpy(-kk, &v, &mut w);
        for r in 0..len {
            for c in 0..len {
                a[(k + 1 + r, k + 1 + c)] -= v[r] * w[c] + w[r] * v[c];
            }
        }
        a[(k + 1, k)] = alpha;
        a[(k, k + 1)] = alpha;
        for i in k + 2..n {
            a[(i, k)] = 0.0;
            a[(k, i)] = 0.0;
        }

        // Q <- Q P
        for i in 0..n {
            let qi = &q.row(i)[k + 1..];
            let s = beta * dot(qi, &v);
            for (c, vc) in v.iter().enumerate() {
                q[(i, k + 1 + c)] -= s * vc;
            }
        }
    }

    let mut d: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    let mut e: Vec<f64> = (0..n).map(|i| if i + 1 < n { a[(i + 1, i)] } else { 0.0 }).collect();
    implicit_ql(&mut d, &mut e, &mut q)?;
    Ok(sorted_decomposition(d, Eigenvectors::Full(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::jacobi::jacobi_eigen;

    #[test]
    fn agrees_with_jacobi() {
        let n = 7;
        let a = DenseMatrix::from_fn(n, n, |i, j| {
            let (i, j) = (i.min(j) as f64, i.max(j) as f64);
            (1.0 + i * 0.37 + j * 0.11).sin() + if i == j { 0.5 * i } else { 0.0 }
        });
        let h = householder_ql_eigen(&a).unwrap();
        let j = jacobi_eigen(&a).unwrap();
        for (x, y) in h.eigenvalues.iter().zip(&j.eigenvalues) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
        let q = h.vectors().unwrap();
        for c in 0..n {
            let qc = q.column(c);
            let aq = a.matvec(&qc).unwrap();
            for i in 0..n {
                assert!((aq[i] - h.eigenvalues[c] * qc[i]).abs() < 1e-12);
            }
        }
    }
}
