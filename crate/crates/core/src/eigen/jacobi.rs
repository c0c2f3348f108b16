use super::{sorted_decomposition, EigenDecomposition, Eigenvectors};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

const MAX_SWEEPS: usize = 60;

/// Cyclic Jacobi rotations on a dense symmetric matrix.
///
/// Each sweep visits every `(p, q)` pair above the diagonal and annihilates
/// it with a plane rotation. Off-diagonal entries that are negligible next to
/// both diagonal entries are set to zero after the first few sweeps, and the
/// iteration ends once the whole off-diagonal part is exactly zero.
pub fn jacobi_eigen(a: &DenseMatrix) -> Result<EigenDecomposition> {
    let n = a.rows();
    let mut a = a.clone();
    let mut v = DenseMatrix::identity(n);

    for sweep in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].abs())
            .sum();
        if off == 0.0 {
            let d = (0..n).map(|i| a[(i, i)]).collect();
            return Ok(sorted_decomposition(d, Eigenvectors::Full(v)));
        }
        let threshold = if sweep < 3 { 0.2 * off / (n * n) as f64 } else { 0.0 };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let g = 100.0 * apq.abs();
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                if apq.abs() <= threshold || apq == 0.0 {
                    continue;
                }
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    Err(Error::NonConvergence {
        solver: "cyclic Jacobi",
        index: 0,
        iterations: MAX_SWEEPS,
    })
}

fn rotate(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize) {
    let n = a.rows();
    let apq = a[(p, q)];
    let app = a[(p, p)];
    let aqq = a[(q, q)];
    let tau = (aqq - app) / (2.0 * apq);
    let t = if tau.is_finite() {
        1.0f64.copysign(tau) / (tau.abs() + tau.hypot(1.0))
    } else {
        // |apq| is negligible next to the diagonal gap
        0.5 / tau
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[(k, p)] = new_kp;
        a[(p, k)] = new_kp;
        a[(k, q)] = new_kq;
        a[(q, k)] = new_kq;
    }
    a[(p, p)] = app - t * apq;
    a[(q, q)] = aqq + t * apq;
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}
