//! Seeded random instances shared by the integration and acceptance tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use ritzsym::eigen::jacobi_eigen;
use ritzsym::symmetry::{palindrome_vector_sample, Sign};
use ritzsym::{DenseMatrix, SymmetricOperator};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform_vec(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(lo..hi)).collect()
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> SymmetricOperator {
    let upper = DenseMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
    SymmetricOperator::dense_from_upper(n, |i, j| upper[(i, j)]).unwrap()
}

pub fn random_dense(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> DenseMatrix {
    DenseMatrix::from_fn(rows, cols, |_, _| rng.gen_range(-1.0..1.0))
}

/// Eigenvectors of a random symmetric matrix.
pub fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    let a = random_symmetric(rng, n);
    jacobi_eigen(&a.to_dense()).unwrap().vectors().unwrap().clone()
}

/// `Q diag(lambda) Q^T`, stored exactly symmetric.
pub fn with_spectrum(q: &DenseMatrix, lambda: &[f64]) -> SymmetricOperator {
    let n = lambda.len();
    SymmetricOperator::dense_from_upper(n, |i, j| (0..n).map(|k| q[(i, k)] * lambda[k] * q[(j, k)]).sum()).unwrap()
}

pub fn random_spd(rng: &mut ChaCha8Rng, n: usize) -> SymmetricOperator {
    let q = random_orthogonal(rng, n);
    let mut lambda = uniform_vec(rng, n, 0.1, 2.0);
    lambda.sort_by(f64::total_cmp);
    with_spectrum(&q, &lambda)
}

/// Ascending spectrum symmetric about `center`, with distinct entries.
pub fn symmetric_spectrum(rng: &mut ChaCha8Rng, n: usize, center: f64) -> Vec<f64> {
    let mut offsets: Vec<f64> = Vec::with_capacity(n / 2);
    let mut acc = 0.0;
    for _ in 0..n / 2 {
        acc += rng.gen_range(0.05..0.5);
        offsets.push(acc);
    }
    let mut lambda: Vec<f64> = offsets.iter().rev().map(|d| center - d).collect();
    if n % 2 == 1 {
        lambda.push(center);
    }
    lambda.extend(offsets.iter().map(|d| center + d));
    lambda
}

/// A matrix with a spectrum symmetric about a random center and a start
/// vector whose eigenbasis coordinates form an absolute palindrome.
pub struct ConformingInstance {
    pub a: SymmetricOperator,
    pub v: Vec<f64>,
    pub center: f64,
    pub eigenvalues: Vec<f64>,
}

pub fn conforming_instance(rng: &mut ChaCha8Rng, n: usize) -> ConformingInstance {
    let center = rng.gen_range(-1.0..1.0);
    let lambda = symmetric_spectrum(rng, n, center);
    let q = random_orthogonal(rng, n);
    let half = n.div_ceil(2);
    let coeffs = uniform_vec(rng, half, 0.2, 1.0);
    let signs: Vec<Sign> = (0..half)
        .map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus })
        .collect();
    let v = palindrome_vector_sample(&q, &coeffs, &signs).unwrap();
    ConformingInstance {
        a: with_spectrum(&q, &lambda),
        v,
        center,
        eigenvalues: lambda,
    }
}

/// Rank `r` product of random `rows x r` and `r x cols` factors.
pub fn random_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize, r: usize) -> DenseMatrix {
    let left = random_dense(rng, rows, r);
    let right = random_dense(rng, r, cols);
    left.matmul(&right).unwrap()
}
