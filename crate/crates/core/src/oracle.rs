//! Exact reference solver for small sign systems.
//!
//! Builds the sign matrix from the run-length form `(-1)^floor((i-1)/l_j)`
//! and runs Gaussian elimination over big rationals, so it shares no code
//! with the floating-point path it checks. Inputs are converted from `f64`
//! exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Sign of train `j` over subinterval `i` (1-based) from run lengths alone.
pub fn run_length_sign(n: usize, i: usize, j: usize) -> i8 {
    let len = n - j + 1;
    if ((i - 1) / len).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn sign_matrix(n: usize) -> Vec<Vec<BigRational>> {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| BigRational::from_integer(BigInt::from(run_length_sign(n, i, j))))
                .collect()
        })
        .collect()
}

/// Exact solution of the `n x n` sign system, or `None` if it is singular.
pub fn solve_exact(rhs: &[f64]) -> Option<Vec<BigRational>> {
    let n = rhs.len();
    let mut a = sign_matrix(n);
    let mut b: Vec<BigRational> = rhs
        .iter()
        .map(|&v| BigRational::from_float(v).expect("finite rhs"))
        .collect();

    for k in 0..n {
        let pivot = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(k, pivot);
        b.swap(k, pivot);
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let factor = &a[r][k] / &a[k][k];
            #[allow(clippy::needless_range_loop)]
            for c in k..n {
                let delta = &factor * &a[k][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[k];
            b[r] -= delta;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for c in i + 1..n {
            acc -= &a[i][c] * &x[c];
        }
        x[i] = acc / &a[i][i];
    }
    Some(x)
}

/// [`solve_exact`] rounded to the nearest `f64`.
pub fn solve_exact_f64(rhs: &[f64]) -> Option<Vec<f64>> {
    solve_exact(rhs).map(|x| {
        x.iter()
            .map(|v| v.to_f64().expect("representable"))
            .collect()
    })
}
