//! Cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! Each rotation annihilates one off-diagonal pair (p, q). For a complex
//! entry `H[p][q] = m * a` with modulus `m` and unit phase `a`, the plane
//! unitary is a real Jacobi rotation composed with the phase `conj(a)` on
//! the q-th coordinate:
//!
//! ```text
//! U[p][p] = c     U[p][q] = -s
//! U[q][p] = s*ā   U[q][q] = c*ā
//! ```
//!
//! with `t = tan` chosen from `t^2 + 2*t*(H[p][p]-H[q][q])/(2m) - 1 = 0` so
//! that `(U† H U)[p][q] = 0`. Off-diagonal mass decreases monotonically and
//! convergence is quadratic once the matrix is nearly diagonal; at the
//! dimensions used here (≤ ~24) a handful of sweeps suffices.

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::C64;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix, ascending. Only the upper triangle
/// and the real part of the diagonal are read.
pub(crate) fn eigvalsh(h: &ComplexMatrix) -> Result<Vec<f64>> {
    let (values, _) = jacobi(h, false)?;
    Ok(values)
}

/// Eigenvalues (ascending) and matching eigenvector columns.
pub(crate) fn eigh(h: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let (values, vectors) = jacobi(h, true)?;
    Ok((values, vectors.expect("vectors requested")))
}

fn jacobi(h: &ComplexMatrix, want_vectors: bool) -> Result<(Vec<f64>, Option<ComplexMatrix>)> {
    assert_eq!(h.rows(), h.cols(), "eigensolver requires a square matrix");
    let n = h.rows();
    let mut a: Vec<C64> = h.entries().to_vec();
    let mut v = want_vectors.then(|| identity_entries(n));

    let scale: f64 = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if scale == 0.0 || n == 1 {
        return Ok(finish(&a, v, n));
    }
    let stop = 1e-14 * scale;
    let skip = stop / (n * n) as f64;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q].norm())
            .sum();
        if off <= stop {
            return Ok(finish(&a, v, n));
        }

        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let m = apq.norm();
                if m <= skip {
                    continue;
                }
                let alpha_conj = apq.conj() / m;
                let theta = (a[p * n + p].re - a[q * n + q].re) / (2.0 * m);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                a[p * n + p] += C64::new(t * m, 0.0);
                a[q * n + q] -= C64::new(t * m, 0.0);
                a[p * n + q] = C64::new(0.0, 0.0);
                a[q * n + p] = C64::new(0.0, 0.0);

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let hkp = a[k * n + p];
                    let hkq = a[k * n + q];
                    let new_kp = c * hkp + s * alpha_conj * hkq;
                    let new_kq = -s * hkp + c * alpha_conj * hkq;
                    a[k * n + p] = new_kp;
                    a[k * n + q] = new_kq;
                    a[p * n + k] = new_kp.conj();
                    a[q * n + k] = new_kq.conj();
                }

                if let Some(vv) = v.as_mut() {
                    for k in 0..n {
                        let vkp = vv[k * n + p];
                        let vkq = vv[k * n + q];
                        vv[k * n + p] = c * vkp + s * alpha_conj * vkq;
                        vv[k * n + q] = -s * vkp + c * alpha_conj * vkq;
                    }
                }
            }
        }
    }
    Err(Error::EigenNoConvergence)
}

fn identity_entries(n: usize) -> Vec<C64> {
    let mut e = vec![C64::new(0.0, 0.0); n * n];
    for i in 0..n {
        e[i * n + i] = C64::new(1.0, 0.0);
    }
    e
}

/// Read eigenvalues off the diagonal, sort ascending, and permute the
/// accumulated eigenvector columns to match.
fn finish(a: &[C64], vectors: Option<Vec<C64>>, n: usize) -> (Vec<f64>, Option<ComplexMatrix>) {
    let values: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        values[i]
            .partial_cmp(&values[j])
            .expect("finite eigenvalues")
    });
    let sorted = order.iter().map(|&i| values[i]).collect();
    let vectors = vectors.map(|e| {
        let mut out = vec![C64::new(0.0, 0.0); n * n];
        for (new_col, &old_col) in order.iter().enumerate() {
            for row in 0..n {
                out[row * n + new_col] = e[row * n + old_col];
            }
        }
        ComplexMatrix::from_raw(n, n, out)
    });
    (sorted, vectors)
}
