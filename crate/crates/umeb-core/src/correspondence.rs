//! The correspondence between bipartite pure states and complex matrices.
//!
//! A unit vector `sum_{k,l} a[k,l] |k>|l'>` on C^d ⊗ C^d' maps to the
//! d x d' matrix with entries `sqrt(d) * a[k,l]`. Inner products transport
//! as `<s|t> = Tr(A_s† A_t) / d`, the Schmidt number of a state equals the
//! rank of its matrix, and a state is maximally entangled exactly when
//! every singular value of its matrix equals 1.

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix};
use crate::C64;

const NORM_TOL: f64 = 1e-10;

/// Pure state on C^d ⊗ C^d', d <= d'. Coefficients are stored row-major:
/// index `k * d_prime + l` holds the amplitude of `|k>|l'>`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    d: usize,
    d_prime: usize,
    coeffs: Vec<C64>,
}

impl PureState {
    /// Validating constructor: dimensions ordered, entries finite, unit
    /// norm within 1e-10.
    pub fn new(d: usize, d_prime: usize, coeffs: Vec<C64>) -> Result<Self> {
        let state = Self::raw(d, d_prime, coeffs)?;
        let norm_sqr = state.norm_sqr();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(state)
    }

    /// Same shape checks as [`PureState::new`] but no normalization check.
    /// Used when loading external data whose defects the verification
    /// pass must report rather than reject.
    pub fn raw(d: usize, d_prime: usize, coeffs: Vec<C64>) -> Result<Self> {
        if d == 0 || d_prime == 0 || d > d_prime {
            return Err(Error::DimensionOrder { d, d_prime });
        }
        if coeffs.len() != d * d_prime {
            return Err(Error::ShapeMismatch(d, d_prime, 1, coeffs.len()));
        }
        if coeffs
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(Self { d, d_prime, coeffs })
    }

    /// Basis product state |k>|l'>.
    pub fn ket(d: usize, d_prime: usize, k: usize, l: usize) -> Result<Self> {
        if k >= d {
            return Err(Error::RowIndexOutOfRange { k, d });
        }
        if l >= d_prime {
            return Err(Error::ColumnOutOfRange { col: l, d_prime });
        }
        let mut coeffs = vec![C64::new(0.0, 0.0); d * d_prime];
        coeffs[k * d_prime + l] = C64::new(1.0, 0.0);
        Self::new(d, d_prime, coeffs)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn d_prime(&self) -> usize {
        self.d_prime
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.d, self.d_prime)
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff(&self, k: usize, l: usize) -> C64 {
        self.coeffs[k * self.d_prime + l]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum()
    }
}

/// `<s|t>`, conjugate-linear in `s`.
pub fn state_inner(s: &PureState, t: &PureState) -> Result<C64> {
    if s.dims() != t.dims() {
        return Err(Error::ShapeMismatch(s.d, s.d_prime, t.d, t.d_prime));
    }
    Ok(s.coeffs
        .iter()
        .zip(&t.coeffs)
        .map(|(a, b)| a.conj() * b)
        .sum())
}

/// Matrix side of the correspondence: entry (k, l) is `sqrt(d) * a[k,l]`,
/// so the result has `Tr(A† A) = d` for a normalized state.
pub fn state_to_matrix(s: &PureState) -> ComplexMatrix {
    let factor = C64::new((s.d as f64).sqrt(), 0.0);
    let entries = s.coeffs.iter().map(|&a| factor * a).collect();
    ComplexMatrix::from_raw(s.d, s.d_prime, entries)
}

/// State side of the correspondence. The matrix must carry the state
/// normalization `Tr(A† A) = d`.
pub fn matrix_to_state(a: &ComplexMatrix) -> Result<PureState> {
    let (d, d_prime) = a.dims();
    let trace = a.norm_sqr();
    if (trace - d as f64).abs() > NORM_TOL * d as f64 {
        return Err(Error::WrongTraceNorm {
            expected: d as f64,
            got: trace,
        });
    }
    let factor = C64::new(1.0 / (d as f64).sqrt(), 0.0);
    let coeffs = a.entries().iter().map(|&z| factor * z).collect();
    PureState::raw(d, d_prime, coeffs)
}

/// Schmidt number: the numerical rank of the coefficient matrix.
pub fn schmidt_number(s: &PureState, tol: f64) -> Result<usize> {
    linalg::numerical_rank(&state_to_matrix(s), tol)
}

/// Whether every singular value of the state's matrix lies within `tol`
/// of 1, together with the worst deviation `max |sigma - 1|`.
pub fn is_maximally_entangled(s: &PureState, tol: f64) -> (bool, f64) {
    let sv = linalg::singular_values(&state_to_matrix(s));
    let worst = sv
        .iter()
        .map(|&sigma| (sigma - 1.0).abs())
        .fold(0.0f64, f64::max);
    (worst <= tol, worst)
}
