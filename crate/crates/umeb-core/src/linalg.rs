//! Dense complex linear algebra at desk scale.
//!
//! Everything here stays deliberately small: matrices are at most a few
//! hundred entries, so plain row-major storage and O(n^3) loops are the
//! right tool. Singular values go through the eigendecomposition of the
//! Gram matrix on the smaller side, orthogonal complements through
//! modified Gram-Schmidt against the matrix-unit basis.

use crate::eigen;
use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::C64;

/// Default tolerance for rank and orthogonality decisions. The
/// constructions are exact up to roots of unity, so this leaves several
/// orders of headroom over double-precision arithmetic error.
pub const DEFAULT_TOL: f64 = 1e-9;

/// `exp(2*pi*i * power / order)`, with the exponent reduced mod `order`.
pub fn root_of_unity(order: usize, power: i64) -> C64 {
    assert!(order > 0);
    let reduced = power.rem_euclid(order as i64);
    let angle = 2.0 * std::f64::consts::PI * reduced as f64 / order as f64;
    C64::new(angle.cos(), angle.sin())
}

/// Dense complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<C64>,
}

impl ComplexMatrix {
    /// Validating constructor: shape must match and all entries be finite.
    pub fn new(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(rows, cols, 1, entries.len()));
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Matrix unit with a single 1 at (row, col).
    pub fn unit(rows: usize, cols: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(row, col, C64::new(1.0, 0.0));
        m
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, entries: Vec<C64>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        self.entries[row * self.cols + col] = value;
    }

    /// Squared Frobenius norm.
    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&mut self, factor: C64) {
        for z in &mut self.entries {
            *z *= factor;
        }
    }

    /// `self += factor * other`; shapes must agree.
    pub fn add_scaled(&mut self, other: &Self, factor: C64) {
        assert_eq!(self.dims(), other.dims());
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += factor * b;
        }
    }

    /// Columns carrying any entry with modulus above `tol`.
    pub fn column_support(&self, tol: f64) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| (0..self.rows).any(|r| self.get(r, c).norm() > tol))
            .collect()
    }

    /// Gram matrix on the smaller side: `A A†` when rows <= cols, else
    /// `A† A`. Hermitian by construction.
    fn small_gram(&self) -> Self {
        let n = self.rows.min(self.cols);
        let mut g = Self::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut sum = C64::new(0.0, 0.0);
                if self.rows <= self.cols {
                    for l in 0..self.cols {
                        sum += self.get(i, l) * self.get(j, l).conj();
                    }
                } else {
                    for k in 0..self.rows {
                        sum += self.get(k, i).conj() * self.get(k, j);
                    }
                }
                g.set(i, j, sum);
                if i != j {
                    g.set(j, i, sum.conj());
                }
            }
        }
        g
    }
}

/// Hilbert-Schmidt inner product `Tr(A† B)`; conjugate-linear in A.
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<C64> {
    if a.dims() != b.dims() {
        return Err(Error::ShapeMismatch(a.rows(), a.cols(), b.rows(), b.cols()));
    }
    Ok(a.entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Singular values in descending order; min(rows, cols) of them. Their
/// squares are the eigenvalues of `A A†`.
///
/// Going through the Gram matrix squares the condition number, so
/// eigenvalues below the solver's noise floor (relative to the largest)
/// are flattened to exactly zero: structurally zero singular values come
/// out as 0.0 rather than as square roots of rounding noise. Values that
/// survive are accurate to working precision.
pub fn singular_values(a: &ComplexMatrix) -> Vec<f64> {
    let gram = a.small_gram();
    let eigenvalues = eigen::eigvalsh(&gram).expect("Jacobi converges on Hermitian input");
    let largest = eigenvalues.last().copied().unwrap_or(0.0).max(0.0);
    let floor = largest * gram.rows() as f64 * 1e-14;
    let mut values: Vec<f64> = eigenvalues
        .into_iter()
        .map(|ev| if ev <= floor { 0.0 } else { ev.sqrt() })
        .collect();
    values.reverse();
    values
}

/// Number of singular values above `tol`.
pub fn numerical_rank(a: &ComplexMatrix, tol: f64) -> Result<usize> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::NonPositiveTolerance(tol));
    }
    Ok(singular_values(a).into_iter().filter(|&s| s > tol).count())
}

/// Orthonormal family of matrices spanning a subspace of the d x d'
/// matrix space.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    dims: (usize, usize),
    elements: Vec<ComplexMatrix>,
}

impl SubspaceBasis {
    /// Checks that all elements share `dims` and form an orthonormal
    /// family under the Hilbert-Schmidt inner product, within `tol`.
    pub fn new(dims: (usize, usize), elements: Vec<ComplexMatrix>, tol: f64) -> Result<Self> {
        if !tol.is_finite() || tol <= 0.0 {
            return Err(Error::NonPositiveTolerance(tol));
        }
        for e in &elements {
            if e.dims() != dims {
                return Err(Error::ShapeMismatch(dims.0, dims.1, e.rows(), e.cols()));
            }
        }
        let mut worst = 0.0f64;
        for i in 0..elements.len() {
            for j in i..elements.len() {
                let g = hs_inner(&elements[i], &elements[j])?;
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - C64::new(target, 0.0)).norm());
            }
        }
        if worst > tol {
            return Err(Error::NotOrthonormal(worst));
        }
        Ok(Self { dims, elements })
    }

    pub fn empty(dims: (usize, usize)) -> Self {
        Self {
            dims,
            elements: Vec::new(),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    /// Union of the column supports of all elements.
    pub fn column_support(&self, tol: f64) -> Vec<usize> {
        let mut used = vec![false; self.dims.1];
        for e in &self.elements {
            for c in e.column_support(tol) {
                used[c] = true;
            }
        }
        (0..self.dims.1).filter(|&c| used[c]).collect()
    }

    /// Linear combination with the given coefficients.
    pub fn combine(&self, coefficients: &[C64]) -> ComplexMatrix {
        assert_eq!(coefficients.len(), self.elements.len());
        let mut out = ComplexMatrix::zeros(self.dims.0, self.dims.1);
        for (c, e) in coefficients.iter().zip(&self.elements) {
            out.add_scaled(e, *c);
        }
        out
    }
}

/// Orthonormal basis of the orthogonal complement of `span` inside the
/// full matrix space, via modified Gram-Schmidt over the matrix units.
///
/// Each unit is orthogonalized twice against everything accepted so far;
/// units whose residual norm falls below `tol` are discarded as already
/// spanned. The result always has exactly `d*d' - span.len()` elements:
/// the squared residuals of the units against any intermediate subspace
/// sum to the missing dimension, so while directions are missing some
/// unit still carries a residual of at least `1/sqrt(d*d')`.
pub fn orthonormal_complement(span: &SubspaceBasis, tol: f64) -> Result<SubspaceBasis> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::NonPositiveTolerance(tol));
    }
    let (d, d_prime) = span.dims();
    let mut accepted: Vec<ComplexMatrix> = Vec::new();
    let expected = d * d_prime - span.len();

    'units: for row in 0..d {
        for col in 0..d_prime {
            if accepted.len() == expected {
                break 'units;
            }
            let mut v = ComplexMatrix::unit(d, d_prime, row, col);
            for _ in 0..2 {
                for e in span.elements().iter().chain(accepted.iter()) {
                    let proj = hs_inner(e, &v)?;
                    v.add_scaled(e, -proj);
                }
            }
            let norm = v.norm_sqr().sqrt();
            if norm < tol {
                continue;
            }
            v.scale(C64::new(1.0 / norm, 0.0));
            // one more pass after normalization keeps near-dependent
            // survivors orthogonal to working precision
            for e in span.elements().iter().chain(accepted.iter()) {
                let proj = hs_inner(e, &v)?;
                v.add_scaled(e, -proj);
            }
            let norm = v.norm_sqr().sqrt();
            v.scale(C64::new(1.0 / norm, 0.0));
            accepted.push(v);
        }
    }
    debug_assert_eq!(accepted.len(), expected);
    Ok(SubspaceBasis {
        dims: (d, d_prime),
        elements: accepted,
    })
}

/// Maximum numerical rank over `trials` seeded random combinations of the
/// subspace elements. Coefficients are uniform on the complex unit
/// square; the maximum rank of a matrix subspace is attained with
/// probability 1 by such draws.
pub fn generic_rank(subspace: &SubspaceBasis, trials: usize, seed: u64) -> usize {
    if subspace.is_empty() {
        return 0;
    }
    let mut best = 0;
    let max_possible = subspace.dims().0.min(subspace.dims().1);
    for trial in 0..trials {
        let mut rng = SplitMix64::substream(seed, trial as u64);
        let coeffs: Vec<C64> = (0..subspace.len())
            .map(|_| C64::new(rng.next_f64(), rng.next_f64()))
            .collect();
        let combo = subspace.combine(&coeffs);
        let rank = numerical_rank(&combo, DEFAULT_TOL).expect("positive tolerance");
        best = best.max(rank);
        if best == max_possible {
            break;
        }
    }
    best
}

/// Smallest singular value of `a`.
pub(crate) fn sigma_min(a: &ComplexMatrix) -> f64 {
    singular_values(a).last().copied().unwrap_or(0.0)
}

/// Smallest eigenpair of a Hermitian matrix.
pub(crate) fn smallest_eigenpair(h: &ComplexMatrix) -> (f64, Vec<C64>) {
    let (values, vectors) = eigen::eigh(h).expect("Jacobi converges on Hermitian input");
    let n = h.rows();
    let column = (0..n).map(|r| vectors.get(r, 0)).collect();
    (values[0], column)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: usize) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    #[test]
    fn hs_inner_identity_trace() {
        for d in 1..6 {
            let id = identity(d);
            let v = hs_inner(&id, &id).unwrap();
            assert!((v - C64::new(d as f64, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn hs_inner_disjoint_units() {
        let a = ComplexMatrix::unit(2, 3, 0, 0);
        let b = ComplexMatrix::unit(2, 3, 0, 1);
        assert!(hs_inner(&a, &b).unwrap().norm() < 1e-15);
    }

    #[test]
    fn hs_inner_shape_mismatch() {
        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(3, 2);
        assert!(matches!(hs_inner(&a, &b), Err(Error::ShapeMismatch(..))));
    }

    #[test]
    fn rejects_non_finite() {
        let entries = vec![C64::new(f64::NAN, 0.0); 4];
        assert!(matches!(
            ComplexMatrix::new(2, 2, entries),
            Err(Error::NonFinite)
        ));
    }

    #[test]
    fn singular_values_padded_identity() {
        let mut a = ComplexMatrix::zeros(3, 5);
        for i in 0..3 {
            a.set(i, i, C64::new(1.0, 0.0));
        }
        let sv = singular_values(&a);
        assert_eq!(sv.len(), 3);
        for s in sv {
            assert!((s - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn singular_values_zero_matrix() {
        let sv = singular_values(&ComplexMatrix::zeros(2, 3));
        assert_eq!(sv, vec![0.0, 0.0]);
    }

    #[test]
    fn singular_values_known_band_matrix() {
        // [[1,1,0],[0,1,1]]: A A? = [[2,1],[1,2]] with spectrum {3, 1},
        // so the singular values are sqrt(3) and 1
        let a = ComplexMatrix::new(
            2,
            3,
            vec![
                C64::new(1.0, 0.0),
                C64::new(1.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(1.0, 0.0),
                C64::new(1.0, 0.0),
            ],
        )
        .unwrap();
        let sv = singular_values(&a);
        assert!((sv[0] - 3.0f64.sqrt()).abs() < 1e-14);
        assert!((sv[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn singular_values_tall_matrix() {
        // transpose of the padded identity: same nonzero spectrum
        let mut a = ComplexMatrix::zeros(5, 3);
        for i in 0..3 {
            a.set(i, i, C64::new(2.0, 0.0));
        }
        let sv = singular_values(&a);
        assert_eq!(sv.len(), 3);
        for s in sv {
            assert!((s - 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn rank_of_outer_product() {
        // rows proportional to (1, i, 0, -1)
        let row = [
            C64::new(1.0, 0.0),
            C64::new(0.0, 1.0),
            C64::new(0.0, 0.0),
            C64::new(-1.0, 0.0),
        ];
        let mut a = ComplexMatrix::zeros(3, 4);
        for (r, w) in [(0usize, 1.0), (1, -0.5), (2, 2.0)] {
            for c in 0..4 {
                a.set(r, c, row[c] * C64::new(w, 0.0));
            }
        }
        assert_eq!(numerical_rank(&a, 1e-9).unwrap(), 1);
        assert_eq!(
            numerical_rank(&ComplexMatrix::zeros(3, 4), 1e-9).unwrap(),
            0
        );
    }

    #[test]
    fn rank_rejects_bad_tolerance() {
        let a = ComplexMatrix::zeros(2, 2);
        assert!(matches!(
            numerical_rank(&a, 0.0),
            Err(Error::NonPositiveTolerance(_))
        ));
        assert!(matches!(
            numerical_rank(&a, -1.0),
            Err(Error::NonPositiveTolerance(_))
        ));
    }

    #[test]
    fn complement_of_full_unit_basis_is_empty() {
        let mut units = Vec::new();
        for r in 0..2 {
            for c in 0..3 {
                units.push(ComplexMatrix::unit(2, 3, r, c));
            }
        }
        let span = SubspaceBasis::new((2, 3), units, 1e-12).unwrap();
        let comp = orthonormal_complement(&span, 1e-9).unwrap();
        assert_eq!(comp.len(), 0);
    }

    #[test]
    fn complement_of_single_unit() {
        let span =
            SubspaceBasis::new((2, 2), vec![ComplexMatrix::unit(2, 2, 0, 0)], 1e-12).unwrap();
        let comp = orthonormal_complement(&span, 1e-9).unwrap();
        assert_eq!(comp.len(), 3);
        for c in comp.elements() {
            assert!(
                hs_inner(span.elements().first().unwrap(), c)
                    .unwrap()
                    .norm()
                    < 1e-12
            );
        }
    }

    #[test]
    fn complement_rejects_non_orthonormal_span() {
        let m = ComplexMatrix::unit(2, 2, 0, 0);
        let err = SubspaceBasis::new((2, 2), vec![m.clone(), m], 1e-9);
        assert!(matches!(err, Err(Error::NotOrthonormal(d)) if d > 0.9));
    }

    #[test]
    fn generic_rank_of_identity_span() {
        let mut e = identity(2);
        e.scale(C64::new(1.0 / 2.0f64.sqrt(), 0.0));
        let span = SubspaceBasis::new((2, 2), vec![e], 1e-12).unwrap();
        assert_eq!(generic_rank(&span, 8, 0), 2);
    }

    #[test]
    fn generic_rank_empty_subspace() {
        assert_eq!(generic_rank(&SubspaceBasis::empty((3, 4)), 10, 0), 0);
    }

    #[test]
    fn generic_rank_bounded_by_column_support() {
        // units confined to two columns of a 4x5 space
        let elems = vec![
            ComplexMatrix::unit(4, 5, 0, 1),
            ComplexMatrix::unit(4, 5, 1, 3),
            ComplexMatrix::unit(4, 5, 2, 1),
            ComplexMatrix::unit(4, 5, 3, 3),
        ];
        let span = SubspaceBasis::new((4, 5), elems, 1e-12).unwrap();
        assert_eq!(generic_rank(&span, 16, 1), 2);
    }

    #[test]
    fn roots_of_unity_cycle() {
        let w = root_of_unity(5, 1);
        let mut acc = C64::new(1.0, 0.0);
        for k in 0..5 {
            assert!((acc - root_of_unity(5, k)).norm() < 1e-14);
            acc *= w;
        }
        assert!((acc - C64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((root_of_unity(5, -1) - root_of_unity(5, 4)).norm() < 1e-15);
    }
}
