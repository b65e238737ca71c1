//! Construction and numerical certification of unextendible maximally
//! entangled bases (UMEBs) in bipartite spaces C^d ⊗ C^d' with d < d'.
//!
//! A pure state on C^d ⊗ C^d' corresponds one-to-one to a d × d' complex
//! matrix: the state with coefficients `a[k,l]` maps to the matrix with
//! entries `sqrt(d) * a[k,l]`. Under this correspondence a state is
//! maximally entangled exactly when all singular values of its matrix
//! equal 1, and a set of states is an orthonormal family exactly when the
//! matrices are orthogonal under the Hilbert-Schmidt inner product
//! `<A|B> = Tr(A† B)`.
//!
//! Two constructions are provided:
//!
//! - [`constructions::umeb_from_holes`] builds a d(d'−1)-member UMEB from a
//!   *hole pattern*: d forbidden matrix positions, one per row, confined to
//!   fewer than d columns. Every basis matrix is exactly zero on the holes,
//!   so the orthogonal complement of the span is the hole positions
//!   themselves; since they sit in fewer than d columns, no complement
//!   element can have full rank, hence no maximally entangled state is
//!   orthogonal to the basis.
//! - [`constructions::umeb_from_partition`] builds a d(d'−r)-member UMEB
//!   from a column partition d' = a_1 + … + a_s + r with a_i ≥ d and
//!   0 < r < d, by running cyclic shift-and-phase orbits inside each block
//!   of a_i columns and leaving the last r columns untouched.
//!
//! The [`verification`] module certifies candidate bases: orthonormality,
//! maximal entanglement, and unextendibility (a structural rank bound on
//! the complement, corroborated by a derivative-free search for a
//! singular-value-1 complement element).
//!
//! ```
//! use umeb_core::{umeb_from_holes, verify_umeb, HolePattern, Verdict, VerifyConfig};
//!
//! let pattern = HolePattern::new(5, 6, vec![(0, 3), (1, 1), (2, 3), (3, 5), (4, 3)])?;
//! let basis = umeb_from_holes(&pattern);
//! assert_eq!(basis.len(), 25);
//!
//! let report = verify_umeb(&basis, &VerifyConfig::default());
//! assert_eq!(report.verdict, Verdict::Umeb);
//! # Ok::<(), umeb_core::Error>(())
//! ```

pub mod constructions;
pub mod correspondence;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod verification;

mod eigen;
mod rng;

/// Complex scalar used throughout; finite components are required by every
/// public constructor.
pub type C64 = num_complex::Complex64;

pub use constructions::{
    canonicalize_holes, compose_direct_sum, enumerate_compositions, enumerate_partitions,
    hole_indicator, permute_states, t_sequence, umeb_from_holes, umeb_from_holes_canonical,
    umeb_from_partition, BasisMember, BasisSet, CanonicalHoleForm, HolePattern, PartitionSpec,
    Provenance,
};
pub use correspondence::{
    is_maximally_entangled, matrix_to_state, schmidt_number, state_inner, state_to_matrix,
    PureState,
};
pub use document::{BasisDocument, DocumentError, DocumentState};
pub use error::{Error, Result};
pub use linalg::{
    generic_rank, hs_inner, numerical_rank, orthonormal_complement, root_of_unity, singular_values,
    ComplexMatrix, SubspaceBasis, DEFAULT_TOL,
};
pub use verification::{
    check_max_entanglement, check_orthonormality, exhibit_schmidt_ceiling,
    numeric_unextendibility_oracle, structural_unextendibility, verify_umeb, verify_upb,
    CheckResult, ColumnSupport, StructuralFacts, UpbConfig, UpbReport, Verdict, VerificationReport,
    VerifyConfig,
};
