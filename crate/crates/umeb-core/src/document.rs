//! On-disk JSON format for bases.
//!
//! Numbers are written in shortest round-trip decimal form, field order
//! is fixed by the struct definitions, and no maps with unstable ordering
//! appear anywhere, so save -> load -> save reproduces a file byte for
//! byte. Coefficients are stored as [re, im] pairs in row-major (k, l)
//! order.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{BasisMember, BasisSet, Provenance};
use crate::correspondence::PureState;
use crate::C64;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unsupported format version {0:?} (expected {FORMAT_VERSION:?})")]
    UnsupportedVersion(String),

    #[error("document dimensions d={d}, d'={d_prime} are invalid")]
    BadDimensions { d: usize, d_prime: usize },

    #[error("state {state} has {got} coefficients, expected {expected}")]
    WrongCoeffCount {
        state: usize,
        expected: usize,
        got: usize,
    },

    #[error("state {state} contains a non-finite coefficient")]
    NonFinite { state: usize },

    #[error("document holds {count} states but the space dimension is {dim}")]
    TooManyStates { count: usize, dim: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocumentState {
    pub label: Vec<usize>,
    pub coeffs: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisDocument {
    pub format_version: String,
    pub d: usize,
    pub d_prime: usize,
    pub construction: Provenance,
    pub states: Vec<DocumentState>,
}

impl BasisDocument {
    pub fn from_basis(basis: &BasisSet) -> Self {
        let states = basis
            .members()
            .iter()
            .map(|m| DocumentState {
                label: m.label.clone(),
                coeffs: m.state.coeffs().iter().map(|z| [z.re, z.im]).collect(),
            })
            .collect();
        Self {
            format_version: FORMAT_VERSION.to_string(),
            d: basis.d(),
            d_prime: basis.d_prime(),
            construction: basis.provenance().clone(),
            states,
        }
    }

    /// Reconstruct the in-memory basis. Norm defects are preserved so the
    /// verification pass can report them.
    pub fn to_basis(&self) -> Result<BasisSet, DocumentError> {
        self.validate()?;
        let members = self
            .states
            .iter()
            .map(|s| {
                let coeffs: Vec<C64> = s.coeffs.iter().map(|&[re, im]| C64::new(re, im)).collect();
                let state = PureState::raw(self.d, self.d_prime, coeffs)
                    .expect("shape and finiteness validated");
                BasisMember {
                    label: s.label.clone(),
                    state,
                }
            })
            .collect();
        let basis =
            BasisSet::from_members(self.d, self.d_prime, members, self.construction.clone())
                .expect("dimensions and count validated");
        Ok(basis)
    }

    fn validate(&self) -> Result<(), DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::UnsupportedVersion(
                self.format_version.clone(),
            ));
        }
        if self.d == 0 || self.d_prime == 0 || self.d > self.d_prime {
            return Err(DocumentError::BadDimensions {
                d: self.d,
                d_prime: self.d_prime,
            });
        }
        let expected = self.d * self.d_prime;
        if self.states.len() > expected {
            return Err(DocumentError::TooManyStates {
                count: self.states.len(),
                dim: expected,
            });
        }
        for (i, s) in self.states.iter().enumerate() {
            if s.coeffs.len() != expected {
                return Err(DocumentError::WrongCoeffCount {
                    state: i,
                    expected,
                    got: s.coeffs.len(),
                });
            }
            if s.coeffs
                .iter()
                .any(|c| !c[0].is_finite() || !c[1].is_finite())
            {
                return Err(DocumentError::NonFinite { state: i });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: BasisDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn save(&self, path: &Path) -> Result<(), DocumentError> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, DocumentError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}
