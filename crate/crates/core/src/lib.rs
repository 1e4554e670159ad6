//! Combinatorial simplification of simplicial complexes (weeding, Stong
//! reduction, the transpose-and-dominate reduction) together with formal
//! concept analysis of the same data, and simplicial homology over prime
//! fields to check that every reduction preserves homology.
//!
//! Vertices, objects, attributes and neurons are 0-based in the API. The text
//! formats (`.cplx`, `.cxt`, code files) and JSON exports use 1-based members.

pub mod bitset;
pub mod cell;
pub mod cli;
pub mod complex;
mod error;
pub mod fca;
pub mod homology;
pub mod neural;
pub mod poset;
pub mod random;

pub use bitset::{BitSet, VertexSet};
pub use cell::CellComplex;
pub use complex::{FVector, SimplicialComplex};
pub use error::{Error, Result};
pub use fca::{Concept, ConceptLattice, FormalContext};
pub use homology::{BettiVector, Field, LinkClass};
pub use neural::{NeuralCode, SampledCover};
pub use poset::{Beat, BeatKind, Poset};

/// Size limits guarding the exponential parts of the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of faces enumerated for a complex.
    pub face_cap: usize,
    /// Maximum poset size accepted by the isomorphism search.
    pub iso_cap: usize,
    /// Maximum number of objects for exhaustive concept enumeration.
    pub concept_object_cap: usize,
}

pub const DEFAULT_FACE_CAP: usize = 1_000_000;
pub const DEFAULT_ISO_CAP: usize = 64;
pub const DEFAULT_CONCEPT_OBJECT_CAP: usize = 30;

/// Environment variable overriding [`Limits::face_cap`] in the CLI.
pub const FACE_CAP_ENV: &str = "NERVELAT_FACE_CAP";

impl Default for Limits {
    fn default() -> Self {
        Self {
            face_cap: DEFAULT_FACE_CAP,
            iso_cap: DEFAULT_ISO_CAP,
            concept_object_cap: DEFAULT_CONCEPT_OBJECT_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the face cap taken from `NERVELAT_FACE_CAP` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Self::default();
        if let Ok(value) = std::env::var(FACE_CAP_ENV) {
            limits.face_cap = value.trim().parse().map_err(|_| {
                Error::domain(format!("{FACE_CAP_ENV} must be a non-negative integer, got {value:?}"))
            })?;
        }
        Ok(limits)
    }
}
