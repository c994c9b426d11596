//! Ideal-based rough approximation operators over finite models.
//!
//! Subsets are bit masks over a labelled [`Universe`]. On top of that sit lattice
//! ideals of set families, σ-ideals of arbitrary relations, the point-wise and
//! co-granular approximation engines, discrete mereotopology, and a seeded
//! law-verification harness.

pub mod approx;
pub mod error;
pub mod family;
pub mod harness;
pub mod instance;
pub mod lattice;
pub mod mereo;
pub mod reference;
pub mod sigma;
pub mod universe;

pub use error::{Error, Result};
pub use family::SubsetFamily;
pub use lattice::LatticeIdeal;
pub use sigma::{Directedness, SigmaStructure};
pub use universe::{BinaryRelation, EmptyMeet, Subset, Universe};
