//! Cohomological reduction over Z2.
//!
//! Given a cohomological model of a finite group `G` (basis sizes, codifferential
//! matrices and the lift `F`), this crate computes a basis of representative
//! n-cocycles and a basis of n-coboundaries, materializes the corresponding ±1
//! n-dimensional cocyclic matrices, and enumerates their span looking for
//! planar, improper and proper higher-dimensional Hadamard matrices.
//!
//! Group elements and cochain tuples are indexed from 1, matching the row
//! ordering of a direct product `A × B` as `a1b1, a1b2, …, a2b1, …`.

pub mod cli;
pub mod closed_form;
pub mod cochain;
pub mod cohmodel;
pub mod error;
pub mod gf2;
pub mod group;
pub mod reduction;
pub mod search;
pub mod tensor;
pub mod verify;

pub use cochain::Cochain;
pub use cohmodel::CohModel;
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitRow, SnfResult};
pub use group::{Family, FiniteGroup, GroupSpec};
pub use reduction::{CoboundaryMode, CochainBasis, ReductionOutput};
pub use search::{Predicate, SearchOptions, SearchReport, SearchSpace};
pub use tensor::SignTensor;
