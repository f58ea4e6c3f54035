//! Laplacian and distance Laplacian spectra of generalized fan graphs
//! `F_{m,n} = K̄_m + P_n` and of `NC(F_{m,n})`, two copies of `F_{m,n}` whose
//! hubs are joined by a perfect matching.
//!
//! The crate builds the graphs with a fixed vertex ordering, constructs
//! their adjacency, Laplacian and distance-family matrices, evaluates the
//! closed-form spectra and checks each one against an independent cyclic
//! Jacobi eigensolver and against equitable quotient matrices.
//!
//! ```
//! use fanspec_core::{closed_form, eigen, graph, matrix, verify};
//!
//! let g = graph::generalized_fan(3, 4).unwrap();
//! let numeric = eigen::eigenvalues(&matrix::laplacian_matrix(&g)).unwrap();
//! let closed = closed_form::fan_laplacian_spectrum(3, 4).unwrap();
//! assert!(verify::compare_spectra(&closed.expanded(), &numeric).unwrap() < 1e-10);
//! ```

pub mod closed_form;
pub mod eigen;
pub mod errata;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod quotient;
pub mod tables;
pub mod verify;

pub use closed_form::{ClosedFormSource, ClosedFormSpectrum};
pub use eigen::Spectrum;
pub use error::{Error, Result};
pub use graph::{Family, FamilyDescriptor, Graph};
pub use matrix::{DenseSymMatrix, MatrixKind};
pub use quotient::{Partition, QuotientMatrix};
pub use verify::{ClosedFormCase, ClosedFormKind, VerificationReport};
