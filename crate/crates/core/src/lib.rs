//! Sparse non-Hermitian random matrix toolkit.
//!
//! Generates sparse ensembles `Z = X ⊙ Y` (Bernoulli(p) mask, normalized
//! weights), analyzes the cycle structure of the mask digraph, computes exact
//! and two-sided numerical spectral-radius bounds in log domain, and runs
//! seeded, thread-count-independent Monte Carlo experiments.

pub mod digraph;
pub mod ensemble;
pub mod experiments;
pub mod rng;
pub mod sparse;
pub mod spectral;

pub use digraph::{structure_report, StructureReport};
pub use ensemble::{sample_matrix, EnsembleParams, WeightSpec};
pub use sparse::SparseMatrix;
pub use spectral::{estimate_radius, RadiusBounds, RadiusOptions};
