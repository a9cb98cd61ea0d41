//! Exact computation of `M`-covering numbers of lattice subsets by
//! axis-aligned coordinate subspaces, constructive restriction extraction,
//! decomposition enumeration, and a finite-field slice-rank oracle with the
//! antichain bridge between slice rank and the slice covering number.

pub mod coloring;
pub mod error;
pub mod field;
pub mod harness;
pub mod independence;
pub mod io;
pub mod lattice;
pub mod pattern;
pub mod restrict;
pub mod solver;
pub mod subspace;
pub mod tensor;

pub use error::{Error, Result};
pub use lattice::{LatticeShape, LatticeSubset, Point, Restriction};
pub use pattern::{Pattern, PatternFamily};
pub use solver::{CoverDecomposition, CoverResult, SolverConfig};
pub use subspace::Subspace;
