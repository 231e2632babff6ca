//! Exact computations on interval-vector polytopes: affine dimension, the
//! flow-dimension graph, facets and face numbers, lattice-point counts,
//! Ehrhart polynomials and normalized volumes, plus an executable suite of
//! the identities these quantities are known to satisfy.

pub mod cli;
pub mod ehrhart;
pub mod error;
pub mod family;
pub mod flow;
pub mod format;
pub mod hull;
pub mod lattice;
pub mod polytope;
pub mod verify;

pub use error::{Error, Result};
pub use family::{build_family, build_root_polytope, FamilySpec};
pub use lattice::IntVec;
pub use polytope::LatticePolytope;
