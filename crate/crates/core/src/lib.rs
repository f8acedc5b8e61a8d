//! Exact distinguishing numbers and distinguishing indices of small graphs,
//! with the non-neighbourhood partition machinery for joins G₁ + G₂ and
//! executable checks of the known bounds.

pub mod automorphism;
pub mod bounds;
pub mod corpus;
pub mod budget;
pub mod distinguishing;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hamiltonian;
pub mod io;
pub mod iso;
pub mod join_partition;
pub mod labeling;
mod refine;

pub use budget::{Budget, Caps};
pub use error::{Error, Result};
pub use graph::{join, Graph, Induced, JoinGraph, Side, VertexSet};
