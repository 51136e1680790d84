//! Whitney 2-complexes: link graphs, planar rotation systems, local
//! surfaces, fattenings and simple-connectivity evidence.

pub mod complex;
pub mod fattening;
pub mod gallery;
pub mod graph;
pub mod io;
pub mod pipeline;
pub mod rotation;
pub mod subdivision;
pub mod surfaces;
pub mod topology;
pub mod whitney;

pub use complex::{Complex2, ComplexError, DirectedEdge, DirectedFace};
