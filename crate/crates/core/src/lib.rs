//! Interval edge-colorings of graphs and their Cartesian products.
//!
//! The crate is split into graph primitives ([`graph`]), the coloring data
//! model and verifiers ([`coloring`]), explicit constructions
//! ([`constructions`]), closed-form bounds ([`bounds`]) and an exhaustive
//! search oracle for small graphs ([`oracle`]).

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod oracle;

pub use coloring::EdgeColoring;
pub use error::{Error, Result};
pub use graph::{Graph, VertexLabel};
