//! Combinatorial engine for Adinkras.
//!
//! An Adinkra is a bipartite graph whose edges carry a regular coloring with
//! the quadrilateral property, a totally odd dashing and a compatible height
//! grading. Connected examples are quotients of hypercubes by doubly even
//! binary codes. The crate builds these graphs, checks each of the defining
//! conditions, converts them to Latin-rectangle and semi-magic-square form,
//! and emits the supercharge transformation rules they encode.

pub mod agf;
pub mod code;
pub mod construct;
pub mod dashing;
pub mod dot;
pub mod error;
#[cfg(test)]
mod fixtures;
pub mod graph;
pub mod heights;
pub mod latin;
pub mod linalg;
pub mod matrix;
pub mod structure;
pub mod susy;
pub mod verify;

pub use code::{BitVector, CodeClass, LinearCode};
pub use dashing::DashingSystem;
pub use error::{Error, Result};
pub use graph::{Color, ColorPermutations, ColoredGraph, Edge, GraphBuilder, Parity, Sign, Vertex};
pub use heights::HeightAssignment;
pub use latin::LatinAdjacencyList;
pub use matrix::SemiMagicMatrix;
pub use structure::{BicolorReport, ExchangeGroupSummary};
pub use susy::{FieldTerm, SupermultipletRules};
pub use verify::{Classification, VerifyReport};
