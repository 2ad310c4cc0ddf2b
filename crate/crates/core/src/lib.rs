//! Secure domination toolkit.

pub mod crosscheck;
pub mod domination;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognition;
pub mod reductions;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
