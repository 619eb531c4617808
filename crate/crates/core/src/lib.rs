pub mod error;
pub mod graph;
pub mod matching;
pub mod preclusion;
pub mod families;
pub mod extremal;
pub mod report;
pub mod cli;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, EdgeSet};
