pub mod canon;
pub mod census;
pub mod decompose;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod io;

pub use census::Count;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
