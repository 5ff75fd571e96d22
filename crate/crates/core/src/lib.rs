pub mod betti;
pub mod error;
pub mod families;
pub mod graph;
pub mod hilbert;
pub mod indpoly;
pub mod poly;
pub mod recursions;
pub mod survey;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use indpoly::{bundle, InvariantBundle};
pub use poly::IntPoly;
