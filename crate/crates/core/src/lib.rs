//! Exact solving of cops-and-robbers variants on finite graphs with loops,
//! together with fold/unfold (×-homotopy) machinery and graph products.

pub mod graph;
pub mod homotopy;
pub mod products;
pub mod solver;
pub mod verify;

pub use graph::{Graph, GraphError};
