//! Set-level combinatorics of trees, forests and their operads: the categories
//! Ω and Φ, level forests over finite pointed sets, categories of operators
//! over `Fin*`, and shuffles of trees for the Boardman–Vogt tensor product.

pub mod error;
pub mod level;
pub mod lurie;
pub mod omega;
pub mod random;
pub mod shuffle;
pub mod tree;

pub use error::{Error, Result};
pub use omega::{OperadMap, Operation};
pub use tree::{EdgeId, Forest, Tree, Vertex};
