pub mod cli;
pub mod ecc;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod families;
pub mod format;
pub mod graph;
pub mod index;
pub mod iso;
pub mod transforms;
pub mod tree;

pub use error::{Error, Result};
pub use graph::Graph;
