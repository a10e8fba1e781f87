//! Face posets of associahedra, cyclohedra and permutohedra.

pub mod charts;
pub mod error;
pub mod functors;
pub mod poset;
pub mod topology;
pub mod tree;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
