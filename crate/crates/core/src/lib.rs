pub mod arrangement;
pub mod catalog;
pub mod cli;
pub mod codes;
pub mod error;
mod fm;
pub mod ideals;
pub mod json;
pub mod matroid;
pub mod sign;
pub mod topology;

pub use error::{Error, Result};
