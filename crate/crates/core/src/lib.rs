pub mod character;
pub mod cli;
pub mod constant_term;
pub mod error;
pub mod ev;
pub mod identity;
pub mod partition;
pub mod paths;
pub mod qseries;
pub mod symfunc;

pub use error::{Error, Result};
