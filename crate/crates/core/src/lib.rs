pub mod artin;
pub mod catalog;
pub mod claims;
pub mod coxeter;
pub mod degeneration;
pub mod delpezzo;
pub mod error;
pub mod lattice;
pub mod rational;

pub use error::{Error, Result};
