//! Exact verification toolkit for complex structures on 8-dimensional
//! nilpotent Lie algebras with one-dimensional center.

pub mod error;
pub mod exterior;
pub mod invariants;
pub mod kernel;
pub mod lie;
pub mod parse;
pub mod complex;
pub mod catalog;

pub use error::{Error, Result};
