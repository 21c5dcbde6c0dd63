//! Minimal nilpotent orbits, secant defects of highest-weight orbits, and symmetric pairs,
//! computed in exact arithmetic.

pub mod catalog;
pub mod error;
pub mod exec;
pub mod hwmod;
pub mod involutions;
pub mod linalg;
pub mod matrixlab;
pub mod orbits;
pub mod rootsys;
pub mod tables;
pub mod template;

pub use error::{Error, Result};
