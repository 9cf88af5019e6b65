//! Exact computational projective geometry for generalized Desargues,
//! Pappus and Pascal configurations, and the additive group of triangles
//! built on them.
//!
//! All arithmetic is over arbitrary-precision rationals; every predicate is
//! an exact zero test.

pub mod config;
pub mod error;
pub mod group;
pub mod kernel;

pub use error::{Error, Result};
pub use kernel::{HomLine, HomPoint, ProjMap, Scalar};
