//! Exact projective-plane primitives over the rationals.

pub mod conic;
pub mod cross_ratio;
pub mod linalg;
pub mod point;
pub mod projmap;
pub mod scalar;

pub use conic::{conic_through_5, Conic};
pub use cross_ratio::{cross_ratio, harmonic_conjugate};
pub use linalg::Mat3;
pub use point::{collinear, combine, concurrent, join, meet, midpoint, HomLine, HomPoint};
pub use projmap::ProjMap;
pub use scalar::{format_scalar, int, parse_scalar, rat, Scalar};
