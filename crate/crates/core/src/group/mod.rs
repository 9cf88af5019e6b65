//! The space of triangles with sides parallel to a fixed reference triangle,
//! completed by pseudo-triangles, as an additive group.

pub mod central;
pub mod element;
pub mod frame;
pub mod presum;
pub mod pseudo;
pub mod samples;

pub use central::{central_half, half, half_triangle, verify_central_half, CentralFrame, CentralHalf};
pub use element::{
    half_coords, presum_coords, reflect_mass_center, sum, sum_with_fixed, Kind, TriangleElement,
};
pub use frame::{Frame, GeometricTriangle};
pub use presum::{presum_geometric, reflect_in_side_midpoint, sum_geometric, Presum, PresumCase};
pub use pseudo::{midpoint_triangle, pseudo_parameterize, pseudo_presum_via_lemma, pseudo_vertices, Direction};
pub use samples::{random_any, random_element, random_pair, PairClass};
