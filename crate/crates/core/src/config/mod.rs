//! Configuration theorems: the main construction in the central and axis
//! models, the two proof paths, Pappus/Pascal generalizations, and the
//! Reye-dual incidence count.

pub mod axis;
pub mod central;
pub mod hexagon;
pub mod quartic;
pub mod random;
pub mod reye;
pub mod scene;

pub use axis::{main_construction_axis, polar_scene, verify_axis_theorem, verify_polar_duality};
pub use central::{
    main_construction_central, verify_desargues, verify_generalized_desargues, verify_proof1_path, MainConstruction,
};
pub use hexagon::{
    another_pascal_center, generalized_pappus_center, generalized_pascal_center, pappus_line, pascal_line,
    random_conic_hexagon, random_pappus_triples,
};
pub use quartic::{fit_quartics, verify_proof2_path, verify_quartic_fact, Proof2Grid, QuarticForm};
pub use reye::{reye_dual_counts, Configuration, ReyeCounts};
pub use scene::{random_axis_scene, random_central_scene, AxisScene, CentralScene, Scene, SceneJson};
