//! Polytope-building operations: one-point suspension, pushing, the strong
//! d-step, products, blending, and Hirsch-excess arithmetic.

pub mod blend;
pub mod dstep;
pub mod excess;
pub mod ops;
pub mod product;
pub mod push;

pub use blend::{blend_graph, BlendGraph};
pub use dstep::{strong_dstep_iterate, strong_dstep_step, StepChoice, TraceEntry};
pub use excess::{family_parameters, hirsch_excess, is_hirsch, ExcessReport, FamilyParameters};
pub use ops::{one_point_suspension, ops_distance_check};
pub use product::{power, product};
pub use push::{push_vertex, push_vertex_with};
