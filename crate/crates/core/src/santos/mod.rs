//! The width-six 5-prismatoid: embedded data, symmetries and verification.

pub mod data;
pub mod maps;
pub mod structure;
pub mod symmetry;
pub mod verify;

pub use data::{expected_facets, vertex_index, vertex_label, FacetForm, FacetLabel};
pub use structure::{
    label_facets, orbit_adjacency_graph, santos_prismatoid, verify_incidences, verify_prism_structure, OrbitQuotient,
};
pub use symmetry::{symmetry_groups, SymmetryGroup};
pub use verify::verify_santos;
