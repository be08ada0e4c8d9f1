#![no_std]
extern crate alloc;

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod fans;
pub mod geometry;
pub mod graph;
mod hull;
pub mod linalg;
pub mod polytope;
pub mod prismatoid;
pub mod report;
pub mod santos;
pub mod scalar;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use geometry::{
    affine_rank, apply_map, apply_map_ineq, evaluate, hyperplane_through, Evaluation, Inequality, OrthMap, Point,
};
pub use graph::{DualGraph, Graph, VertexGraph};
pub use polytope::{certify_vertices, facet_enumeration, Face, FacetIncidence, HPolytope, Polytope, VPolytope};
pub use prismatoid::{is_spindle, Prismatoid};
pub use report::{Check, Report};
pub use scalar::Scalar;
