//! Contact representations of paths on a grid (CPG).
//!
//! Exact rectilinear path geometry, interior-disjointness validation,
//! contact-graph extraction, the planar family `G_k` with its canonical
//! `(k+1)`-bend representation, structural audits of representations of
//! `G_k`, and a bounded exhaustive search for small graphs.

pub mod cli;
pub mod contact;
pub mod format;
pub mod gk;
pub mod grid;
pub mod render;
pub mod search;

pub use contact::{
    classify_grid_point, contact_graph, max_bend, pure_members, validate, ContactError,
    CpgRepresentation, LabeledGraph, PointClass, PointKind, VertexId, Violation, ViolationKind,
};
pub use grid::{Direction, GridPath, GridPoint, Membership, PathError, UnitEdge};
