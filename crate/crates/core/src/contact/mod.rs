//! Representations as labeled path collections: validation, contact-graph
//! extraction and grid-point classification.

mod graph;
mod representation;
mod vertex;

pub use graph::{GraphError, LabeledGraph};
pub(crate) use representation::{classify_constituents, contact_graph_unchecked};
pub use representation::{
    classify_grid_point, contact_graph, max_bend, pure_members, validate, ContactError,
    CpgRepresentation, Location, PointClass, PointKind, Violation, ViolationKind,
};
pub use vertex::{VertexId, VertexIdError};
