//! On-disk formats.
//!
//! Graph files are line-oriented text:
//!
//! ```text
//! cpg-graph v1
//! v a
//! v b
//! e a b
//! ```
//!
//! Representation files are one JSON document:
//!
//! ```text
//! {"version":1,"grid":{"w":3,"h":3},"paths":{"free:x":[[0,0],[2,0]]}}
//! ```
//!
//! Writers emit vertices, edges and path keys in canonical label order and
//! end with a single `\n`.

use std::fmt;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use thiserror::Error;

use crate::contact::{CpgRepresentation, GraphError, LabeledGraph, VertexId, VertexIdError};
use crate::grid::{GridPath, GridPoint, PathError};

pub const GRAPH_HEADER: &str = "cpg-graph v1";
pub const REP_VERSION: u64 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Vertex {
        line: usize,
        #[source]
        source: VertexIdError,
    },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("malformed representation: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported representation version {0}")]
    Version(u64),
    #[error("path {id}: {source}")]
    Path {
        id: String,
        #[source]
        source: PathError,
    },
    #[error(transparent)]
    Id(#[from] VertexIdError),
}

pub fn write_graph(g: &LabeledGraph) -> String {
    let mut out = String::from(GRAPH_HEADER);
    out.push('\n');
    for v in g.vertices() {
        out.push_str(&format!("v {v}\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph, FormatError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim_end() == GRAPH_HEADER => {}
        _ => {
            return Err(FormatError::Syntax {
                line: 1,
                msg: format!("expected header {GRAPH_HEADER:?}"),
            })
        }
    }
    let mut g = LabeledGraph::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let id = |s: &str| s.parse::<VertexId>().map_err(|source| FormatError::Vertex { line, source });
        match fields.as_slice() {
            [] => {}
            ["v", v] => {
                if !g.add_vertex(id(v)?) {
                    return Err(FormatError::Syntax {
                        line,
                        msg: format!("duplicate vertex {v}"),
                    });
                }
            }
            ["e", u, v] => {
                g.add_edge(id(u)?, id(v)?)
                    .map_err(|source| FormatError::Graph { line, source })?;
            }
            _ => {
                return Err(FormatError::Syntax {
                    line,
                    msg: format!("unrecognized line {raw:?}"),
                })
            }
        }
    }
    Ok(g)
}

pub fn write_representation(rep: &CpgRepresentation) -> String {
    let mut out = format!(
        "{{\"version\":{REP_VERSION},\"grid\":{{\"w\":{},\"h\":{}}},\"paths\":{{",
        rep.width(),
        rep.height()
    );
    for (n, (id, path)) in rep.entries().enumerate() {
        if n > 0 {
            out.push(',');
        }
        let key = serde_json::to_string(&id.to_string()).expect("string encodes");
        out.push_str(&key);
        out.push_str(":[");
        for (i, p) in path.corners().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("[{},{}]", p.x, p.y));
        }
        out.push(']');
    }
    out.push_str("}}\n");
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepDoc {
    version: u64,
    grid: GridDoc,
    paths: PathEntries,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GridDoc {
    w: i64,
    h: i64,
}

/// Path entries in document order; repeated keys are kept so that the
/// validator can report them.
struct PathEntries(Vec<(String, Vec<[i64; 2]>)>);

impl<'de> Deserialize<'de> for PathEntries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = PathEntries;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from vertex id to corner list")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, Vec<[i64; 2]>>()? {
                    out.push((k, v));
                }
                Ok(PathEntries(out))
            }
        }

        d.deserialize_map(EntriesVisitor).map_err(de::Error::custom)
    }
}

pub fn parse_representation(text: &str) -> Result<CpgRepresentation, FormatError> {
    let doc: RepDoc = serde_json::from_str(text)?;
    if doc.version != REP_VERSION {
        return Err(FormatError::Version(doc.version));
    }
    let mut rep = CpgRepresentation::new(doc.grid.w, doc.grid.h);
    for (key, corners) in doc.paths.0 {
        let id: VertexId = key.parse()?;
        let corners: Vec<GridPoint> = corners.iter().map(|&[x, y]| GridPoint::new(x, y)).collect();
        let path = GridPath::new(&corners).map_err(|source| FormatError::Path { id: key, source })?;
        rep.push(id, path);
    }
    Ok(rep)
}
