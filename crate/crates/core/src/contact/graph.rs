use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at {0}")]
    SelfLoop(VertexId),
    #[error("edge endpoint {0} is not a declared vertex")]
    UnknownVertex(VertexId),
}

/// Simple undirected graph. Edges are stored as `(lo, hi)` with `lo < hi`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabeledGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl LabeledGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false if the vertex was already present.
    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        self.vertices.insert(v)
    }

    /// Adds `{u, v}`; duplicate edges collapse. Returns false on a duplicate.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [&u, &v] {
            if !self.vertices.contains(w) {
                return Err(GraphError::UnknownVertex(w.clone()));
            }
        }
        Ok(self.edges.insert(ordered(u, v)))
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = &VertexId> {
        self.vertices.iter()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &(VertexId, VertexId)> {
        self.edges.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, u: &VertexId, v: &VertexId) -> bool {
        if u <= v {
            self.edges.contains(&(u.clone(), v.clone()))
        } else {
            self.edges.contains(&(v.clone(), u.clone()))
        }
    }

    pub fn adjacency(&self) -> BTreeMap<&VertexId, BTreeSet<&VertexId>> {
        let mut adj: BTreeMap<&VertexId, BTreeSet<&VertexId>> =
            self.vertices.iter().map(|v| (v, BTreeSet::new())).collect();
        for (u, v) in &self.edges {
            adj.get_mut(u).expect("declared").insert(v);
            adj.get_mut(v).expect("declared").insert(u);
        }
        adj
    }

    pub fn neighbors(&self, v: &VertexId) -> Vec<&VertexId> {
        self.edges
            .iter()
            .filter_map(|(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: &VertexId) -> usize {
        self.edges.iter().filter(|(a, b)| a == v || b == v).count()
    }

    pub fn is_connected(&self) -> bool {
        let Some(start) = self.vertices.iter().next() else {
            return true;
        };
        let adj = self.adjacency();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in &adj[v] {
                if seen.insert(*w) {
                    stack.push(*w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}
