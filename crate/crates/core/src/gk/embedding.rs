use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use super::{GkParameters, GADGET_COUNT, SECONDARY_COUNT};
use crate::contact::{LabeledGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation at {vertex} disagrees with its neighbor set")]
    RotationMismatch { vertex: VertexId },
}

/// Cyclic neighbor order around every vertex (counter-clockwise).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RotationSystem {
    order: BTreeMap<VertexId, Vec<VertexId>>,
}

impl RotationSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: VertexId, cyclic: Vec<VertexId>) {
        self.order.insert(v, cyclic);
    }

    pub fn around(&self, v: &VertexId) -> Option<&[VertexId]> {
        self.order.get(v).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, &[VertexId])> {
        self.order.iter().map(|(v, n)| (v, n.as_slice()))
    }

    /// Checks that every list is exactly the neighbor set of its vertex.
    pub fn check(&self, graph: &LabeledGraph) -> Result<(), EmbeddingError> {
        let adj = graph.adjacency();
        for v in graph.vertices() {
            let listed = self.order.get(v).map(Vec::as_slice).unwrap_or(&[]);
            let set: BTreeSet<&VertexId> = listed.iter().collect();
            if set.len() != listed.len() || set != adj[v] {
                return Err(EmbeddingError::RotationMismatch { vertex: v.clone() });
            }
        }
        if let Some(extra) = self.order.keys().find(|v| !graph.contains_vertex(v)) {
            return Err(EmbeddingError::RotationMismatch {
                vertex: extra.clone(),
            });
        }
        Ok(())
    }
}

/// Counts the faces of the embedding given by `rot`.
///
/// Darts are traced with `next(u -> v) = (v -> w)`, where `w` follows `u` in
/// the rotation at `v`. For a connected graph the embedding is planar iff
/// `V - E + F = 2`. A graph without edges has a single face.
pub fn trace_faces(graph: &LabeledGraph, rot: &RotationSystem) -> Result<usize, EmbeddingError> {
    rot.check(graph)?;
    if graph.edge_count() == 0 {
        return Ok(1);
    }

    let mut dart_id: HashMap<(&VertexId, &VertexId), usize> = HashMap::new();
    let mut darts: Vec<(&VertexId, &VertexId)> = Vec::new();
    let mut position: HashMap<(&VertexId, &VertexId), usize> = HashMap::new();
    for (v, list) in rot.iter() {
        for (idx, w) in list.iter().enumerate() {
            dart_id.insert((v, w), darts.len());
            darts.push((v, w));
            position.insert((v, w), idx);
        }
    }

    let next = |(u, v): (&VertexId, &VertexId)| -> usize {
        let list = rot.around(v).expect("checked");
        let at = position[&(v, u)];
        let w = &list[(at + 1) % list.len()];
        dart_id[&(v, w)]
    };

    let mut seen = vec![false; darts.len()];
    let mut faces = 0;
    for start in 0..darts.len() {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = next(darts[d]);
        }
    }
    Ok(faces)
}

/// The embedding of `G_k` drawn with `a` on top, `b` at the bottom, the
/// secondaries left to right between them and the `a`-`b` edge around the
/// left side. Inside gadget `i` the chain runs upward, `sew:i:1` lowest.
pub fn rotation_system_gk(k: u32) -> RotationSystem {
    let params = GkParameters::new(k);
    let m = params.chain_len();
    let mut rot = RotationSystem::new();

    let mut around_a = vec![VertexId::B];
    around_a.extend((1..=SECONDARY_COUNT).map(VertexId::Alpha));
    rot.set(VertexId::A, around_a);

    let mut around_b: Vec<VertexId> = (1..=SECONDARY_COUNT).rev().map(VertexId::Alpha).collect();
    around_b.push(VertexId::A);
    rot.set(VertexId::B, around_b);

    for i in 1..=SECONDARY_COUNT {
        // Counter-clockwise from b: right gadget bottom to top, a, left
        // gadget top to bottom.
        let mut list = vec![VertexId::B];
        if i <= GADGET_COUNT {
            list.extend((1..=m).map(|j| VertexId::Sew(i, j)));
        }
        list.push(VertexId::A);
        if i > 1 {
            list.extend((1..=m).rev().map(|j| VertexId::Sew(i - 1, j)));
        }
        rot.set(VertexId::Alpha(i), list);
    }

    for i in 1..=GADGET_COUNT {
        let left = VertexId::Alpha(i);
        let right = VertexId::Alpha(i + 1);
        for j in 1..=m {
            // West, south, east, north.
            let mut list = vec![left.clone()];
            if j > 1 {
                list.push(VertexId::Sew(i, j - 1));
            }
            list.push(right.clone());
            if j < m {
                list.push(VertexId::Sew(i, j + 1));
            }
            rot.set(VertexId::Sew(i, j), list);
        }
    }
    rot
}
