//! The planar family `G_k`, its canonical `(k+1)`-bend representation, a
//! planar rotation system, and the structural audit.
//!
//! `G_k` has two hubs `a`, `b` (adjacent to each other), twenty secondary
//! vertices `alpha:1..=20` adjacent to both hubs, and nineteen gadgets. Gadget
//! `i` is a chain `sew:i:1 - ... - sew:i:(k+2)` whose every vertex is also
//! adjacent to `alpha:i` and `alpha:(i+1)`.

mod audit;
mod embedding;

pub use audit::{audit_gk, AuditError, AuditReport, Claim1Contact};
pub use embedding::{rotation_system_gk, trace_faces, EmbeddingError, RotationSystem};

use crate::contact::{CpgRepresentation, LabeledGraph, VertexId};
use crate::grid::{GridPath, GridPoint};

pub const SECONDARY_COUNT: u32 = 20;
pub const GADGET_COUNT: u32 = SECONDARY_COUNT - 1;

/// Layout constants of the canonical representation for a given `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GkParameters {
    pub k: u32,
    /// `floor((k+1)/2)`: number of staircase steps.
    pub steps: i64,
    /// Diagonal anchor of the first bends.
    pub anchor: i64,
    pub width: i64,
    pub height: i64,
}

impl GkParameters {
    pub fn new(k: u32) -> Self {
        let steps = i64::from(k.div_ceil(2));
        Self {
            k,
            steps,
            anchor: 22,
            width: 24 + steps,
            height: 24 + steps,
        }
    }

    /// Number of sewing vertices per gadget.
    pub fn chain_len(&self) -> u32 {
        self.k + 2
    }

    pub fn floor_half(&self) -> usize {
        (self.k as usize).div_ceil(2)
    }

    pub fn ceil_half(&self) -> usize {
        (self.k as usize + 2) / 2
    }

    pub fn vertex_count(&self) -> usize {
        22 + 19 * (self.k as usize + 2)
    }

    pub fn edge_count(&self) -> usize {
        41 + 19 * (3 * self.k as usize + 5)
    }

    /// Faces of any planar embedding, from Euler's formula.
    pub fn face_count(&self) -> usize {
        38 * self.k as usize + 78
    }
}

pub fn gk_vertices(k: u32) -> Vec<VertexId> {
    let mut v = vec![VertexId::A, VertexId::B];
    v.extend((1..=SECONDARY_COUNT).map(VertexId::Alpha));
    for i in 1..=GADGET_COUNT {
        v.extend((1..=k + 2).map(|j| VertexId::Sew(i, j)));
    }
    v
}

pub fn generate_gk(k: u32) -> LabeledGraph {
    let mut g = LabeledGraph::new();
    for v in gk_vertices(k) {
        g.add_vertex(v);
    }
    let mut edge = |u: VertexId, v: VertexId| {
        g.add_edge(u, v).expect("G_k edges join declared vertices");
    };
    edge(VertexId::A, VertexId::B);
    for i in 1..=SECONDARY_COUNT {
        edge(VertexId::A, VertexId::Alpha(i));
        edge(VertexId::B, VertexId::Alpha(i));
    }
    for i in 1..=GADGET_COUNT {
        for j in 1..=k + 2 {
            edge(VertexId::Alpha(i), VertexId::Sew(i, j));
            edge(VertexId::Alpha(i + 1), VertexId::Sew(i, j));
            if j <= k + 1 {
                edge(VertexId::Sew(i, j), VertexId::Sew(i, j + 1));
            }
        }
    }
    g
}

/// Bendpoints `b_1..=b_{k+1}` of the secondary path `alpha:i`.
///
/// `b_1 = (i+1, D-i)`, then a unit staircase east/north:
/// `b_{2t} = (i+1+t, D-i+t-1)`, `b_{2t+1} = (i+1+t, D-i+t)`.
fn secondary_bends(params: &GkParameters, i: u32) -> Vec<GridPoint> {
    let i = i64::from(i);
    let d = params.anchor;
    (1..=i64::from(params.k) + 1)
        .map(|j| {
            let t = j / 2;
            if j % 2 == 0 {
                GridPoint::new(i + 1 + t, d - i + t - 1)
            } else {
                GridPoint::new(i + 1 + t, d - i + t)
            }
        })
        .collect()
}

fn secondary_path(params: &GkParameters, i: u32) -> GridPath {
    let bends = secondary_bends(params, i);
    let last = *bends.last().expect("at least one bend");
    let end = if params.k.is_multiple_of(2) {
        GridPoint::new(params.width, last.y)
    } else {
        GridPoint::new(last.x, params.height)
    };
    let mut corners = vec![GridPoint::new(i64::from(i) + 1, 0)];
    corners.extend(bends);
    corners.push(end);
    GridPath::new(&corners).expect("canonical secondary path")
}

/// Contact points `x_1..=x_{k+1}` of gadget `i`: odd `j` on the right flank,
/// even `j` on the left flank.
fn gadget_contacts(params: &GkParameters, i: u32) -> Vec<GridPoint> {
    let left = secondary_bends(params, i);
    let right = secondary_bends(params, i + 1);
    (0..=params.k as usize)
        .map(|idx| if idx % 2 == 0 { right[idx] } else { left[idx] })
        .collect()
}

fn sewing_paths(params: &GkParameters, i: u32) -> Vec<GridPath> {
    let x = gadget_contacts(params, i);
    let left_anchor = {
        let i = i64::from(i);
        GridPoint::new(i + 1, params.anchor - i - 1)
    };
    let last = x[x.len() - 1];
    // Even k: x_{k+1} sits on the right flank, so the final segment goes north
    // onto the left flank's closing horizontal. Odd k: east onto the right
    // flank's closing vertical.
    let tail = if params.k.is_multiple_of(2) {
        GridPoint::new(last.x, last.y + 1)
    } else {
        GridPoint::new(last.x + 1, last.y)
    };
    let mut segs = Vec::with_capacity(x.len() + 1);
    segs.push((left_anchor, x[0]));
    for w in x.windows(2) {
        segs.push((w[0], w[1]));
    }
    segs.push((last, tail));

    let left = secondary_path(params, i);
    segs.into_iter()
        .map(|(p, q)| {
            let (from, to) = if left.contains(p) { (p, q) } else { (q, p) };
            GridPath::new(&[from, to]).expect("unit sewing segment")
        })
        .collect()
}

/// The canonical `(k+1)`-bend representation of `G_k`.
pub fn build_representation(k: u32) -> CpgRepresentation {
    let params = GkParameters::new(k);
    let (w, h) = (params.width, params.height);
    let mut rep = CpgRepresentation::new(w, h);

    rep.push(
        VertexId::A,
        GridPath::from_coords(&[(1, 0), (w, 0)]).expect("hub a"),
    );
    let b = if k.is_multiple_of(2) {
        GridPath::from_coords(&[(w, 0), (w, h)])
    } else {
        GridPath::from_coords(&[(w, 0), (w, h), (1, h)])
    };
    rep.push(VertexId::B, b.expect("hub b"));

    for i in 1..=SECONDARY_COUNT {
        rep.push(VertexId::Alpha(i), secondary_path(&params, i));
    }
    for i in 1..=GADGET_COUNT {
        for (j, path) in sewing_paths(&params, i).into_iter().enumerate() {
            rep.push(VertexId::Sew(i, j as u32 + 1), path);
        }
    }
    rep
}
