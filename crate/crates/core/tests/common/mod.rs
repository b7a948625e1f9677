//! Helpers shared by integration tests.

use std::collections::BTreeSet;

use cpg_core::{contact_graph, validate, CpgRepresentation, GridPath, GridPoint, LabeledGraph, VertexId};

/// Every labeled graph on `n` vertices `free:v0..`.
pub fn labeled_graphs(n: usize) -> Vec<LabeledGraph> {
    let ids: Vec<VertexId> = (0..n).map(|i| VertexId::free(format!("v{i}"))).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let mut g = LabeledGraph::new();
            for id in &ids {
                g.add_vertex(id.clone());
            }
            for (bit, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    g.add_edge(ids[i].clone(), ids[j].clone()).unwrap();
                }
            }
            g
        })
        .collect()
}

/// Paths in an `n x n` point grid built from raw corner sequences, with at
/// most `bends` bends, one orientation each, sorted.
pub fn brute_paths(n: i64, bends: usize) -> Vec<GridPath> {
    let points: Vec<GridPoint> = (0..n)
        .flat_map(|x| (0..n).map(move |y| GridPoint::new(x, y)))
        .collect();
    let mut out = BTreeSet::new();
    let mut seqs: Vec<Vec<GridPoint>> = points.iter().map(|&p| vec![p]).collect();
    for _ in 0..=bends {
        let mut next = Vec::new();
        for s in &seqs {
            for &p in &points {
                let mut t = s.clone();
                t.push(p);
                if let Ok(path) = GridPath::new(&t) {
                    if path.bend_count() <= bends {
                        out.insert(path.canonical());
                    }
                }
                next.push(t);
            }
        }
        seqs = next;
    }
    out.into_iter().collect()
}

/// First assignment, in lexicographic order of candidate indices, whose
/// representation validates and has contact graph `g`.
pub fn brute_force(g: &LabeledGraph, n: i64, paths: &[GridPath]) -> Option<CpgRepresentation> {
    let ids: Vec<VertexId> = g.vertices().cloned().collect();
    let mut idx = vec![0usize; ids.len()];
    loop {
        let rep = CpgRepresentation::from_entries(
            n - 1,
            n - 1,
            ids.iter().cloned().zip(idx.iter().map(|&i| paths[i].clone())),
        );
        if validate(&rep).is_empty() && contact_graph(&rep).unwrap() == *g {
            return Some(rep);
        }
        let mut pos = ids.len();
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < paths.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
