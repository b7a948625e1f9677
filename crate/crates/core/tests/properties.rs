use std::collections::{BTreeSet, HashMap, HashSet};

use cpg_core::gk::{build_representation, generate_gk, rotation_system_gk, trace_faces};
use cpg_core::{
    classify_grid_point, contact_graph, max_bend, validate, CpgRepresentation, Direction,
    GridPath, GridPoint, Membership, VertexId, ViolationKind,
};
use proptest::prelude::*;

/// Walks from `start` following `dirs`, stopping before the first step that
/// leaves `[0, lim]^2` or revisits a point. At least one step is required.
fn walk(start: (i64, i64), dirs: &[Direction], lim: i64) -> Option<GridPath> {
    let mut at = GridPoint::from(start);
    let mut trail = vec![at];
    let mut seen: HashSet<GridPoint> = trail.iter().copied().collect();
    for &d in dirs {
        let next = at.step(d);
        if next.x < 0 || next.y < 0 || next.x > lim || next.y > lim || !seen.insert(next) {
            break;
        }
        trail.push(next);
        at = next;
    }
    (trail.len() >= 2).then(|| GridPath::new(&trail).expect("walk is simple"))
}

fn direction() -> impl Strategy<Value = Direction> {
    prop::sample::select(Direction::ALL.to_vec())
}

fn path_in(lim: i64) -> impl Strategy<Value = GridPath> {
    ((0..=lim, 0..=lim), prop::collection::vec(direction(), 1..12))
        .prop_filter_map("walk needs one step", move |(s, d)| walk(s, &d, lim))
}

fn rep_in_8x8() -> impl Strategy<Value = CpgRepresentation> {
    prop::collection::vec(path_in(7), 1..=5).prop_map(|paths| {
        CpgRepresentation::from_entries(
            7,
            7,
            paths
                .into_iter()
                .enumerate()
                .map(|(i, p)| (VertexId::free(format!("p{i}")), p)),
        )
    })
}

/// Keeps paths in order as long as the representation stays valid.
fn valid_subset(rep: &CpgRepresentation) -> CpgRepresentation {
    let mut out = CpgRepresentation::new(rep.width(), rep.height());
    for (id, path) in rep.entries() {
        let mut trial = out.clone();
        trial.push(id.clone(), path.clone());
        if validate(&trial).is_empty() {
            out = trial;
        }
    }
    out
}

type Edge = ((i64, i64), (i64, i64));

/// Rasterizes every path into occupancy multimaps and checks the bounds and
/// interior-disjointness rules directly. Returns (ok, overlapping edges).
fn naive_oracle(rep: &CpgRepresentation) -> (bool, BTreeSet<Edge>) {
    let mut points: HashMap<(i64, i64), Vec<(usize, bool)>> = HashMap::new();
    let mut edges: HashMap<Edge, Vec<usize>> = HashMap::new();
    let mut ok = true;
    for (idx, (_, path)) in rep.entries().enumerate() {
        let c = path.corners();
        let mut cells = vec![(c[0].x, c[0].y)];
        for w in c.windows(2) {
            let (mut x, mut y) = (w[0].x, w[0].y);
            while (x, y) != (w[1].x, w[1].y) {
                x += (w[1].x - x).signum();
                y += (w[1].y - y).signum();
                cells.push((x, y));
            }
        }
        let last = cells.len() - 1;
        for (i, &cell) in cells.iter().enumerate() {
            if cell.0 < 0 || cell.1 < 0 || cell.0 > rep.width() || cell.1 > rep.height() {
                ok = false;
            }
            points.entry(cell).or_default().push((idx, i == 0 || i == last));
        }
        for w in cells.windows(2) {
            let e = if w[0] < w[1] { (w[0], w[1]) } else { (w[1], w[0]) };
            edges.entry(e).or_default().push(idx);
        }
    }
    let overlaps: BTreeSet<Edge> = edges
        .iter()
        .filter(|(_, users)| users.len() > 1)
        .map(|(e, _)| *e)
        .collect();
    if !overlaps.is_empty() {
        ok = false;
    }
    for users in points.values() {
        for i in 0..users.len() {
            for j in i + 1..users.len() {
                if !users[i].1 && !users[j].1 {
                    ok = false;
                }
            }
        }
    }
    (ok, overlaps)
}

proptest! {
    #[test]
    fn normalization_is_idempotent(p in path_in(10)) {
        prop_assert_eq!(GridPath::new(p.corners()).unwrap(), p);
    }

    #[test]
    fn reversal_preserves_cells_and_bends(p in path_in(10)) {
        let r = GridPath::new(&p.corners().iter().rev().copied().collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(r.cells(), p.cells());
        let a: BTreeSet<_> = p.bend_points().iter().collect();
        let b: BTreeSet<_> = r.bend_points().iter().collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn path_shape_identities(p in path_in(10)) {
        prop_assert_eq!(p.bend_count(), p.corners().len() - 2);
        let dirs: Vec<Direction> = p
            .corners()
            .windows(2)
            .map(|w| Direction::between(w[0], w[1]).unwrap())
            .collect();
        for w in dirs.windows(2) {
            prop_assert_ne!(w[0].is_horizontal(), w[1].is_horizontal());
        }
        let (points, edges) = p.cells();
        prop_assert_eq!(points.len(), edges.len() + 1);
        for q in &points {
            prop_assert_ne!(p.classify(*q), Membership::Absent);
        }
    }

    #[test]
    fn validator_agrees_with_rasterizing_oracle(rep in rep_in_8x8()) {
        let violations = validate(&rep);
        let (ok, overlaps) = naive_oracle(&rep);
        prop_assert_eq!(violations.is_empty(), ok, "{:?}", violations);
        let reported: BTreeSet<Edge> = violations
            .iter()
            .filter(|v| v.kind == ViolationKind::EdgeOverlap)
            .map(|v| match v.location {
                cpg_core::contact::Location::Edge(e) => ((e.lo.x, e.lo.y), (e.hi.x, e.hi.y)),
                _ => unreachable!(),
            })
            .collect();
        prop_assert_eq!(reported, overlaps);
    }

    #[test]
    fn contact_graph_edges_have_endpoint_witnesses(rep in rep_in_8x8()) {
        let rep = valid_subset(&rep);
        let g = contact_graph(&rep).unwrap();
        for (u, v) in g.edges() {
            let pu = rep.get(u).unwrap();
            let pv = rep.get(v).unwrap();
            let witness = pu.points().find(|&p| pv.contains(p));
            prop_assert!(witness.is_some());
            let p = witness.unwrap();
            let shared: Vec<GridPoint> = pu.points().filter(|&q| pv.contains(q)).collect();
            prop_assert!(shared.iter().all(|&q| pu.is_endpoint(q) || pv.is_endpoint(q)));
            prop_assert!(pu.is_endpoint(p) || pv.is_endpoint(p));
        }
    }

    #[test]
    fn classification_partitions_endpoints(rep in rep_in_8x8()) {
        let rep = valid_subset(&rep);
        let mut endpoint_total = 0;
        for x in 0..=rep.width() {
            for y in 0..=rep.height() {
                let c = classify_grid_point(&rep, GridPoint::new(x, y)).unwrap();
                endpoint_total += c
                    .constituents
                    .iter()
                    .filter(|(_, m)| *m == Membership::Endpoint)
                    .count();
            }
        }
        prop_assert_eq!(endpoint_total, 2 * rep.len());
    }

    #[test]
    fn max_bend_is_translation_invariant(rep in rep_in_8x8(), dx in -20i64..20, dy in -20i64..20) {
        prop_assert_eq!(max_bend(&rep.translated(dx, dy)), max_bend(&rep));
    }
}

#[test]
fn canonical_layout_invariants() {
    for k in 0..=8u32 {
        let rep = build_representation(k);
        assert!(validate(&rep).is_empty());
        assert_eq!(contact_graph(&rep).unwrap(), generate_gk(k));
        assert_eq!(max_bend(&rep), k as usize + 1);
        for (id, path) in rep.entries() {
            match id {
                VertexId::Sew(..) => assert_eq!(path.bend_count(), 0, "{id}"),
                VertexId::Alpha(_) => assert_eq!(path.bend_count(), k as usize + 1, "{id}"),
                VertexId::A => assert_eq!(path.bend_count(), 0),
                VertexId::B => assert_eq!(path.bend_count(), (k % 2) as usize),
                VertexId::Free(_) => unreachable!(),
            }
        }
        let g = generate_gk(k);
        let faces = trace_faces(&g, &rotation_system_gk(k)).unwrap();
        assert_eq!(faces, g.edge_count() - g.vertex_count() + 2);
    }
}

#[test]
fn grid_reflection_of_canonical_layout_stays_valid() {
    let rep = build_representation(4);
    let w = rep.width();
    let mirrored = CpgRepresentation::from_entries(
        rep.width(),
        rep.height(),
        rep.entries()
            .map(|(id, p)| (id.clone(), p.mapped(|q| GridPoint::new(w - q.x, q.y)))),
    );
    assert!(validate(&mirrored).is_empty());
    assert_eq!(contact_graph(&mirrored).unwrap(), generate_gk(4));
}
