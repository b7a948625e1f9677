use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use super::{LabeledGraph, VertexId};
use crate::grid::{GridPath, GridPoint, Membership, UnitEdge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContactError {
    #[error("representation has {0} violation(s)")]
    InvalidRepresentation(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

/// A labeled collection of grid paths inside the inclusive rectangle
/// `[0, width] x [0, height]`.
///
/// Entries are kept sorted by label. Duplicate labels are representable so
/// that [`validate`] can report them; every other operation assumes a valid
/// representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CpgRepresentation {
    width: i64,
    height: i64,
    paths: Vec<(VertexId, GridPath)>,
}

impl CpgRepresentation {
    pub fn new(width: i64, height: i64) -> Self {
        Self {
            width,
            height,
            paths: Vec::new(),
        }
    }

    pub fn from_entries(
        width: i64,
        height: i64,
        entries: impl IntoIterator<Item = (VertexId, GridPath)>,
    ) -> Self {
        let mut rep = Self::new(width, height);
        for (id, path) in entries {
            rep.push(id, path);
        }
        rep
    }

    /// Appends an entry, keeping the label order stable.
    pub fn push(&mut self, id: VertexId, path: GridPath) {
        let at = self.paths.partition_point(|(other, _)| *other <= id);
        self.paths.insert(at, (id, path));
    }

    /// Replaces the path of `id` (or inserts it). Returns the old path.
    pub fn set(&mut self, id: VertexId, path: GridPath) -> Option<GridPath> {
        match self.paths.iter_mut().find(|(other, _)| *other == id) {
            Some(entry) => Some(std::mem::replace(&mut entry.1, path)),
            None => {
                self.push(id, path);
                None
            }
        }
    }

    pub fn remove(&mut self, id: &VertexId) -> Option<GridPath> {
        let at = self.paths.iter().position(|(other, _)| other == id)?;
        Some(self.paths.remove(at).1)
    }

    pub fn width(&self) -> i64 {
        self.width
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn set_bounds(&mut self, width: i64, height: i64) {
        self.width = width;
        self.height = height;
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn get(&self, id: &VertexId) -> Option<&GridPath> {
        self.paths
            .iter()
            .find_map(|(other, path)| (other == id).then_some(path))
    }

    pub fn entries(&self) -> impl ExactSizeIterator<Item = (&VertexId, &GridPath)> {
        self.paths.iter().map(|(id, path)| (id, path))
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = &VertexId> {
        self.paths.iter().map(|(id, _)| id)
    }

    pub fn in_bounds(&self, p: GridPoint) -> bool {
        (0..=self.width).contains(&p.x) && (0..=self.height).contains(&p.y)
    }

    /// Shifts every path; bounds are left untouched.
    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        Self {
            width: self.width,
            height: self.height,
            paths: self
                .paths
                .iter()
                .map(|(id, path)| (id.clone(), path.translated(dx, dy)))
                .collect(),
        }
    }

    /// Every path whose point set contains `p`, with its membership class.
    pub fn constituents(&self, p: GridPoint) -> Vec<(VertexId, Membership)> {
        self.paths
            .iter()
            .filter_map(|(id, path)| match path.classify(p) {
                Membership::Absent => None,
                m => Some((id.clone(), m)),
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    EdgeOverlap,
    InteriorIntersection,
    OutOfBounds,
    DuplicateVertex,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Location {
    Point(GridPoint),
    Edge(UnitEdge),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Point(p) => write!(f, "point {p}"),
            Location::Edge(e) => write!(f, "edge {e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub location: Location,
    pub witnesses: Vec<VertexId>,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {} [", self.kind, self.location)?;
        for (i, w) in self.witnesses.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("]")
    }
}

/// Checks bounds, label uniqueness and interior-disjointness.
///
/// An overlapping run of unit edges is reported once per edge as
/// `EdgeOverlap`; `InteriorIntersection` is reserved for points where two
/// paths meet without sharing an incident edge.
pub fn validate(rep: &CpgRepresentation) -> Vec<Violation> {
    let mut out = Vec::new();
    let entries = &rep.paths;

    for w in entries.windows(2) {
        if w[0].0 == w[1].0 {
            out.push(Violation {
                location: Location::Point(w[1].1.start()),
                witnesses: vec![w[1].0.clone()],
                kind: ViolationKind::DuplicateVertex,
            });
        }
    }

    for (id, path) in entries {
        if let Some(p) = path.points().filter(|&p| !rep.in_bounds(p)).min() {
            out.push(Violation {
                location: Location::Point(p),
                witnesses: vec![id.clone()],
                kind: ViolationKind::OutOfBounds,
            });
        }
    }

    let mut edge_users: BTreeMap<UnitEdge, Vec<usize>> = BTreeMap::new();
    let mut point_users: BTreeMap<GridPoint, Vec<(usize, Membership)>> = BTreeMap::new();
    for (idx, (_, path)) in entries.iter().enumerate() {
        for e in path.unit_edges() {
            edge_users.entry(e).or_default().push(idx);
        }
        for p in path.points() {
            point_users.entry(p).or_default().push((idx, path.classify(p)));
        }
    }

    let mut overlap_points: BTreeSet<(usize, usize, GridPoint)> = BTreeSet::new();
    for (edge, users) in &edge_users {
        for (a, b) in pairs(users) {
            out.push(Violation {
                location: Location::Edge(*edge),
                witnesses: witnesses(entries, a, b),
                kind: ViolationKind::EdgeOverlap,
            });
            overlap_points.insert((a, b, edge.lo));
            overlap_points.insert((a, b, edge.hi));
        }
    }

    for (point, users) in &point_users {
        for i in 0..users.len() {
            for j in i + 1..users.len() {
                let (a, ma) = users[i];
                let (b, mb) = users[j];
                if ma.is_interior()
                    && mb.is_interior()
                    && !overlap_points.contains(&(a, b, *point))
                {
                    out.push(Violation {
                        location: Location::Point(*point),
                        witnesses: witnesses(entries, a, b),
                        kind: ViolationKind::InteriorIntersection,
                    });
                }
            }
        }
    }

    out.sort();
    out
}

fn pairs(users: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..users.len()).flat_map(move |i| (i + 1..users.len()).map(move |j| (users[i], users[j])))
}

fn witnesses(entries: &[(VertexId, GridPath)], a: usize, b: usize) -> Vec<VertexId> {
    let mut w = vec![entries[a].0.clone(), entries[b].0.clone()];
    w.sort();
    w
}

fn ensure_valid(rep: &CpgRepresentation) -> Result<(), ContactError> {
    let violations = validate(rep);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ContactError::InvalidRepresentation(violations.len()))
    }
}

/// Adjacency by point contact. Does not check validity.
pub(crate) fn contact_graph_unchecked(rep: &CpgRepresentation) -> LabeledGraph {
    let mut g = LabeledGraph::new();
    for id in rep.vertex_ids() {
        g.add_vertex(id.clone());
    }
    let mut users: BTreeMap<GridPoint, Vec<usize>> = BTreeMap::new();
    for (idx, (_, path)) in rep.paths.iter().enumerate() {
        for p in path.points() {
            users.entry(p).or_default().push(idx);
        }
    }
    for list in users.values() {
        for (a, b) in pairs(list) {
            let (u, v) = (&rep.paths[a].0, &rep.paths[b].0);
            if u != v {
                g.add_edge(u.clone(), v.clone()).expect("declared vertices");
            }
        }
    }
    g
}

/// The graph whose edges are the touching pairs of paths.
pub fn contact_graph(rep: &CpgRepresentation) -> Result<LabeledGraph, ContactError> {
    ensure_valid(rep)?;
    Ok(contact_graph_unchecked(rep))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointKind {
    /// Lies on at most one path.
    FreePoint,
    PlainContact,
    TypeIIa,
    TypeIIb,
    OtherConfiguration,
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClass {
    pub kind: PointKind,
    pub constituents: Vec<(VertexId, Membership)>,
}

pub(crate) fn classify_constituents(constituents: Vec<(VertexId, Membership)>) -> PointClass {
    let count = |m: Membership| constituents.iter().filter(|(_, c)| *c == m).count();
    let endpoints = count(Membership::Endpoint);
    let bends = count(Membership::Bend);
    let straight = count(Membership::InteriorStraight);
    let kind = match (constituents.len(), endpoints, bends, straight) {
        (0 | 1, ..) => PointKind::FreePoint,
        (2, e, _, _) if e >= 1 => PointKind::PlainContact,
        (3, 2, 0, 1) => PointKind::TypeIIa,
        (3, 2, 1, 0) => PointKind::TypeIIb,
        _ => PointKind::OtherConfiguration,
    };
    PointClass { kind, constituents }
}

/// Classifies a grid point by how many paths meet there and in which role.
pub fn classify_grid_point(
    rep: &CpgRepresentation,
    p: GridPoint,
) -> Result<PointClass, ContactError> {
    ensure_valid(rep)?;
    Ok(classify_constituents(rep.constituents(p)))
}

/// Largest bend count over all paths; 0 when empty.
pub fn max_bend(rep: &CpgRepresentation) -> usize {
    rep.paths
        .iter()
        .map(|(_, p)| p.bend_count())
        .max()
        .unwrap_or(0)
}

/// Targets whose path contains no endpoint of any hub path.
pub fn pure_members(
    rep: &CpgRepresentation,
    hubs: &BTreeSet<VertexId>,
    targets: &BTreeSet<VertexId>,
) -> Result<BTreeSet<VertexId>, ContactError> {
    let mut hub_ends = Vec::new();
    for h in hubs {
        let path = rep.get(h).ok_or_else(|| ContactError::UnknownVertex(h.clone()))?;
        hub_ends.extend(path.endpoints());
    }
    let mut pure = BTreeSet::new();
    for t in targets {
        let path = rep.get(t).ok_or_else(|| ContactError::UnknownVertex(t.clone()))?;
        if !hub_ends.iter().any(|&p| path.contains(p)) {
            pure.insert(t.clone());
        }
    }
    Ok(pure)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(c: &[(i64, i64)]) -> GridPath {
        GridPath::from_coords(c).unwrap()
    }

    fn f(name: &str) -> VertexId {
        VertexId::free(name)
    }

    #[test]
    fn shared_unit_edge_is_one_overlap() {
        let rep = CpgRepresentation::from_entries(
            4,
            4,
            [(f("p"), path(&[(0, 0), (1, 0)])), (f("q"), path(&[(0, 0), (1, 0)]))],
        );
        let v = validate(&rep);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::EdgeOverlap);
        assert_eq!(
            v[0].location,
            Location::Edge(UnitEdge::new(GridPoint::new(0, 0), GridPoint::new(1, 0)))
        );
        assert_eq!(v[0].witnesses, vec![f("p"), f("q")]);
    }

    #[test]
    fn overlapping_run_is_reported_per_edge_only() {
        let rep = CpgRepresentation::from_entries(
            5,
            5,
            [
                (f("p"), path(&[(0, 0), (4, 0)])),
                (f("q"), path(&[(0, 1), (1, 1), (1, 0), (3, 0), (3, 1)])),
            ],
        );
        let v = validate(&rep);
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|x| x.kind == ViolationKind::EdgeOverlap));
    }

    #[test]
    fn interior_crossing() {
        let rep = CpgRepresentation::from_entries(
            3,
            3,
            [(f("p"), path(&[(0, 1), (2, 1)])), (f("q"), path(&[(1, 0), (1, 2)]))],
        );
        let v = validate(&rep);
        assert_eq!(
            v,
            vec![Violation {
                location: Location::Point(GridPoint::new(1, 1)),
                witnesses: vec![f("p"), f("q")],
                kind: ViolationKind::InteriorIntersection,
            }]
        );
        assert_eq!(contact_graph(&rep), Err(ContactError::InvalidRepresentation(1)));
    }

    #[test]
    fn out_of_bounds_and_duplicates() {
        let mut rep = CpgRepresentation::new(2, 2);
        rep.push(f("p"), path(&[(0, 0), (0, 3)]));
        rep.push(f("p"), path(&[(2, 0), (2, 1)]));
        let v = validate(&rep);
        let kinds: Vec<_> = v.iter().map(|x| x.kind).collect();
        assert!(kinds.contains(&ViolationKind::OutOfBounds));
        assert!(kinds.contains(&ViolationKind::DuplicateVertex));
        let oob = v.iter().find(|x| x.kind == ViolationKind::OutOfBounds).unwrap();
        assert_eq!(oob.location, Location::Point(GridPoint::new(0, 3)));
    }

    #[test]
    fn negative_coordinates_are_out_of_bounds() {
        let rep = CpgRepresentation::from_entries(2, 2, [(f("p"), path(&[(-1, 0), (1, 0)]))]);
        assert_eq!(validate(&rep)[0].kind, ViolationKind::OutOfBounds);
    }

    #[test]
    fn two_segments_meeting_at_a_point() {
        let rep = CpgRepresentation::from_entries(
            3,
            3,
            [(f("p"), path(&[(0, 0), (1, 0)])), (f("q"), path(&[(1, 0), (1, 1)]))],
        );
        let g = contact_graph(&rep).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn four_arms_give_k4() {
        let rep = CpgRepresentation::from_entries(
            2,
            2,
            [
                (f("n"), path(&[(1, 1), (1, 2)])),
                (f("e"), path(&[(1, 1), (2, 1)])),
                (f("s"), path(&[(1, 1), (1, 0)])),
                (f("w"), path(&[(1, 1), (0, 1)])),
            ],
        );
        assert!(validate(&rep).is_empty());
        let g = contact_graph(&rep).unwrap();
        assert_eq!(g.edge_count(), 6);
        let c = classify_grid_point(&rep, GridPoint::new(1, 1)).unwrap();
        assert_eq!(c.kind, PointKind::OtherConfiguration);
        assert_eq!(c.constituents.len(), 4);
    }

    #[test]
    fn grid_point_types() {
        // II.a: two endpoints on the straight interior of a vertical path.
        let a = CpgRepresentation::from_entries(
            2,
            2,
            [
                (f("v"), path(&[(1, 0), (1, 2)])),
                (f("l"), path(&[(0, 1), (1, 1)])),
                (f("r"), path(&[(2, 1), (1, 1)])),
            ],
        );
        let p = GridPoint::new(1, 1);
        assert_eq!(classify_grid_point(&a, p).unwrap().kind, PointKind::TypeIIa);

        // II.b: two endpoints in the free directions of a bend.
        let b = CpgRepresentation::from_entries(
            2,
            2,
            [
                (f("l"), path(&[(1, 2), (1, 1), (2, 1)])),
                (f("s"), path(&[(1, 0), (1, 1)])),
                (f("w"), path(&[(0, 1), (1, 1)])),
            ],
        );
        let c = classify_grid_point(&b, p).unwrap();
        assert_eq!(c.kind, PointKind::TypeIIb);
        assert_eq!(
            c.constituents,
            vec![
                (f("l"), Membership::Bend),
                (f("s"), Membership::Endpoint),
                (f("w"), Membership::Endpoint),
            ]
        );

        assert_eq!(
            classify_grid_point(&b, GridPoint::new(0, 0)).unwrap().kind,
            PointKind::FreePoint
        );

        let plain = CpgRepresentation::from_entries(
            2,
            2,
            [(f("v"), path(&[(1, 0), (1, 2)])), (f("l"), path(&[(0, 1), (1, 1)]))],
        );
        assert_eq!(classify_grid_point(&plain, p).unwrap().kind, PointKind::PlainContact);
    }

    #[test]
    fn max_bend_cases() {
        assert_eq!(max_bend(&CpgRepresentation::new(1, 1)), 0);
        let straight = CpgRepresentation::from_entries(
            3,
            3,
            [(f("p"), path(&[(0, 0), (2, 0)])), (f("q"), path(&[(0, 1), (0, 3)]))],
        );
        assert_eq!(max_bend(&straight), 0);
        let l = CpgRepresentation::from_entries(3, 3, [(f("p"), path(&[(0, 0), (2, 0), (2, 2)]))]);
        assert_eq!(max_bend(&l), 1);
    }

    #[test]
    fn pure_members_with_no_hubs_is_everything() {
        let rep = CpgRepresentation::from_entries(
            3,
            3,
            [(f("p"), path(&[(0, 0), (2, 0)])), (f("q"), path(&[(0, 1), (0, 3)]))],
        );
        let targets: BTreeSet<_> = [f("p"), f("q")].into_iter().collect();
        assert_eq!(pure_members(&rep, &BTreeSet::new(), &targets).unwrap(), targets);
        let hubs: BTreeSet<_> = [f("zz")].into_iter().collect();
        assert_eq!(
            pure_members(&rep, &hubs, &targets),
            Err(ContactError::UnknownVertex(f("zz")))
        );
    }

    #[test]
    fn set_and_remove() {
        let mut rep = CpgRepresentation::new(3, 3);
        assert!(rep.set(f("p"), path(&[(0, 0), (1, 0)])).is_none());
        assert!(rep.set(f("p"), path(&[(0, 0), (2, 0)])).is_some());
        assert_eq!(rep.len(), 1);
        assert!(rep.remove(&f("p")).is_some());
        assert!(rep.is_empty());
    }
}
