//! Exact integer geometry for rectilinear grid paths.
//!
//! A [`GridPath`] is stored as its corner sequence: the two endpoints plus
//! every bendpoint, in traversal order. Construction goes through
//! [`GridPath::new`], which normalizes collinear runs and rejects anything
//! that is not a simple axis-aligned path occupying at least one unit edge.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn step(self, dir: Direction) -> Self {
        let (dx, dy) = dir.delta();
        Self::new(self.x + dx, self.y + dy)
    }

    pub fn translate(self, dx: i64, dy: i64) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    North,
    East,
    South,
    West,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::North,
        Direction::East,
        Direction::South,
        Direction::West,
    ];

    pub fn opposite(self) -> Self {
        match self {
            Direction::North => Direction::South,
            Direction::East => Direction::West,
            Direction::South => Direction::North,
            Direction::West => Direction::East,
        }
    }

    pub fn delta(self) -> (i64, i64) {
        match self {
            Direction::North => (0, 1),
            Direction::East => (1, 0),
            Direction::South => (0, -1),
            Direction::West => (-1, 0),
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Direction::East | Direction::West)
    }

    /// Direction of travel from `from` to `to`, if they are distinct and
    /// axis-aligned.
    pub fn between(from: GridPoint, to: GridPoint) -> Option<Self> {
        match (to.x - from.x, to.y - from.y) {
            (0, 0) => None,
            (0, dy) if dy > 0 => Some(Direction::North),
            (0, _) => Some(Direction::South),
            (dx, 0) if dx > 0 => Some(Direction::East),
            (_, 0) => Some(Direction::West),
            _ => None,
        }
    }
}

/// A unit grid edge, stored with the lexicographically smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitEdge {
    pub lo: GridPoint,
    pub hi: GridPoint,
}

impl UnitEdge {
    /// Panics if the points are not unit-adjacent.
    pub fn new(a: GridPoint, b: GridPoint) -> Self {
        assert_eq!(
            (a.x - b.x).abs() + (a.y - b.y).abs(),
            1,
            "unit edge endpoints must be adjacent"
        );
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }
}

impl fmt::Display for UnitEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// How a grid point relates to a single path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Membership {
    Absent,
    Endpoint,
    Bend,
    InteriorStraight,
}

impl Membership {
    /// Bends and straight interior points are both interior points.
    pub fn is_interior(self) -> bool {
        matches!(self, Membership::Bend | Membership::InteriorStraight)
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Membership::Absent => "absent",
            Membership::Endpoint => "endpoint",
            Membership::Bend => "bend",
            Membership::InteriorStraight => "interior_straight",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("corners {0} and {1} are not axis-aligned")]
    NotAxisAligned(GridPoint, GridPoint),
    #[error("degenerate path: {0}")]
    Degenerate(&'static str),
    #[error("path revisits grid point {0}")]
    SelfIntersecting(GridPoint),
}

/// A simple rectilinear path; every interior corner is a genuine bend.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPath {
    corners: Vec<GridPoint>,
}

impl GridPath {
    pub fn new(corners: &[GridPoint]) -> Result<Self, PathError> {
        if corners.len() < 2 {
            return Err(PathError::Degenerate("fewer than two corners"));
        }
        let mut dirs = Vec::with_capacity(corners.len() - 1);
        for w in corners.windows(2) {
            if w[0] == w[1] {
                return Err(PathError::Degenerate("zero-length segment"));
            }
            let dir = Direction::between(w[0], w[1])
                .ok_or(PathError::NotAxisAligned(w[0], w[1]))?;
            dirs.push(dir);
        }

        let mut merged = vec![corners[0]];
        for i in 1..corners.len() - 1 {
            if dirs[i - 1] != dirs[i] {
                merged.push(corners[i]);
            }
        }
        merged.push(corners[corners.len() - 1]);

        let path = Self { corners: merged };
        let mut seen = HashSet::new();
        for p in path.points() {
            if !seen.insert(p) {
                return Err(PathError::SelfIntersecting(p));
            }
        }
        Ok(path)
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self, PathError> {
        let corners: Vec<GridPoint> = coords.iter().copied().map(GridPoint::from).collect();
        Self::new(&corners)
    }

    pub fn corners(&self) -> &[GridPoint] {
        &self.corners
    }

    pub fn start(&self) -> GridPoint {
        self.corners[0]
    }

    pub fn end(&self) -> GridPoint {
        self.corners[self.corners.len() - 1]
    }

    pub fn endpoints(&self) -> [GridPoint; 2] {
        [self.start(), self.end()]
    }

    /// Interior corners in traversal order.
    pub fn bend_points(&self) -> &[GridPoint] {
        &self.corners[1..self.corners.len() - 1]
    }

    pub fn bend_count(&self) -> usize {
        self.corners.len() - 2
    }

    pub fn is_endpoint(&self, p: GridPoint) -> bool {
        p == self.start() || p == self.end()
    }

    pub fn is_bend(&self, p: GridPoint) -> bool {
        self.bend_points().contains(&p)
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.corners.windows(2).any(|w| on_segment(w[0], w[1], p))
    }

    pub fn classify(&self, p: GridPoint) -> Membership {
        if self.is_endpoint(p) {
            Membership::Endpoint
        } else if self.is_bend(p) {
            Membership::Bend
        } else if self.contains(p) {
            Membership::InteriorStraight
        } else {
            Membership::Absent
        }
    }

    /// Every grid point visited, in traversal order.
    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        let first = std::iter::once(self.start());
        let rest = self.corners.windows(2).flat_map(|w| {
            let dir = Direction::between(w[0], w[1]).expect("normalized segment");
            let len = (w[1].x - w[0].x).abs() + (w[1].y - w[0].y).abs();
            let from = w[0];
            (1..=len).map(move |s| {
                let (dx, dy) = dir.delta();
                from.translate(dx * s, dy * s)
            })
        });
        first.chain(rest)
    }

    /// Unit edges traversed, in traversal order.
    pub fn unit_edges(&self) -> impl Iterator<Item = UnitEdge> + '_ {
        let mut prev: Option<GridPoint> = None;
        self.points().filter_map(move |p| {
            let e = prev.map(|q| UnitEdge::new(q, p));
            prev = Some(p);
            e
        })
    }

    /// Occupied points and unit edges as order-independent sets.
    pub fn cells(&self) -> (BTreeSet<GridPoint>, BTreeSet<UnitEdge>) {
        (self.points().collect(), self.unit_edges().collect())
    }

    pub fn length(&self) -> i64 {
        self.corners
            .windows(2)
            .map(|w| (w[1].x - w[0].x).abs() + (w[1].y - w[0].y).abs())
            .sum()
    }

    pub fn reversed(&self) -> Self {
        let mut corners = self.corners.clone();
        corners.reverse();
        Self { corners }
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        Self {
            corners: self.corners.iter().map(|p| p.translate(dx, dy)).collect(),
        }
    }

    /// Applies a point map that preserves axis-alignment and adjacency
    /// (a grid isometry). The result is re-normalized.
    pub fn mapped(&self, f: impl Fn(GridPoint) -> GridPoint) -> Self {
        let corners: Vec<GridPoint> = self.corners.iter().map(|&p| f(p)).collect();
        Self::new(&corners).expect("grid isometry preserves path validity")
    }

    /// The orientation of this path whose corner list is lexicographically
    /// not greater than its reverse.
    pub fn canonical(&self) -> Self {
        let rev = self.reversed();
        if rev.corners < self.corners {
            rev
        } else {
            self.clone()
        }
    }

    pub fn min_corner(&self) -> GridPoint {
        let min_x = self.corners.iter().map(|p| p.x).min().unwrap_or(0);
        let min_y = self.corners.iter().map(|p| p.y).min().unwrap_or(0);
        GridPoint::new(min_x, min_y)
    }

    pub fn max_corner(&self) -> GridPoint {
        let max_x = self.corners.iter().map(|p| p.x).max().unwrap_or(0);
        let max_y = self.corners.iter().map(|p| p.y).max().unwrap_or(0);
        GridPoint::new(max_x, max_y)
    }
}

impl fmt::Display for GridPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.corners.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn on_segment(a: GridPoint, b: GridPoint, p: GridPoint) -> bool {
    if a.x == b.x {
        p.x == a.x && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
    } else {
        p.y == a.y && p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x)
    }
}
