//! Bounded exhaustive search for CPG representations of small graphs.
//!
//! The search grid has `width x height` grid points, `x` in `0..width` and
//! `y` in `0..height`; a representation it finds carries the inclusive
//! bounds `(width - 1, height - 1)`.
//!
//! Vertices are placed in label order, one path each, from a candidate list
//! sorted by canonical corner sequence. A partial placement is rejected as
//! soon as two placed paths overlap, cross, or disagree with the query graph
//! on adjacency; nothing else is pruned. The first path must not exceed its
//! mirror image under `x -> width - 1 - x`, and a complete placement must
//! touch both axes. Neither restriction can remove the lexicographically
//! least solution, so `Found` always carries that solution.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::contact::{CpgRepresentation, LabeledGraph, VertexId};
use crate::grid::{Direction, GridPath, GridPoint};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub width: u32,
    pub height: u32,
    pub bend_budget: u32,
    pub max_edge_len: u32,
}

impl SearchBounds {
    pub fn new(width: u32, height: u32, bend_budget: u32) -> Self {
        Self {
            width,
            height,
            bend_budget,
            max_edge_len: width.max(height),
        }
    }

    pub fn with_max_edge_len(mut self, len: u32) -> Self {
        self.max_edge_len = len;
        self
    }

    pub fn with_bend_budget(mut self, bends: u32) -> Self {
        self.bend_budget = bends;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(CpgRepresentation),
    ExhaustedNoSolution,
    AbortedBudget(u64),
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BendNumberStatus {
    Exact,
    LowerBoundOnly,
}

/// Result of [`min_bend_number`]. `value` is `None` when no budget admits a
/// representation inside the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BendNumber {
    pub value: Option<u32>,
    pub status: BendNumberStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersects(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    /// True if some bit is in `self & other` but in neither mask.
    fn intersects_outside(&self, other: &Bits, mask_a: &Bits, mask_b: &Bits) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .zip(mask_a.0.iter().zip(&mask_b.0))
            .any(|((a, b), (ma, mb))| a & b & !ma & !mb != 0)
    }
}

/// A placeable path with its occupancy masks.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub path: GridPath,
    points: Bits,
    edges: Bits,
    ends: Bits,
}

struct Grid {
    width: i64,
    height: i64,
}

impl Grid {
    fn point_index(&self, p: GridPoint) -> usize {
        (p.y * self.width + p.x) as usize
    }

    fn edge_index(&self, a: GridPoint, b: GridPoint) -> usize {
        let lo = a.min(b);
        let horizontal = a.y == b.y;
        (2 * self.point_index(lo)) + usize::from(!horizontal)
    }

    fn contains(&self, p: GridPoint) -> bool {
        (0..self.width).contains(&p.x) && (0..self.height).contains(&p.y)
    }

    fn mirror(&self, p: GridPoint) -> GridPoint {
        GridPoint::new(self.width - 1 - p.x, p.y)
    }
}

/// Every simple path within the bounds, once per point set, oriented
/// canonically and sorted by corner sequence.
pub fn enumerate_candidates(bounds: &SearchBounds) -> Vec<Candidate> {
    let grid = Grid {
        width: i64::from(bounds.width),
        height: i64::from(bounds.height),
    };
    let cells = (grid.width * grid.height) as usize;
    let mut paths: Vec<GridPath> = Vec::new();
    let mut visited = vec![false; cells];
    for y in 0..grid.height {
        for x in 0..grid.width {
            let start = GridPoint::new(x, y);
            visited[grid.point_index(start)] = true;
            let mut trail = vec![start];
            for dir in Direction::ALL {
                walk(&grid, bounds, start, dir, 0, 0, &mut trail, &mut visited, &mut paths);
            }
            visited[grid.point_index(start)] = false;
        }
    }
    paths.sort();
    paths.dedup();
    paths
        .into_iter()
        .map(|path| {
            let mut points = Bits::new(cells);
            let mut edges = Bits::new(2 * cells);
            let mut ends = Bits::new(cells);
            for p in path.points() {
                points.set(grid.point_index(p));
            }
            for e in path.unit_edges() {
                edges.set(grid.edge_index(e.lo, e.hi));
            }
            for p in path.endpoints() {
                ends.set(grid.point_index(p));
            }
            Candidate {
                path,
                points,
                edges,
                ends,
            }
        })
        .collect()
}

/// Extends the walk `trail` (ending at `at`) by one step in `dir`, emits
/// it, and continues. `seg_len` is the length of the current segment.
#[allow(clippy::too_many_arguments)]
fn walk(
    grid: &Grid,
    bounds: &SearchBounds,
    at: GridPoint,
    dir: Direction,
    bends: u32,
    seg_len: u32,
    trail: &mut Vec<GridPoint>,
    visited: &mut [bool],
    out: &mut Vec<GridPath>,
) {
    let next = at.step(dir);
    if !grid.contains(next) || visited[grid.point_index(next)] || seg_len >= bounds.max_edge_len {
        return;
    }
    visited[grid.point_index(next)] = true;
    trail.push(next);

    let path = GridPath::new(trail).expect("walk is a simple rectilinear path");
    if path.corners() <= path.reversed().corners() {
        out.push(path);
    }
    for turn in Direction::ALL {
        if turn == dir {
            walk(grid, bounds, next, turn, bends, seg_len + 1, trail, visited, out);
        } else if turn != dir.opposite() && bends < bounds.bend_budget {
            walk(grid, bounds, next, turn, bends + 1, 0, trail, visited, out);
        }
    }

    trail.pop();
    visited[grid.point_index(next)] = false;
}

struct Problem<'a> {
    bounds: SearchBounds,
    ids: Vec<VertexId>,
    adjacent: Vec<Vec<bool>>,
    candidates: &'a [Candidate],
    mirror_rank: Vec<usize>,
}

enum Step {
    Found(Vec<usize>),
    Exhausted,
    Aborted,
}

impl<'a> Problem<'a> {
    fn new(g: &LabeledGraph, bounds: SearchBounds, candidates: &'a [Candidate]) -> Self {
        let ids: Vec<VertexId> = g.vertices().cloned().collect();
        let adjacent = ids
            .iter()
            .map(|u| ids.iter().map(|v| g.has_edge(u, v)).collect())
            .collect();
        let grid = Grid {
            width: i64::from(bounds.width),
            height: i64::from(bounds.height),
        };
        let mirror_rank = candidates
            .iter()
            .map(|c| {
                let m = c.path.mapped(|p| grid.mirror(p)).canonical();
                candidates
                    .binary_search_by(|other| other.path.cmp(&m))
                    .expect("mirror of a candidate is a candidate")
            })
            .collect();
        Self {
            bounds,
            ids,
            adjacent,
            candidates,
            mirror_rank,
        }
    }

    fn compatible(&self, depth: usize, cand: usize, placed: &[usize]) -> bool {
        if depth == 0 && self.mirror_rank[cand] < cand {
            return false;
        }
        let c = &self.candidates[cand];
        placed.iter().enumerate().all(|(e, &other)| {
            let o = &self.candidates[other];
            if c.edges.intersects(&o.edges) {
                return false;
            }
            if c.points.intersects_outside(&o.points, &c.ends, &o.ends) {
                return false;
            }
            c.points.intersects(&o.points) == self.adjacent[depth][e]
        })
    }

    fn anchored(&self, placed: &[usize]) -> bool {
        let mut min_x = i64::MAX;
        let mut min_y = i64::MAX;
        for &c in placed {
            let m = self.candidates[c].path.min_corner();
            min_x = min_x.min(m.x);
            min_y = min_y.min(m.y);
        }
        placed.is_empty() || (min_x == 0 && min_y == 0)
    }

    fn dfs(&self, placed: &mut Vec<usize>, nodes: &mut u64, budget: u64) -> Step {
        let depth = placed.len();
        if depth == self.ids.len() {
            return if self.anchored(placed) {
                Step::Found(placed.clone())
            } else {
                Step::Exhausted
            };
        }
        for cand in 0..self.candidates.len() {
            *nodes += 1;
            if *nodes > budget {
                return Step::Aborted;
            }
            if !self.compatible(depth, cand, placed) {
                continue;
            }
            placed.push(cand);
            match self.dfs(placed, nodes, budget) {
                Step::Exhausted => {}
                other => return other,
            }
            placed.pop();
        }
        Step::Exhausted
    }

    fn to_rep(&self, placed: &[usize]) -> CpgRepresentation {
        CpgRepresentation::from_entries(
            i64::from(self.bounds.width) - 1,
            i64::from(self.bounds.height) - 1,
            self.ids
                .iter()
                .cloned()
                .zip(placed.iter().map(|&c| self.candidates[c].path.clone())),
        )
    }
}

fn run(g: &LabeledGraph, bounds: SearchBounds, candidates: &[Candidate], budget: u64) -> SearchOutcome {
    let problem = Problem::new(g, bounds, candidates);
    let mut nodes = 0;
    match problem.dfs(&mut Vec::new(), &mut nodes, budget) {
        Step::Found(placed) => SearchOutcome::Found(problem.to_rep(&placed)),
        Step::Exhausted => SearchOutcome::ExhaustedNoSolution,
        Step::Aborted => SearchOutcome::AbortedBudget(nodes - 1),
    }
}

/// Depth-first search for a representation of `g` within `bounds`, counting
/// one node per candidate placement tried.
pub fn search_representation(g: &LabeledGraph, bounds: SearchBounds, node_budget: u64) -> SearchOutcome {
    let candidates = enumerate_candidates(&bounds);
    run(g, bounds, &candidates, node_budget)
}

/// Parallel variant: the placements of the first two paths are distributed
/// over the rayon pool, each branch with its own `node_budget`.
///
/// The outcome is the first branch outcome in branch order that is not
/// `ExhaustedNoSolution`, so it does not depend on the number of workers.
pub fn search_representation_parallel(
    g: &LabeledGraph,
    bounds: SearchBounds,
    node_budget: u64,
) -> SearchOutcome {
    let candidates = enumerate_candidates(&bounds);
    if g.vertex_count() < 2 {
        return run(g, bounds, &candidates, node_budget);
    }
    let problem = Problem::new(g, bounds, &candidates);
    let n = candidates.len();
    let mut branches = Vec::new();
    for first in 0..n {
        if !problem.compatible(0, first, &[]) {
            continue;
        }
        for second in 0..n {
            if problem.compatible(1, second, &[first]) {
                branches.push((first, second));
            }
        }
    }

    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<(Step, u64)>> = branches
        .par_iter()
        .enumerate()
        .map(|(idx, &(first, second))| {
            if idx > best.load(Ordering::Relaxed) {
                return None;
            }
            let mut placed = vec![first, second];
            let mut nodes = 0;
            let step = problem.dfs(&mut placed, &mut nodes, node_budget);
            if matches!(step, Step::Found(_) | Step::Aborted) {
                best.fetch_min(idx, Ordering::Relaxed);
            }
            Some((step, nodes.min(node_budget)))
        })
        .collect();

    let mut total = 0u64;
    for result in results {
        let Some((step, nodes)) = result else {
            unreachable!("branches before the first decisive one always run")
        };
        total += nodes;
        match step {
            Step::Exhausted => {}
            Step::Found(placed) => return SearchOutcome::Found(problem.to_rep(&placed)),
            Step::Aborted => return SearchOutcome::AbortedBudget(total),
        }
    }
    SearchOutcome::ExhaustedNoSolution
}

/// Smallest bend budget admitting a representation within the bounds.
///
/// Stops without a value once raising the budget adds no new candidate
/// paths. The status is `LowerBoundOnly` if any smaller budget ran out of
/// nodes.
pub fn min_bend_number(g: &LabeledGraph, bounds: SearchBounds, node_budget: u64) -> BendNumber {
    let mut exact = true;
    let mut previous = None;
    for t in 0.. {
        let b = bounds.with_bend_budget(t);
        let candidates = enumerate_candidates(&b);
        if previous == Some(candidates.len()) {
            break;
        }
        previous = Some(candidates.len());
        match run(g, b, &candidates, node_budget) {
            SearchOutcome::Found(_) => {
                return BendNumber {
                    value: Some(t),
                    status: if exact {
                        BendNumberStatus::Exact
                    } else {
                        BendNumberStatus::LowerBoundOnly
                    },
                }
            }
            SearchOutcome::ExhaustedNoSolution => {}
            SearchOutcome::AbortedBudget(_) => exact = false,
        }
    }
    BendNumber {
        value: None,
        status: if exact {
            BendNumberStatus::Exact
        } else {
            BendNumberStatus::LowerBoundOnly
        },
    }
}
