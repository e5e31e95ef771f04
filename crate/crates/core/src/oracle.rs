//! Brute-force ground truth at small orders.
//!
//! Free polyominoes are grown one cell at a time and deduplicated by
//! canonical form. On top of that corpus this module measures perimeters
//! and shared edges directly and traces boundary cycles, so the closed
//! forms in [`crate::counting`] and the construction in [`crate::shapes`]
//! can be checked against something that shares no code path with them
//! beyond the canonical form.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::counting::{ceil_two_sqrt, max_area_for_boundary, min_perimeter};
use crate::shapes::{Cell, Polyomino};

pub const DEFAULT_ORACLE_CAP: u64 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("order {n} exceeds the oracle cap {cap}")]
    CapExceeded { n: u64, cap: u64 },
    #[error("polyomino order must be positive")]
    ZeroOrder,
    #[error("the polyomino has a hole")]
    HasHole,
    #[error("the polyomino is not edge-connected")]
    Disconnected,
}

/// Every free polyomino of order `1..=n_max`, canonical and sorted.
#[derive(Debug, Clone)]
pub struct FreeCorpus {
    levels: Vec<Vec<Polyomino>>,
}

impl FreeCorpus {
    pub fn grow(n_max: u64, cap: u64) -> Result<Self, OracleError> {
        if n_max > cap {
            return Err(OracleError::CapExceeded { n: n_max, cap });
        }
        let mut levels: Vec<Vec<Polyomino>> = Vec::with_capacity(n_max as usize);
        if n_max >= 1 {
            levels.push(vec![Polyomino::new([(0, 0)]).expect("single cell")]);
        }
        for _ in 2..=n_max {
            let parents = levels.last().unwrap();
            let mut next: Vec<Polyomino> = parents
                .par_iter()
                .flat_map_iter(|p| p.outer_neighbors().into_iter().map(move |c| p.with_cell(c).canonical_form()))
                .collect();
            next.par_sort_unstable();
            next.dedup();
            levels.push(next);
        }
        Ok(FreeCorpus { levels })
    }

    pub fn n_max(&self) -> u64 {
        self.levels.len() as u64
    }

    /// Shapes of order `n`; panics outside `1..=n_max`.
    pub fn level(&self, n: u64) -> &[Polyomino] {
        &self.levels[(n - 1) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Polyomino> {
        self.levels.iter().flatten()
    }
}

fn check_order(n: u64, cap: u64) -> Result<(), OracleError> {
    if n == 0 {
        return Err(OracleError::ZeroOrder);
    }
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    Ok(())
}

/// All free polyominoes of order `n`, canonical and sorted.
pub fn enumerate_free(n: u64, cap: u64) -> Result<Vec<Polyomino>, OracleError> {
    check_order(n, cap)?;
    let mut corpus = FreeCorpus::grow(n, cap)?;
    Ok(corpus.levels.pop().unwrap())
}

/// Minimum perimeter over `shapes` and the shapes attaining it.
pub fn extremal_subset(shapes: &[Polyomino]) -> (u64, Vec<Polyomino>) {
    let best = shapes.iter().map(Polyomino::perimeter).min().unwrap_or(0);
    let winners = shapes.iter().filter(|p| p.perimeter() == best).cloned().collect();
    (best as u64, winners)
}

/// `(minimum perimeter, number of free polyominoes attaining it)` by scanning
/// every free polyomino of order `n`.
pub fn extremal_by_brute_force(n: u64, cap: u64) -> Result<(u64, u64), OracleError> {
    let (p, winners) = extremal_subset(&enumerate_free(n, cap)?);
    Ok((p, winners.len() as u64))
}

pub fn max_common_edges_oracle(n: u64, cap: u64) -> Result<u64, OracleError> {
    Ok(enumerate_free(n, cap)?.iter().map(Polyomino::common_edges).max().unwrap_or(0) as u64)
}

/// Length and degree profile of the closed walk through the boundary squares.
///
/// `degree_counts[i]` is the number of walk positions whose square has `i`
/// edge-neighbours, so a square visited twice counts twice. Index 0 is only
/// used by the single cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryStats {
    pub cycle_len: usize,
    pub degree_counts: [usize; 5],
    /// Number of different squares on the walk.
    pub distinct_squares: usize,
}

impl BoundaryStats {
    pub fn h(&self, degree: usize) -> usize {
        self.degree_counts[degree]
    }

    /// The walk never revisits a square.
    pub fn is_simple(&self) -> bool {
        self.distinct_squares == self.cycle_len
    }
}

/// Directions in clockwise order: east, south, west, north (rows grow south).
const EAST: u8 = 0;
const SOUTH: u8 = 1;
const WEST: u8 = 2;
const NORTH: u8 = 3;

/// The boundary squares in walk order.
///
/// The geometric boundary is traversed clockwise, one unit edge at a time,
/// recording the square on the inner side of each edge. At a reflex corner
/// the square diagonally across from the empty one is inserted, so
/// consecutive entries are always edge-neighbours; afterwards consecutive
/// repeats (convex corners) are merged cyclically. A square can appear more
/// than once, e.g. a one-cell bridge is passed on both sides.
pub fn boundary_walk(p: &Polyomino) -> Result<Vec<Cell>, OracleError> {
    if !p.is_connected() {
        return Err(OracleError::Disconnected);
    }
    if p.has_hole() {
        return Err(OracleError::HasHole);
    }
    // start vertex -> (end vertex, direction, inner cell)
    let mut edges: HashMap<Cell, (Cell, u8, Cell)> = HashMap::new();
    let mut add = |from: Cell, to: Cell, dir: u8, cell: Cell| edges.insert(from, (to, dir, cell)).is_none();
    let mut simple = true;
    for &(r, c) in p.cells() {
        if !p.contains((r - 1, c)) {
            simple &= add((r, c), (r, c + 1), EAST, (r, c));
        }
        if !p.contains((r, c + 1)) {
            simple &= add((r, c + 1), (r + 1, c + 1), SOUTH, (r, c));
        }
        if !p.contains((r + 1, c)) {
            simple &= add((r + 1, c + 1), (r + 1, c), WEST, (r, c));
        }
        if !p.contains((r, c - 1)) {
            simple &= add((r + 1, c), (r, c), NORTH, (r, c));
        }
    }
    if !simple {
        // Two boundary edges leave one vertex: the cells touch only at a corner.
        return Err(OracleError::HasHole);
    }
    let start = *edges.keys().min().unwrap();
    let mut walk: Vec<Cell> = Vec::with_capacity(edges.len());
    let mut vertex = start;
    let mut prev: Option<(u8, Cell)> = None;
    let mut steps = 0usize;
    loop {
        let (to, dir, cell) = edges[&vertex];
        if let Some((prev_dir, prev_cell)) = prev {
            if (dir + 4 - prev_dir) % 4 == 3 {
                walk.push(reflex_corner_cell(p, vertex, prev_cell, cell));
            }
        }
        walk.push(cell);
        prev = Some((dir, cell));
        vertex = to;
        steps += 1;
        if vertex == start {
            break;
        }
    }
    // Close the loop: the turn back into the first edge.
    let (_, first_dir, first_cell) = edges[&start];
    let (last_dir, last_cell) = prev.unwrap();
    if (first_dir + 4 - last_dir) % 4 == 3 {
        walk.push(reflex_corner_cell(p, start, last_cell, first_cell));
    }
    if steps != edges.len() {
        return Err(OracleError::HasHole);
    }
    walk.dedup();
    while walk.len() > 1 && walk.first() == walk.last() {
        walk.pop();
    }
    Ok(walk)
}

fn reflex_corner_cell(p: &Polyomino, (vr, vc): Cell, before: Cell, after: Cell) -> Cell {
    [(vr - 1, vc - 1), (vr - 1, vc), (vr, vc - 1), (vr, vc)]
        .into_iter()
        .find(|&c| c != before && c != after && p.contains(c))
        .expect("a reflex corner has three occupied squares")
}

pub fn boundary_stats(p: &Polyomino) -> Result<BoundaryStats, OracleError> {
    let walk = boundary_walk(p)?;
    let mut degree_counts = [0usize; 5];
    for &cell in &walk {
        degree_counts[p.degree(cell)] += 1;
    }
    let mut distinct = walk.clone();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(BoundaryStats { cycle_len: walk.len(), degree_counts, distinct_squares: distinct.len() })
}

/// Checks of the boundary-cycle identities over a corpus.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub n_max: u64,
    /// Hole-free shapes with no degree-one square on the walk.
    pub examined: usize,
    /// Shapes where `h2 != h4 + 4`, smallest first.
    pub degree_balance_failures: Vec<Polyomino>,
    /// The subset of those whose walk visits every square once.
    pub degree_balance_failures_simple: usize,
    /// Shapes where `common_edges != 2n - |H|/2 - 2`.
    pub edge_identity_failures: usize,
    pub area_bounds: Vec<AreaBoundRow>,
    /// Extremal shapes with no degree-one square.
    pub extremal_examined: usize,
    /// Those whose cycle length differs from `2 ceil(2 sqrt(n)) - 4`.
    pub extremal_cycle_failures: usize,
}

/// Largest order seen at one boundary-cycle length, against `A(L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AreaBoundRow {
    pub cycle_len: u64,
    pub bound: u64,
    pub corpus_max: Option<u64>,
    /// The near-square rectangle for this length has the right cycle length
    /// and order `bound`.
    pub rectangle_attains: bool,
}

impl AreaBoundRow {
    /// The bound holds on the corpus; where the corpus reaches order
    /// `bound`, the maximum equals it.
    pub fn holds(&self, n_max: u64) -> bool {
        let within = self.corpus_max.is_none_or(|m| m <= self.bound);
        let attained = self.bound > n_max || self.corpus_max == Some(self.bound);
        within && attained && self.rectangle_attains
    }
}

impl IdentityReport {
    /// Degree balance restricted to walks without repeated squares, the
    /// setting in which it is derived from the angle sum.
    pub fn degree_balance_holds_on_simple_walks(&self) -> bool {
        self.degree_balance_failures_simple == 0
    }

    pub fn degree_balance_holds(&self) -> bool {
        self.degree_balance_failures.is_empty()
    }

    pub fn edge_identity_holds(&self) -> bool {
        self.edge_identity_failures == 0
    }

    pub fn area_bound_holds(&self) -> bool {
        self.area_bounds.iter().all(|r| r.holds(self.n_max))
    }

    pub fn extremal_cycle_holds(&self) -> bool {
        self.extremal_cycle_failures == 0
    }
}

/// Largest cycle length examined for the area bound.
pub const AREA_BOUND_MAX_CYCLE: u64 = 16;

pub fn check_identities(corpus: &FreeCorpus, n_max: u64) -> IdentityReport {
    let n_max = n_max.min(corpus.n_max());
    struct Row {
        n: u64,
        stats: BoundaryStats,
        edges: usize,
        extremal: bool,
        shape: Polyomino,
    }
    let rows: Vec<Row> = (1..=n_max)
        .flat_map(|n| corpus.level(n).iter().map(move |p| (n, p)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|(n, p)| {
            let stats = boundary_stats(p).ok()?;
            (stats.h(1) == 0 && stats.h(0) == 0).then(|| Row {
                n,
                stats,
                edges: p.common_edges(),
                extremal: p.perimeter() as u64 == min_perimeter(n),
                shape: p.clone(),
            })
        })
        .collect();

    let mut degree_balance_failures = Vec::new();
    let mut degree_balance_failures_simple = 0;
    let mut edge_identity_failures = 0;
    let mut extremal_examined = 0;
    let mut extremal_cycle_failures = 0;
    let mut max_by_len: HashMap<u64, u64> = HashMap::new();
    for row in &rows {
        let s = &row.stats;
        if s.h(2) != s.h(4) + 4 {
            degree_balance_failures.push(row.shape.clone());
            if s.is_simple() {
                degree_balance_failures_simple += 1;
            }
        }
        // 2m = 4n - |H| - 4
        if 2 * row.edges as i64 != 4 * row.n as i64 - s.cycle_len as i64 - 4 {
            edge_identity_failures += 1;
        }
        let len = s.cycle_len as u64;
        let entry = max_by_len.entry(len).or_insert(0);
        *entry = (*entry).max(row.n);
        if row.extremal {
            extremal_examined += 1;
            if len != 2 * ceil_two_sqrt(row.n) - 4 {
                extremal_cycle_failures += 1;
            }
        }
    }
    let area_bounds = (4..=AREA_BOUND_MAX_CYCLE)
        .step_by(2)
        .map(|len| {
            let bound = max_area_for_boundary(len).expect("even length at least 4");
            AreaBoundRow { cycle_len: len, bound, corpus_max: max_by_len.get(&len).copied(), rectangle_attains: rectangle_attains(len, bound) }
        })
        .collect();
    IdentityReport {
        n_max,
        examined: rows.len(),
        degree_balance_failures,
        degree_balance_failures_simple,
        edge_identity_failures,
        area_bounds,
        extremal_examined,
        extremal_cycle_failures,
    }
}

fn rectangle_attains(len: u64, bound: u64) -> bool {
    let long = (len + 4).div_ceil(4) as i32;
    let short = ((len + 4) / 4) as i32;
    let rect = Polyomino::new((0..short).flat_map(|r| (0..long).map(move |c| (r, c)))).expect("non-empty");
    match boundary_stats(&rect) {
        Ok(s) => s.cycle_len as u64 == len && s.h(1) == 0 && rect.order() as u64 == bound,
        Err(_) => false,
    }
}
