use std::collections::HashSet;

use super::ShapeError;

/// Grid coordinate `(row, col)`.
pub type Cell = (i32, i32);

/// A finite set of unit cells, translated so the smallest row and column are 0.
///
/// Cells are kept sorted by `(row, col)`, so the derived ordering is the
/// lexicographic order on sorted cell lists used for canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyomino {
    cells: Vec<Cell>,
}

/// The eight symmetries of the square acting on `(row, col)`.
const SYMMETRIES: [fn(Cell) -> Cell; 8] = [
    |(r, c)| (r, c),
    |(r, c)| (r, -c),
    |(r, c)| (-r, c),
    |(r, c)| (-r, -c),
    |(r, c)| (c, r),
    |(r, c)| (c, -r),
    |(r, c)| (-c, r),
    |(r, c)| (-c, -r),
];

pub(crate) const NEIGHBORS: [Cell; 4] = [(-1, 0), (1, 0), (0, -1), (0, 1)];

impl Polyomino {
    /// Normalizes and deduplicates `cells`.
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self, ShapeError> {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(ShapeError::Empty);
        }
        normalize(&mut cells);
        cells.dedup();
        Ok(Polyomino { cells })
    }

    /// Builds from cells that are already normalized, sorted and distinct.
    pub(crate) fn from_sorted_unchecked(cells: Vec<Cell>) -> Self {
        debug_assert!(cells.windows(2).all(|w| w[0] < w[1]));
        Polyomino { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn order(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// `(rows, cols)` of the bounding box.
    pub fn dimensions(&self) -> (i32, i32) {
        let rows = self.cells.last().map_or(0, |c| c.0 + 1);
        let cols = self.cells.iter().map(|c| c.1).max().map_or(0, |c| c + 1);
        (rows, cols)
    }

    /// Number of unordered pairs of edge-adjacent cells.
    pub fn common_edges(&self) -> usize {
        self.cells
            .iter()
            .map(|&(r, c)| usize::from(self.contains((r + 1, c))) + usize::from(self.contains((r, c + 1))))
            .sum()
    }

    /// Unit edges bordering exactly one cell: `4 |cells| - 2 * common_edges`.
    pub fn perimeter(&self) -> usize {
        4 * self.cells.len() - 2 * self.common_edges()
    }

    /// Number of edge-adjacent neighbours of `cell`.
    pub fn degree(&self, cell: Cell) -> usize {
        NEIGHBORS.iter().filter(|&&(dr, dc)| self.contains((cell.0 + dr, cell.1 + dc))).count()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen: HashSet<Cell> = HashSet::with_capacity(self.cells.len());
        let mut stack = vec![self.cells[0]];
        seen.insert(self.cells[0]);
        while let Some((r, c)) = stack.pop() {
            for (dr, dc) in NEIGHBORS {
                let next = (r + dr, c + dc);
                if self.contains(next) && seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// True when some empty cell cannot reach the outside by edge steps.
    pub fn has_hole(&self) -> bool {
        let (rows, cols) = self.dimensions();
        // Flood the complement inside the box grown by one cell on each side.
        let (h, w) = (rows + 2, cols + 2);
        let idx = |r: i32, c: i32| ((r + 1) * w + (c + 1)) as usize;
        let mut filled = vec![false; (h * w) as usize];
        for &(r, c) in &self.cells {
            filled[idx(r, c)] = true;
        }
        let mut reached = vec![false; (h * w) as usize];
        let mut stack = vec![(-1, -1)];
        reached[idx(-1, -1)] = true;
        let mut outside = 1usize;
        while let Some((r, c)) = stack.pop() {
            for (dr, dc) in NEIGHBORS {
                let (nr, nc) = (r + dr, c + dc);
                if nr < -1 || nc < -1 || nr > rows || nc > cols {
                    continue;
                }
                let i = idx(nr, nc);
                if !filled[i] && !reached[i] {
                    reached[i] = true;
                    outside += 1;
                    stack.push((nr, nc));
                }
            }
        }
        outside + self.cells.len() < (h * w) as usize
    }

    /// The image under symmetry `k` (0..8), normalized.
    pub fn transformed(&self, k: usize) -> Polyomino {
        let mut cells: Vec<Cell> = self.cells.iter().map(|&c| SYMMETRIES[k](c)).collect();
        normalize(&mut cells);
        Polyomino { cells }
    }

    /// The lexicographically smallest of the eight symmetric images.
    pub fn canonical_form(&self) -> Polyomino {
        let mut best = self.clone();
        let mut buf: Vec<Cell> = Vec::with_capacity(self.cells.len());
        for sym in &SYMMETRIES[1..] {
            buf.clear();
            buf.extend(self.cells.iter().map(|&c| sym(c)));
            normalize(&mut buf);
            if buf < best.cells {
                best.cells.clone_from(&buf);
            }
        }
        best
    }

    /// Cells outside the polyomino that share an edge with it, sorted.
    pub fn outer_neighbors(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = self
            .cells
            .iter()
            .flat_map(|&(r, c)| NEIGHBORS.iter().map(move |&(dr, dc)| (r + dr, c + dc)))
            .filter(|&n| !self.contains(n))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Adds one cell and renormalizes.
    pub fn with_cell(&self, cell: Cell) -> Polyomino {
        let mut cells = self.cells.clone();
        cells.push(cell);
        normalize(&mut cells);
        cells.dedup();
        Polyomino { cells }
    }
}

fn normalize(cells: &mut [Cell]) {
    let min_r = cells.iter().map(|c| c.0).min().unwrap_or(0);
    let min_c = cells.iter().map(|c| c.1).min().unwrap_or(0);
    for c in cells.iter_mut() {
        c.0 -= min_r;
        c.1 -= min_c;
    }
    cells.sort_unstable();
}

/// The first `n` cells of the square spiral `(0,0), (0,1), (1,1), (1,0),
/// (1,-1), (0,-1), ...`: runs of length 1, 1, 2, 2, 3, 3, ... turning
/// clockwise.
pub fn spiral_order(n: usize) -> Vec<Cell> {
    const DIRS: [Cell; 4] = [(0, 1), (1, 0), (0, -1), (-1, 0)];
    let mut out = Vec::with_capacity(n);
    let mut pos = (0, 0);
    let mut run = 1;
    let mut dir = 0;
    if n > 0 {
        out.push(pos);
    }
    'outer: loop {
        for _ in 0..2 {
            let (dr, dc) = DIRS[dir % 4];
            for _ in 0..run {
                if out.len() >= n {
                    break 'outer;
                }
                pos = (pos.0 + dr, pos.1 + dc);
                out.push(pos);
            }
            dir += 1;
        }
        run += 1;
    }
    out
}

/// The spiral polyomino of order `n`; it attains the minimum perimeter.
pub fn spiral(n: usize) -> Polyomino {
    assert!(n >= 1, "polyomino order must be positive");
    Polyomino::new(spiral_order(n)).expect("non-empty")
}
