//! The deletion process: carve extremal polyominoes out of a candidate
//! rectangle by removing a Ferrers diagram of cells at each corner.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::counting::{candidate_rectangles, RectangleCandidate};

use super::polyomino::Polyomino;
use super::runs::RowRuns;
use super::ShapeError;

/// A Ferrers diagram anchored at a rectangle corner.
///
/// `parts[i]` is the number of cells removed from the `i`-th row counted
/// inward from the corner's horizontal side, each measured inward from the
/// corner's vertical side. Parts are positive and weakly decreasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CornerDeletion {
    parts: Vec<u16>,
}

impl CornerDeletion {
    pub fn new(parts: Vec<u16>) -> Result<Self, ShapeError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotAFerrersDiagram(parts));
        }
        Ok(CornerDeletion { parts })
    }

    pub fn empty() -> Self {
        CornerDeletion::default()
    }

    pub fn parts(&self) -> &[u16] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn width(&self) -> usize {
        self.parts.first().map_or(0, |&p| p as usize)
    }

    /// Row lengths of the diagram reflected in its diagonal.
    pub fn conjugate(&self) -> CornerDeletion {
        let parts = (1..=self.width() as u16)
            .map(|col| self.parts.iter().filter(|&&p| p >= col).count() as u16)
            .collect();
        CornerDeletion { parts }
    }
}

/// Corners in order: 1 top-left, 2 top-right, 3 bottom-right, 4 bottom-left.
pub const CORNER_COUNT: usize = 4;

/// A candidate rectangle laid out with `short_side` rows and `long_side`
/// columns, and the diagram removed at each corner.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeletionScheme {
    pub rect: RectangleCandidate,
    pub corners: [CornerDeletion; CORNER_COUNT],
}

impl DeletionScheme {
    pub fn new(rect: RectangleCandidate, corners: [CornerDeletion; CORNER_COUNT]) -> Self {
        DeletionScheme { rect, corners }
    }

    pub fn deleted(&self) -> usize {
        self.corners.iter().map(CornerDeletion::size).sum()
    }

    /// The remaining cells as row runs, without normalization.
    ///
    /// Fails if a diagram is wider or taller than the rectangle minus one,
    /// if two diagrams claim a cell, if a row or column is emptied, or if
    /// the diagrams do not remove exactly `rect.surplus` cells.
    pub fn row_runs(&self) -> Result<RowRuns, ShapeError> {
        let rows = self.rect.short_side as usize;
        let cols = self.rect.long_side as usize;
        for (i, corner) in self.corners.iter().enumerate() {
            if corner.height() > rows.saturating_sub(1) || corner.width() > cols.saturating_sub(1) {
                return Err(ShapeError::DiagramTooLarge { corner: i + 1 });
            }
        }
        let [tl, tr, br, bl] = &self.corners;
        let mut runs = Vec::with_capacity(rows);
        for r in 0..rows {
            let from_bottom = rows - 1 - r;
            let left = side_cut(tl, r, bl, from_bottom, r)?;
            let right = side_cut(tr, r, br, from_bottom, r)?;
            if left + right > cols {
                return Err(ShapeError::Overlap { row: r, col: left.min(cols - 1) });
            }
            if left + right == cols {
                return Err(ShapeError::BoundingBoxBroken);
            }
            runs.push((left as u16, (cols - 1 - right) as u16));
        }
        let raw = RowRuns::new(runs).ok_or(ShapeError::BoundingBoxBroken)?;
        if raw.width() != cols || !raw.is_connected() {
            return Err(ShapeError::BoundingBoxBroken);
        }
        if self.deleted() as u64 != self.rect.surplus {
            return Err(ShapeError::SurplusMismatch { deleted: self.deleted(), surplus: self.rect.surplus });
        }
        Ok(raw)
    }
}

/// Cells removed from one end of row `r` by the diagrams on that side.
fn side_cut(
    top: &CornerDeletion,
    r: usize,
    bottom: &CornerDeletion,
    from_bottom: usize,
    row: usize,
) -> Result<usize, ShapeError> {
    let t = top.parts.get(r).copied().unwrap_or(0) as usize;
    let b = bottom.parts.get(from_bottom).copied().unwrap_or(0) as usize;
    if t > 0 && b > 0 {
        return Err(ShapeError::Overlap { row, col: 0 });
    }
    Ok(t + b)
}

/// The rectangle minus the four corner diagrams, normalized.
pub fn apply_scheme(scheme: &DeletionScheme) -> Result<Polyomino, ShapeError> {
    Ok(scheme.row_runs()?.to_polyomino())
}

/// All partitions of `0..=max_size`, each as a weakly decreasing part list,
/// indexed by size.
pub fn partitions_up_to(max_size: usize) -> Vec<Vec<CornerDeletion>> {
    fn extend(rem: usize, cap: usize, cur: &mut Vec<u16>, out: &mut Vec<CornerDeletion>) {
        if rem == 0 {
            out.push(CornerDeletion { parts: cur.clone() });
            return;
        }
        for part in (1..=rem.min(cap)).rev() {
            cur.push(part as u16);
            extend(rem - part, part, cur, out);
            cur.pop();
        }
    }
    (0..=max_size)
        .map(|k| {
            let mut out = Vec::new();
            extend(k, k, &mut Vec::new(), &mut out);
            out
        })
        .collect()
}

/// Ordered splits `(d1, d2, d3, d4)` of `total` into four non-negative parts.
fn four_part_compositions(total: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..=total).flat_map(move |a| {
        (0..=total - a).flat_map(move |b| (0..=total - a - b).map(move |c| [a, b, c, total - a - b - c]))
    })
}

/// Calls `visit` with every deletion scheme of `rect` whose diagrams fit
/// (height at most `short_side - 1`, width at most `long_side - 1`) and
/// remove exactly `rect.surplus` cells.
pub fn for_each_scheme(rect: RectangleCandidate, mut visit: impl FnMut(&DeletionScheme)) {
    let surplus = rect.surplus as usize;
    let table = partitions_up_to(surplus);
    let fits = |d: &CornerDeletion| {
        d.height() < rect.short_side as usize && d.width() < rect.long_side as usize
    };
    for split in four_part_compositions(surplus) {
        let choices: Vec<Vec<&CornerDeletion>> =
            split.iter().map(|&k| table[k].iter().filter(|d| fits(d)).collect()).collect();
        for &c0 in &choices[0] {
            for &c1 in &choices[1] {
                for &c2 in &choices[2] {
                    for &c3 in &choices[3] {
                        let scheme = DeletionScheme::new(rect, [c0.clone(), c1.clone(), c2.clone(), c3.clone()]);
                        visit(&scheme);
                    }
                }
            }
        }
    }
}

/// Canonical row runs of every shape reachable from one candidate rectangle;
/// may contain repeats.
fn canonical_shapes_of(rect: RectangleCandidate) -> Vec<RowRuns> {
    let surplus = rect.surplus as usize;
    let table = partitions_up_to(surplus);
    // Parallel over the size split; the caller sorts, so order is irrelevant.
    four_part_compositions(surplus)
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|split| {
            let mut out = Vec::new();
            let choices: Vec<&[CornerDeletion]> = split.iter().map(|&k| table[k].as_slice()).collect();
            for c0 in choices[0] {
                for c1 in choices[1] {
                    for c2 in choices[2] {
                        for c3 in choices[3] {
                            let scheme =
                                DeletionScheme::new(rect, [c0.clone(), c1.clone(), c2.clone(), c3.clone()]);
                            let runs = scheme
                                .row_runs()
                                .expect("diagrams smaller than the short side always fit");
                            out.push(runs.canonical());
                        }
                    }
                }
            }
            out
        })
        .collect()
}

/// Default upper limit on `n` for shape enumeration.
pub const DEFAULT_SHAPE_CAP: u64 = 400;

/// Outcome of [`extremal_shapes`].
#[derive(Debug, Clone)]
pub struct ExtremalEnumeration {
    pub n: u64,
    /// Distinct canonical shapes in ascending order.
    pub shapes: Vec<RowRuns>,
    /// Deletion schemes generated across all candidate rectangles.
    pub schemes: usize,
}

/// All free polyominoes of order `n` with perimeter `p(n)`, as canonical
/// row runs in ascending order, deduplicated across candidate rectangles.
pub fn extremal_shapes(n: u64, cap: u64) -> Result<ExtremalEnumeration, ShapeError> {
    if n == 0 {
        return Err(ShapeError::ZeroOrder);
    }
    if n > cap {
        return Err(ShapeError::CapExceeded { n, cap });
    }
    let mut all: Vec<RowRuns> = Vec::new();
    for rect in candidate_rectangles(n) {
        debug_assert!(rect.surplus < rect.short_side);
        all.extend(canonical_shapes_of(rect));
    }
    let schemes = all.len();
    all.par_sort_unstable();
    all.dedup();
    Ok(ExtremalEnumeration { n, shapes: all, schemes })
}

/// [`extremal_shapes`] materialized as cell sets.
pub fn enumerate_extremal(n: u64, cap: u64) -> Result<Vec<Polyomino>, ShapeError> {
    Ok(extremal_shapes(n, cap)?.shapes.iter().map(RowRuns::to_polyomino).collect())
}

/// Scheme collision statistics for a single rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemeCollisions {
    pub schemes: usize,
    /// Distinct cell sets in the fixed placement, before any symmetry.
    pub placed_shapes: usize,
    /// Distinct shapes up to symmetry.
    pub free_shapes: usize,
}

pub fn scheme_collisions(rect: RectangleCandidate) -> SchemeCollisions {
    let mut schemes = 0;
    let mut placed = HashSet::new();
    let mut free = HashSet::new();
    for_each_scheme(rect, |scheme| {
        schemes += 1;
        let runs = scheme.row_runs().expect("valid scheme");
        free.insert(runs.canonical());
        placed.insert(runs);
    });
    SchemeCollisions { schemes, placed_shapes: placed.len(), free_shapes: free.len() }
}
