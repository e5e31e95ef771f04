use std::cmp::Ordering;

use super::polyomino::{Cell, Polyomino};

/// Compact form of a polyomino whose every row and every column is a single
/// contiguous run. Each entry is the inclusive column range `(start, end)`
/// of one row; rows run top to bottom and the smallest start is 0.
///
/// Every extremal polyomino has this form, and storing two numbers per row
/// instead of one pair per cell keeps large enumerations in memory.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowRuns {
    runs: Vec<(u16, u16)>,
}

impl RowRuns {
    /// Accepts runs with `start <= end`; shifts them so the minimum start is 0.
    pub fn new(mut runs: Vec<(u16, u16)>) -> Option<Self> {
        if runs.is_empty() || runs.iter().any(|&(s, e)| s > e) {
            return None;
        }
        let shift = runs.iter().map(|r| r.0).min().unwrap();
        for r in &mut runs {
            r.0 -= shift;
            r.1 -= shift;
        }
        Some(RowRuns { runs })
    }

    /// Converts when every row and column of `p` is a single run.
    pub fn from_polyomino(p: &Polyomino) -> Option<Self> {
        let (rows, _) = p.dimensions();
        let mut runs = vec![None::<(u16, u16)>; rows as usize];
        for &(r, c) in p.cells() {
            let c = c as u16;
            let slot = &mut runs[r as usize];
            *slot = match *slot {
                None => Some((c, c)),
                Some((s, e)) if e + 1 == c => Some((s, c)),
                Some(_) => return None,
            };
        }
        let runs = RowRuns { runs: runs.into_iter().collect::<Option<Vec<_>>>()? };
        runs.transposed()?;
        Some(runs)
    }

    pub fn runs(&self) -> &[(u16, u16)] {
        &self.runs
    }

    pub fn rows(&self) -> usize {
        self.runs.len()
    }

    pub fn width(&self) -> usize {
        self.runs.iter().map(|r| r.1 as usize + 1).max().unwrap_or(0)
    }

    pub fn order(&self) -> usize {
        self.runs.iter().map(|&(s, e)| (e - s) as usize + 1).sum()
    }

    pub fn common_edges(&self) -> usize {
        let within: usize = self.runs.iter().map(|&(s, e)| (e - s) as usize).sum();
        let between: usize = self
            .runs
            .windows(2)
            .map(|w| {
                let lo = w[0].0.max(w[1].0);
                let hi = w[0].1.min(w[1].1);
                if hi >= lo { (hi - lo) as usize + 1 } else { 0 }
            })
            .sum();
        within + between
    }

    pub fn perimeter(&self) -> usize {
        4 * self.order() - 2 * self.common_edges()
    }

    /// Rows are edge-connected to their neighbours.
    pub fn is_connected(&self) -> bool {
        self.runs.windows(2).all(|w| w[0].0.max(w[1].0) <= w[0].1.min(w[1].1))
    }

    pub fn to_polyomino(&self) -> Polyomino {
        let cells: Vec<Cell> = self
            .runs
            .iter()
            .enumerate()
            .flat_map(|(r, &(s, e))| (s..=e).map(move |c| (r as i32, c as i32)))
            .collect();
        Polyomino::from_sorted_unchecked(cells)
    }

    /// Swaps rows and columns, or `None` if some column is not a single run.
    pub fn transposed(&self) -> Option<RowRuns> {
        let width = self.width();
        let mut cols = vec![None::<(u16, u16)>; width];
        for (r, &(s, e)) in self.runs.iter().enumerate() {
            let r = r as u16;
            for slot in &mut cols[s as usize..=e as usize] {
                *slot = match *slot {
                    None => Some((r, r)),
                    Some((top, bot)) if bot + 1 == r => Some((top, r)),
                    Some(_) => return None,
                };
            }
        }
        Some(RowRuns { runs: cols.into_iter().collect::<Option<Vec<_>>>()? })
    }

    fn mirrored(&self) -> RowRuns {
        let last = (self.width() - 1) as u16;
        RowRuns { runs: self.runs.iter().map(|&(s, e)| (last - e, last - s)).collect() }
    }

    fn flipped(&self) -> RowRuns {
        RowRuns { runs: self.runs.iter().rev().copied().collect() }
    }

    /// The smallest of the eight symmetric images in the same order as
    /// [`Polyomino::canonical_form`].
    pub fn canonical(&self) -> RowRuns {
        let transposed = self.transposed().expect("row runs must also be column runs");
        let mut best: Option<RowRuns> = None;
        for base in [self, &transposed] {
            let mirrored = base.mirrored();
            for image in [base.flipped(), mirrored.flipped(), mirrored, base.clone()] {
                if best.as_ref().is_none_or(|b| image < *b) {
                    best = Some(image);
                }
            }
        }
        best.unwrap()
    }
}

impl Ord for RowRuns {
    /// Lexicographic order of the sorted `(row, col)` cell lists, computed
    /// from the runs alone.
    fn cmp(&self, other: &Self) -> Ordering {
        for (i, (a, b)) in self.runs.iter().zip(&other.runs).enumerate() {
            match a.0.cmp(&b.0) {
                Ordering::Equal => {}
                ord => return ord,
            }
            if a.1 != b.1 {
                // The shorter row moves on to the next row, or ends the list.
                let (shorter_is_self, shorter) = if a.1 < b.1 { (true, self) } else { (false, other) };
                let shorter_ends = i + 1 == shorter.runs.len();
                return match (shorter_is_self, shorter_ends) {
                    (true, true) | (false, false) => Ordering::Less,
                    (true, false) | (false, true) => Ordering::Greater,
                };
            }
        }
        self.runs.len().cmp(&other.runs.len())
    }
}

impl PartialOrd for RowRuns {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Random row-and-column convex shapes: a rectangle with staircase
    /// notches cut from its four corners.
    fn convex_shape() -> impl Strategy<Value = RowRuns> {
        (2u16..9, 2u16..9, prop::collection::vec(0u16..4, 4))
            .prop_flat_map(|(rows, cols, depths)| {
                let notch = move |d: u16| prop::collection::vec(0..=d.min((cols - 1) / 2), 0..=(rows / 2) as usize);
                (Just((rows, cols)), notch(depths[0]), notch(depths[1]), notch(depths[2]), notch(depths[3]))
            })
            .prop_map(|((rows, cols), mut tl, mut tr, mut br, mut bl)| {
                for v in [&mut tl, &mut tr, &mut br, &mut bl] {
                    v.sort_unstable_by(|a, b| b.cmp(a));
                }
                let runs = (0..rows as usize)
                    .map(|r| {
                        let from_bottom = rows as usize - 1 - r;
                        let left = tl.get(r).or(bl.get(from_bottom)).copied().unwrap_or(0);
                        let right = tr.get(r).or(br.get(from_bottom)).copied().unwrap_or(0);
                        (left, cols - 1 - right)
                    })
                    .collect();
                RowRuns::new(runs).unwrap()
            })
    }

    proptest! {
        #[test]
        fn ordering_matches_cell_lists(a in convex_shape(), b in convex_shape()) {
            prop_assert_eq!(a.cmp(&b), a.to_polyomino().cmp(&b.to_polyomino()));
        }

        #[test]
        fn canonical_matches_polyomino_canonical(a in convex_shape()) {
            prop_assert_eq!(a.canonical().to_polyomino(), a.to_polyomino().canonical_form());
            prop_assert_eq!(a.canonical().canonical(), a.canonical());
        }

        #[test]
        fn edge_counts_match_polyomino(a in convex_shape()) {
            let p = a.to_polyomino();
            prop_assert_eq!(a.order(), p.order());
            prop_assert_eq!(a.common_edges(), p.common_edges());
            prop_assert_eq!(a.perimeter(), p.perimeter());
            prop_assert_eq!(RowRuns::from_polyomino(&p), Some(a.clone()));
        }
    }

    #[test]
    fn rejects_non_convex_shapes() {
        let u = Polyomino::new([(0, 0), (0, 2), (1, 0), (1, 1), (1, 2)]).unwrap();
        assert_eq!(RowRuns::from_polyomino(&u), None);
        let c = Polyomino::new([(0, 0), (0, 1), (1, 0), (2, 0), (2, 1)]).unwrap();
        assert_eq!(RowRuns::from_polyomino(&c), None);
    }

    #[test]
    fn prefix_orders_first() {
        let short = RowRuns::new(vec![(0, 1)]).unwrap();
        let long = RowRuns::new(vec![(0, 1), (0, 0)]).unwrap();
        assert!(short < long);
        assert_eq!(short.cmp(&long), short.to_polyomino().cmp(&long.to_polyomino()));
    }
}
