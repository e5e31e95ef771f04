//! Orbit counts of corner deletions computed directly on cell sets.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use minperim::series::{rect_corner_series, square_corner_series};
use minperim::Polyomino;

const MAX_K: usize = 9;

fn partitions(n: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=max_part.min(n)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut out);
    out
}

/// Distinct free shapes left by removing staircases of total size `k` from
/// the four corners of a `rows x cols` rectangle.
fn orbit_count(rows: i32, cols: i32, k: usize) -> usize {
    let by_size: Vec<Vec<Vec<usize>>> = (0..=k).map(all_partitions).collect();
    let mut seen = BTreeSet::new();
    for a in 0..=k {
        for b in 0..=k - a {
            for c in 0..=k - a - b {
                let d = k - a - b - c;
                for pa in &by_size[a] {
                    for pb in &by_size[b] {
                        for pc in &by_size[c] {
                            for pd in &by_size[d] {
                                seen.insert(carve(rows, cols, [pa, pb, pc, pd]).canonical_form());
                            }
                        }
                    }
                }
            }
        }
    }
    seen.len()
}

fn carve(rows: i32, cols: i32, corners: [&Vec<usize>; 4]) -> Polyomino {
    let mut removed = BTreeSet::new();
    for (corner, parts) in corners.iter().enumerate() {
        for (i, &len) in parts.iter().enumerate() {
            for j in 0..len {
                let (i, j) = (i as i32, j as i32);
                removed.insert(match corner {
                    0 => (i, j),
                    1 => (i, cols - 1 - j),
                    2 => (rows - 1 - i, cols - 1 - j),
                    _ => (rows - 1 - i, j),
                });
            }
        }
    }
    let cells = (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).filter(|cell| !removed.contains(cell));
    Polyomino::new(cells).unwrap()
}

#[test]
fn rectangle_orbits_match_series() {
    let r = rect_corner_series::<BigUint>(MAX_K).unwrap();
    for k in 0..=MAX_K {
        assert_eq!(r.coeffs()[k], BigUint::from(orbit_count(24, 25, k)), "k = {k}");
    }
}

#[test]
fn square_orbits_match_series() {
    let q = square_corner_series::<BigUint>(MAX_K).unwrap();
    for k in 0..=MAX_K {
        assert_eq!(q.coeffs()[k], BigUint::from(orbit_count(24, 24, k)), "k = {k}");
    }
}
