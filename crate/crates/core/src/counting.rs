//! Closed-form quantities for minimum-perimeter polyominoes: the minimum
//! perimeter itself, the maximum number of shared edges, the case split of
//! `n` around the nearest squares and pronic numbers, the rectangles that
//! admit a perimeter-preserving deletion process, and the count `e(n)`.
//!
//! Everything is exact integer arithmetic; square roots are integer square
//! roots.

use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_integer::Roots;
use thiserror::Error;

use crate::series::{rect_corner_series, square_corner_series, Coefficient, PowerSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("boundary cycle length {0} is odd; hole-free boundaries have even length")]
    OddBoundary(u64),
    #[error("boundary cycle length {0} is below the minimum of 4")]
    BoundaryTooShort(u64),
}

/// `floor(sqrt(n))`.
pub fn isqrt(n: u64) -> u64 {
    n.sqrt()
}

/// `ceil(2 sqrt(n))`, the smallest `m` with `m^2 >= 4n`.
pub fn ceil_two_sqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let four_n = 4 * u128::from(n);
    let m = (four_n - 1).sqrt() + 1;
    m as u64
}

/// Minimum perimeter `2 ceil(2 sqrt(n))` over all polyominoes with `n` cells.
pub fn min_perimeter(n: u64) -> u64 {
    assert!(n >= 1, "polyomino order must be positive");
    2 * ceil_two_sqrt(n)
}

/// Maximum number of shared edges `2n - ceil(2 sqrt(n))`; the dual of
/// [`min_perimeter`] through `4n - 2 B(n) = p(n)`.
pub fn max_common_edges(n: u64) -> u64 {
    assert!(n >= 1, "polyomino order must be positive");
    2 * n - ceil_two_sqrt(n)
}

/// Maximum area `A(L)` of a polyomino whose boundary cycle has `L` squares
/// and no square of degree one.
///
/// Equal to `((L+4)/4)^2`, minus `1/4` when `L = 2 mod 4`; both branches are
/// the product of the near-equal sides `ceil((L+4)/4) * floor((L+4)/4)`.
pub fn max_area_for_boundary(cycle_len: u64) -> Result<u64, CountingError> {
    if cycle_len % 2 == 1 {
        return Err(CountingError::OddBoundary(cycle_len));
    }
    if cycle_len < 4 {
        return Err(CountingError::BoundaryTooShort(cycle_len));
    }
    let semi = cycle_len + 4;
    let long = semi.div_ceil(4);
    let short = semi / 4;
    Ok(long * short)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    /// `n = s^2`
    I,
    /// `n = s^2 + t`, `0 < t < s`
    II,
    /// `n = s^2 + s`
    III,
    /// `n = s^2 + s + t`, `0 < t <= s`
    IV,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
            Case::IV => "IV",
        })
    }
}

/// Decomposition of `n` relative to `s = floor(sqrt(n))`.
///
/// The count formula writes `s` for both this integer and one of its
/// generating functions; here the integer is `s_floor` and the series is
/// [`crate::series::symmetric_corner_series`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CaseClassification {
    pub n: u64,
    pub s_floor: u64,
    pub t: u64,
    pub case: Case,
}

impl CaseClassification {
    /// Rebuilds `n` from `(s_floor, t, case)`.
    pub fn reconstruct(&self) -> u64 {
        let s = self.s_floor;
        match self.case {
            Case::I | Case::II => s * s + self.t,
            Case::III | Case::IV => s * s + s + self.t,
        }
    }
}

pub fn classify(n: u64) -> CaseClassification {
    assert!(n >= 1, "polyomino order must be positive");
    let s = isqrt(n);
    let rem = n - s * s;
    let (t, case) = if rem == 0 {
        (0, Case::I)
    } else if rem < s {
        (rem, Case::II)
    } else if rem == s {
        (0, Case::III)
    } else {
        (rem - s, Case::IV)
    };
    CaseClassification { n, s_floor: s, t, case }
}

/// A rectangle of perimeter `p(n)` with at least `n` cells, from which the
/// extremal polyominoes of order `n` are carved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectangleCandidate {
    pub long_side: u64,
    pub short_side: u64,
    /// Offset `c` of the side lengths from the most balanced rectangle.
    pub offset: u64,
    /// Cells to delete: `long_side * short_side - n`.
    pub surplus: u64,
}

impl RectangleCandidate {
    pub fn is_square(&self) -> bool {
        self.long_side == self.short_side
    }

    /// Boundary cycle length `2a + 2b - 4` of the rectangle.
    pub fn boundary_len(&self) -> u64 {
        2 * self.long_side + 2 * self.short_side - 4
    }

    pub fn area(&self) -> u64 {
        self.long_side * self.short_side
    }
}

/// Largest `c` in case II: `floor(-1/2 + sqrt(1 + 4s - 4t) / 2)`, i.e. the
/// largest `c` with `(2c + 1)^2 <= 1 + 4s - 4t`.
fn case_two_offset_bound(s: u64, t: u64) -> u64 {
    let disc = 1 + 4 * s - 4 * t;
    (isqrt(disc) - 1) / 2
}

/// Largest `c` in case IV: `floor(sqrt(1 + s - t))`. The same bound is also
/// written `floor(sqrt(s + 1 - t))`.
fn case_four_offset_bound(s: u64, t: u64) -> u64 {
    isqrt(1 + s - t)
}

pub fn candidate_rectangles(n: u64) -> Vec<RectangleCandidate> {
    let cls = classify(n);
    let (s, t) = (cls.s_floor, cls.t);
    let make = |long: u64, short: u64, offset: u64| RectangleCandidate {
        long_side: long,
        short_side: short,
        offset,
        surplus: long * short - n,
    };
    match cls.case {
        Case::I => vec![make(s, s, 0)],
        Case::III => vec![make(s + 1, s, 0)],
        Case::II => (0..=case_two_offset_bound(s, t)).map(|c| make(s + 1 + c, s - c, c)).collect(),
        Case::IV => (0..=case_four_offset_bound(s, t)).map(|c| make(s + 1 + c, s + 1 - c, c)).collect(),
    }
}

/// Truncation degree that covers every corner-series index used for orders
/// up to `n_max`. Indices never exceed `floor(sqrt(n)) + 1`.
pub fn truncation_for(n_max: u64) -> usize {
    (isqrt(n_max.max(1)) + 2) as usize
}

/// The rectangle series `r(x)` and square series `q(x)` at a fixed
/// truncation, and the evaluation of `e(n)` from them.
#[derive(Debug, Clone)]
pub struct CornerTables<T> {
    rect: PowerSeries<T>,
    square: PowerSeries<T>,
}

impl<T: Coefficient> CornerTables<T> {
    pub fn new(order: usize) -> Self {
        let rect = rect_corner_series(order).expect("rectangle orbit numerator is divisible by 4");
        let square = square_corner_series(order).expect("square orbit numerator is divisible by 8");
        CornerTables { rect, square }
    }

    pub fn order(&self) -> usize {
        self.rect.order()
    }

    pub fn rect(&self) -> &PowerSeries<T> {
        &self.rect
    }

    pub fn square(&self) -> &PowerSeries<T> {
        &self.square
    }

    /// `e(n)`, the number of free polyominoes of order `n` with perimeter `p(n)`.
    ///
    /// Panics if a subscript falls outside `[0, order]`; the case bounds
    /// rule this out, so a panic means a transcription error.
    pub fn count(&self, n: u64) -> T {
        let cls = classify(n);
        let s = cls.s_floor as i64;
        let t = cls.t as i64;
        match cls.case {
            Case::I | Case::III => T::one(),
            Case::II => {
                let bound = case_two_offset_bound(cls.s_floor, cls.t) as i64;
                (0..=bound).fold(T::zero(), |acc, c| acc + pick(&self.rect, s - c - c * c - t, n))
            }
            Case::IV => {
                let bound = case_four_offset_bound(cls.s_floor, cls.t) as i64;
                let head = pick(&self.square, s + 1 - t, n);
                (1..=bound).fold(head, |acc, c| acc + pick(&self.rect, s + 1 - c * c - t, n))
            }
        }
    }
}

fn pick<T: Coefficient>(series: &PowerSeries<T>, index: i64, n: u64) -> T {
    assert!(index >= 0, "negative corner-series subscript {index} for n = {n}");
    series
        .coeff(index as usize)
        .unwrap_or_else(|| panic!("subscript {index} beyond truncation {} for n = {n}", series.order()))
        .clone()
}

static SHARED_TABLES: RwLock<Option<Arc<CornerTables<BigUint>>>> = RwLock::new(None);

/// Process-wide tables covering orders up to `n_max`. Built once and rebuilt
/// only when a larger order is requested.
pub fn shared_tables(n_max: u64) -> Arc<CornerTables<BigUint>> {
    let need = truncation_for(n_max);
    if let Some(t) = SHARED_TABLES.read().unwrap().as_ref() {
        if t.order() >= need {
            return Arc::clone(t);
        }
    }
    let mut slot = SHARED_TABLES.write().unwrap();
    if let Some(t) = slot.as_ref() {
        if t.order() >= need {
            return Arc::clone(t);
        }
    }
    // Grow geometrically so a rising sequence of requests stays cheap.
    let order = need.max(slot.as_ref().map_or(0, |t| 2 * t.order()));
    let tables = Arc::new(CornerTables::new(order));
    *slot = Some(Arc::clone(&tables));
    tables
}

/// `e(n)` with unbounded integers.
pub fn count_extremal(n: u64) -> BigUint {
    shared_tables(n).count(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn float_free_ceil_two_sqrt(n: u64) -> u64 {
        (0..).find(|m: &u64| m * m >= 4 * n).unwrap()
    }

    #[test]
    fn perimeter_examples() {
        assert_eq!(min_perimeter(1), 4);
        assert_eq!(min_perimeter(2), 6);
        assert_eq!(min_perimeter(100), 40);
        assert_eq!(min_perimeter(7), 12);
    }

    #[test]
    fn ceil_two_sqrt_matches_linear_search() {
        for n in 0..5000 {
            assert_eq!(ceil_two_sqrt(n), float_free_ceil_two_sqrt(n), "n = {n}");
        }
        // Near the top of the range the u128 detour keeps 4n exact.
        let big = u64::MAX / 4;
        let m = ceil_two_sqrt(big) as u128;
        assert!(m * m >= 4 * big as u128 && (m - 1) * (m - 1) < 4 * big as u128);
    }

    #[test]
    fn common_edge_examples() {
        assert_eq!(max_common_edges(1), 0);
        assert_eq!(max_common_edges(4), 4);
        assert_eq!(max_common_edges(9), 12);
        assert_eq!(max_common_edges(7), 8);
    }

    #[test]
    fn edge_perimeter_duality_and_monotonicity() {
        let mut last = 0;
        for n in 1..=1_000_000u64 {
            let p = min_perimeter(n);
            assert_eq!(4 * n - 2 * max_common_edges(n), p);
            assert!(p >= last);
            last = p;
        }
    }

    #[test]
    fn max_area_examples() {
        assert_eq!(max_area_for_boundary(4), Ok(4));
        assert_eq!(max_area_for_boundary(6), Ok(6));
        assert_eq!(max_area_for_boundary(12), Ok(16));
        assert_eq!(max_area_for_boundary(7), Err(CountingError::OddBoundary(7)));
        assert_eq!(max_area_for_boundary(2), Err(CountingError::BoundaryTooShort(2)));
        // Rational form: ((L+4)/4)^2 - [L = 2 mod 4] / 4, scaled by 16.
        for l in (4..200u64).step_by(2) {
            let scaled = (l + 4) * (l + 4) - if l % 4 == 2 { 4 } else { 0 };
            assert_eq!(16 * max_area_for_boundary(l).unwrap(), scaled);
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify(9);
        assert_eq!((c.s_floor, c.t, c.case), (3, 0, Case::I));
        let c = classify(13);
        assert_eq!((c.s_floor, c.t, c.case), (3, 1, Case::IV));
        let c = classify(11);
        assert_eq!((c.s_floor, c.t, c.case), (3, 2, Case::II));
        let c = classify(12);
        assert_eq!((c.s_floor, c.t, c.case), (3, 0, Case::III));
    }

    #[test]
    fn classification_is_unique_and_reconstructs() {
        for n in 1..20_000 {
            let c = classify(n);
            assert_eq!(c.reconstruct(), n);
            match c.case {
                Case::I | Case::III => assert_eq!(c.t, 0),
                Case::II => assert!(0 < c.t && c.t < c.s_floor),
                Case::IV => assert!(0 < c.t && c.t <= c.s_floor),
            }
        }
    }

    #[test]
    fn candidate_examples() {
        let shapes = |n| {
            candidate_rectangles(n)
                .iter()
                .map(|r| (r.long_side, r.short_side, r.offset, r.surplus))
                .collect::<Vec<_>>()
        };
        assert_eq!(shapes(10), vec![(4, 3, 0, 2), (5, 2, 1, 0)]);
        assert_eq!(shapes(9), vec![(3, 3, 0, 0)]);
        assert_eq!(shapes(13), vec![(4, 4, 0, 3), (5, 3, 1, 2)]);
        assert_eq!(shapes(12), vec![(4, 3, 0, 0)]);
    }

    /// All `c >= 0` whose rectangle holds at least `n` cells, by direct search.
    fn offsets_by_search(n: u64) -> Vec<u64> {
        let cls = classify(n);
        let s = cls.s_floor;
        let sides = |c: u64| match cls.case {
            Case::II => (s + 1 + c, s.checked_sub(c)),
            Case::IV => (s + 1 + c, (s + 1).checked_sub(c)),
            _ => unreachable!(),
        };
        (0..=s + 1)
            .filter(|&c| matches!(sides(c), (a, Some(b)) if a * b >= n))
            .collect()
    }

    #[test]
    fn offset_bounds_match_direct_search() {
        for n in 1..5000 {
            let cls = classify(n);
            let cands = candidate_rectangles(n);
            for r in &cands {
                assert_eq!(r.boundary_len(), min_perimeter(n) - 4, "n = {n}");
                assert!(r.area() >= n);
                assert!(r.surplus < r.short_side, "surplus must stay below the short side, n = {n}");
                assert!(r.long_side >= r.short_side);
            }
            if matches!(cls.case, Case::II | Case::IV) {
                let offs: Vec<u64> = cands.iter().map(|r| r.offset).collect();
                assert_eq!(offs, offsets_by_search(n), "n = {n}");
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_extremal(7), BigUint::from(4u32));
        assert_eq!(count_extremal(16), BigUint::from(1u32));
        assert_eq!(count_extremal(101), BigUint::from(1615u32));
        assert_eq!(count_extremal(10), BigUint::from(6u32));
        assert_eq!(count_extremal(13), BigUint::from(11u32));
    }

    #[test]
    fn count_agrees_with_candidate_sum() {
        // Sum over candidates: q for the square, r for the others.
        let tables = CornerTables::<u128>::new(truncation_for(40_000));
        for n in 1..40_000 {
            let via_rects: u128 = candidate_rectangles(n)
                .iter()
                .map(|r| {
                    let series = if r.is_square() { tables.square() } else { tables.rect() };
                    series.coeffs()[r.surplus as usize]
                })
                .sum();
            assert_eq!(tables.count(n), via_rects, "n = {n}");
        }
    }

    #[test]
    fn squares_and_pronics_count_one() {
        for s in 1..=200u64 {
            assert_eq!(count_extremal(s * s), BigUint::from(1u32));
            assert_eq!(count_extremal(s * s + s), BigUint::from(1u32));
        }
    }

    #[test]
    fn local_maxima_and_decreasing_runs() {
        let tables = CornerTables::<BigUint>::new(truncation_for(45 * 45));
        let e = |n: u64| tables.count(n);
        // at s = 2 the run after s^2 + 1 is empty: e(5) = e(6) = 1
        assert_eq!(e(5), e(6));
        for s in 2..=40u64 {
            assert!(s == 2 || e(s * s + 1) > e(s * s + 2), "s = {s}");
            assert!(e(s * s + s + 1) > e(s * s + s + 2), "s = {s}");
            for n in s * s + 1..s * s + s {
                assert!(e(n) >= e(n + 1), "case II run, n = {n}");
            }
            for n in s * s + s + 1..(s + 1) * (s + 1) {
                assert!(e(n) >= e(n + 1), "case IV run, n = {n}");
            }
        }
    }

    #[test]
    fn shared_tables_grow_on_demand() {
        let small = shared_tables(10);
        assert!(small.order() >= truncation_for(10));
        let large = shared_tables(1_000_000);
        assert!(large.order() >= truncation_for(1_000_000));
        assert!(shared_tables(50).order() >= large.order());
    }
}
