//! Polyominoes of minimum perimeter: how many there are for each order, and
//! what they look like.
//!
//! - [`counting`] evaluates the minimum perimeter, the maximum number of
//!   shared edges and the exact count `e(n)` in closed form.
//! - [`series`] provides the exact power series behind the count.
//! - [`shapes`] constructs every extremal polyomino by deleting corner
//!   staircases from rectangles, and renders them.
//! - [`oracle`] enumerates all free polyominoes of small order by brute
//!   force as an independent check.
//! - [`cli`] implements the `minperim` command-line tool.

pub mod cli;
pub mod corpus;
pub mod counting;
pub mod oracle;
pub mod series;
pub mod shapes;

pub use counting::{count_extremal, max_common_edges, min_perimeter, Case, CaseClassification, RectangleCandidate};
pub use series::{Coefficient, PowerSeries, SeriesError};
pub use shapes::{Polyomino, ShapeError};

/// Power series with unbounded coefficients.
pub type Series = PowerSeries<num_bigint::BigUint>;
/// Power series with 64-bit coefficients; exact while no coefficient
/// overflows (the corner series stay in range through degree 100).
pub type Series64 = PowerSeries<u64>;
/// Corner tables with unbounded coefficients.
pub type Tables = counting::CornerTables<num_bigint::BigUint>;
