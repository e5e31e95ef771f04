//! Polyominoes as cell sets, their symmetry canonicalization, the
//! construction of every minimum-perimeter polyomino by corner deletions,
//! and rendering.

mod deletion;
mod polyomino;
mod render;
mod runs;

use thiserror::Error;

pub use deletion::{
    apply_scheme, enumerate_extremal, extremal_shapes, for_each_scheme, partitions_up_to, scheme_collisions,
    CornerDeletion, DeletionScheme, ExtremalEnumeration, SchemeCollisions, CORNER_COUNT, DEFAULT_SHAPE_CAP,
};
pub use polyomino::{spiral, spiral_order, Cell, Polyomino};
pub use render::{render, render_ascii, render_svg, RenderFormat, SVG_UNIT};
pub use runs::RowRuns;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("a polyomino needs at least one cell")]
    Empty,
    #[error("polyomino order must be positive")]
    ZeroOrder,
    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: u64, cap: u64 },
    #[error("parts {0:?} do not form a Ferrers diagram")]
    NotAFerrersDiagram(Vec<u16>),
    #[error("diagram at corner {corner} does not fit inside the rectangle")]
    DiagramTooLarge { corner: usize },
    #[error("two corner diagrams claim the cell at row {row}, column {col}")]
    Overlap { row: usize, col: usize },
    #[error("the deletions change the bounding rectangle")]
    BoundingBoxBroken,
    #[error("diagrams remove {deleted} cells but the rectangle has surplus {surplus}")]
    SurplusMismatch { deleted: usize, surplus: u64 },
}
