//! Text renderings. Row 0 is drawn at the bottom, so the picture follows
//! the usual `y`-up orientation of plotted lattice shapes.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::polyomino::{Cell, Polyomino};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl RenderFormat {
    pub fn extension(self) -> &'static str {
        match self {
            RenderFormat::Ascii => "txt",
            RenderFormat::Svg => "svg",
        }
    }
}

/// Pixels per cell in SVG output.
pub const SVG_UNIT: i32 = 20;

pub fn render(p: &Polyomino, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(p),
        RenderFormat::Svg => render_svg(p),
    }
}

/// One line per row, `#` for a cell and `.` for an empty square, no
/// trailing newline.
pub fn render_ascii(p: &Polyomino) -> String {
    let (rows, cols) = p.dimensions();
    let mut lines = Vec::with_capacity(rows as usize);
    for r in (0..rows).rev() {
        lines.push((0..cols).map(|c| if p.contains((r, c)) { '#' } else { '.' }).collect::<String>());
    }
    lines.join("\n")
}

/// SVG 1.1 with one `rect` per cell and a `path` tracing the perimeter.
pub fn render_svg(p: &Polyomino) -> String {
    let (rows, cols) = p.dimensions();
    let (w, h) = (cols * SVG_UNIT, rows * SVG_UNIT);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"-1 -1 {} {}\">",
        w + 2,
        h + 2,
        w + 2,
        h + 2
    )
    .unwrap();
    let y_of = |r: i32| (rows - 1 - r) * SVG_UNIT;
    for &(r, c) in p.cells() {
        writeln!(
            out,
            "  <rect x=\"{}\" y=\"{}\" width=\"{SVG_UNIT}\" height=\"{SVG_UNIT}\" fill=\"#9ecae1\" stroke=\"#6baed6\" stroke-width=\"0.5\"/>",
            c * SVG_UNIT,
            y_of(r)
        )
        .unwrap();
    }
    // Outline: every unit edge with a cell on exactly one side.
    let cells: BTreeSet<Cell> = p.cells().iter().copied().collect();
    let mut d = String::new();
    for &(r, c) in p.cells() {
        let (x0, y0) = (c * SVG_UNIT, y_of(r));
        let (x1, y1) = (x0 + SVG_UNIT, y0 + SVG_UNIT);
        if !cells.contains(&(r + 1, c)) {
            write!(d, "M{x0} {y0}H{x1}").unwrap();
        }
        if !cells.contains(&(r - 1, c)) {
            write!(d, "M{x0} {y1}H{x1}").unwrap();
        }
        if !cells.contains(&(r, c - 1)) {
            write!(d, "M{x0} {y0}V{y1}").unwrap();
        }
        if !cells.contains(&(r, c + 1)) {
            write!(d, "M{x1} {y0}V{y1}").unwrap();
        }
    }
    writeln!(out, "  <path d=\"{d}\" fill=\"none\" stroke=\"#08306b\" stroke-width=\"2\" stroke-linecap=\"square\"/>")
        .unwrap();
    out.push_str("</svg>\n");
    out
}
