//! Text and SVG pictures of a diagram.
//!
//! ASCII cells are three characters wide:
//!
//! | cell               | ascii | unicode |
//! |--------------------|-------|---------|
//! | square / merged    | `[2]` | `▕2▏`   |
//! | upper triangle     | ` \1` | ` ╲1`   |
//! | lower triangle     | `1\ ` | `1╲ `   |
//! | adjoined triangles | `1\1` | `1╲1`   |
//! | empty              | `   ` | `   `   |
//!
//! Trailing blanks are trimmed and every row ends with a newline. The empty
//! diagram renders as the empty string.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Cell, CellKind, ModularDiagram};

const CELL_PX: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Charset {
    #[default]
    Ascii,
    Unicode,
}

impl Charset {
    fn glyphs(self, kind: CellKind) -> &'static str {
        match (self, kind) {
            (Charset::Ascii, CellKind::Square | CellKind::MergedSquare) => "[2]",
            (Charset::Ascii, CellKind::UpperTriangle) => " \\1",
            (Charset::Ascii, CellKind::LowerTriangle) => "1\\ ",
            (Charset::Ascii, CellKind::AdjoinedTriangles) => "1\\1",
            (Charset::Unicode, CellKind::Square | CellKind::MergedSquare) => "▕2▏",
            (Charset::Unicode, CellKind::UpperTriangle) => " ╲1",
            (Charset::Unicode, CellKind::LowerTriangle) => "1╲ ",
            (Charset::Unicode, CellKind::AdjoinedTriangles) => "1╲1",
        }
    }
}

pub fn render(dia: &ModularDiagram, format: RenderFormat, charset: Charset) -> String {
    match format {
        RenderFormat::Ascii => render_text(dia, charset),
        RenderFormat::Svg => render_svg(dia),
    }
}

fn render_text(dia: &ModularDiagram, charset: Charset) -> String {
    let mut out = String::new();
    for row in 1..=dia.num_rows() {
        let mut line = String::new();
        for col in 1..=dia.num_cols() {
            match dia.get(row, col) {
                Some(kind) => line.push_str(charset.glyphs(kind)),
                None => line.push_str("   "),
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_svg(dia: &ModularDiagram) -> String {
    let width = dia.num_cols() * CELL_PX;
    let height = dia.num_rows() * CELL_PX;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    for (&Cell { row, col }, &kind) in dia.cells() {
        let x = (col - 1) * CELL_PX;
        let y = (row - 1) * CELL_PX;
        let (x1, y1) = (x + CELL_PX, y + CELL_PX);
        let upper = |out: &mut String| {
            writeln!(out, r#"  <polygon points="{x},{y} {x1},{y} {x1},{y1}" fill="none" stroke="black"/>"#).unwrap();
            label(out, x + 22, y + 10, "1");
        };
        let lower = |out: &mut String| {
            writeln!(out, r#"  <polygon points="{x},{y} {x},{y1} {x1},{y1}" fill="none" stroke="black"/>"#).unwrap();
            label(out, x + 10, y + 22, "1");
        };
        match kind {
            CellKind::Square | CellKind::MergedSquare => {
                writeln!(
                    out,
                    r#"  <rect x="{x}" y="{y}" width="{CELL_PX}" height="{CELL_PX}" fill="none" stroke="black"/>"#
                )
                .unwrap();
                label(&mut out, x + CELL_PX / 2, y + CELL_PX / 2, "2");
            }
            CellKind::UpperTriangle => upper(&mut out),
            CellKind::LowerTriangle => lower(&mut out),
            CellKind::AdjoinedTriangles => {
                upper(&mut out);
                lower(&mut out);
            }
        }
        if !kind.is_square() {
            writeln!(out, r#"  <line x1="{x}" y1="{y}" x2="{x1}" y2="{y1}" stroke="black"/>"#).unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

fn label(out: &mut String, x: usize, y: usize, text: &str) {
    writeln!(
        out,
        r#"  <text x="{x}" y="{y}" font-size="12" text-anchor="middle" dominant-baseline="central">{text}</text>"#
    )
    .unwrap();
}
