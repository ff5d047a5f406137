//! Two-modular diagrams.
//!
//! A green part `2a+1` is drawn as an upper triangle on the diagonal followed
//! by `a` squares to its right; a blue part `2c+1` as a lower triangle on the
//! diagonal with `c` squares below it. Squares count 2, triangles count 1.
//! Even parts are not drawn.
//!
//! Greens are anchored so that the smallest green sits on the last diagonal
//! cell, and likewise for blues: with `s` greens, `t` blues and
//! `d = max(s, t)`, the `i`-th largest green sits at diagonal index
//! `d - s + i` and the `j`-th largest blue at `d - t + j`. Where a green and a
//! blue triangle land on the same diagonal cell they adjoin into a square.
//!
//! Grid indices are 1-based. Edits (strip removal and insertion) work on whole
//! grid lines and shift everything behind them; whether a cell is diagonal is
//! decided by its position after the edit, so a square pushed onto the
//! diagonal is read back as a green/blue triangle pair.

mod render;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Part;

pub use render::{render, Charset, RenderFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }

    fn index(self, orientation: Orientation) -> usize {
        match orientation {
            Orientation::Row => self.row,
            Orientation::Column => self.col,
        }
    }

    fn shifted(self, orientation: Orientation, delta: isize) -> Cell {
        let move_by = |i: usize| i.checked_add_signed(delta).expect("grid index stays positive");
        match orientation {
            Orientation::Row => Cell::new(move_by(self.row), self.col),
            Orientation::Column => Cell::new(self.row, move_by(self.col)),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellKind {
    Square,
    /// Green triangle, the half above the diagonal.
    UpperTriangle,
    /// Blue triangle, the half below the diagonal.
    LowerTriangle,
    /// A green and a blue triangle sharing a diagonal cell, diagonal still drawn.
    AdjoinedTriangles,
    /// Adjoined triangles with the diagonal line erased.
    MergedSquare,
}

impl CellKind {
    pub fn value(self) -> u64 {
        match self {
            CellKind::UpperTriangle | CellKind::LowerTriangle => 1,
            CellKind::Square | CellKind::AdjoinedTriangles | CellKind::MergedSquare => 2,
        }
    }

    pub fn is_square(self) -> bool {
        matches!(self, CellKind::Square | CellKind::MergedSquare)
    }

    pub fn is_lone_triangle(self) -> bool {
        matches!(self, CellKind::UpperTriangle | CellKind::LowerTriangle)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Row,
    Column,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StripAction {
    Removed,
    Inserted,
    FarEdgeInserted,
    None,
}

/// A located all-square row or column. `position` is 0 when no such line
/// exists (`length_l == 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StripReport {
    pub orientation: Orientation,
    pub length_l: usize,
    pub position: usize,
    pub action: StripAction,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModularDiagram {
    cells: BTreeMap<Cell, CellKind>,
    diagonal_length: usize,
}

impl ModularDiagram {
    pub fn empty() -> Self {
        Self::default()
    }

    fn from_cells(cells: BTreeMap<Cell, CellKind>) -> Self {
        let diagonal_length = cells.keys().filter(|c| c.is_diagonal()).map(|c| c.row).max().unwrap_or(0);
        ModularDiagram { cells, diagonal_length }
    }

    pub fn cells(&self) -> &BTreeMap<Cell, CellKind> {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Option<CellKind> {
        self.cells.get(&Cell::new(row, col)).copied()
    }

    /// Index of the last occupied diagonal cell.
    pub fn diagonal_length(&self) -> usize {
        self.diagonal_length
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.extent(Orientation::Row)
    }

    pub fn num_cols(&self) -> usize {
        self.extent(Orientation::Column)
    }

    fn extent(&self, orientation: Orientation) -> usize {
        self.cells.keys().map(|c| c.index(orientation)).max().unwrap_or(0)
    }

    pub fn total_value(&self) -> u64 {
        self.cells.values().map(|k| k.value()).sum()
    }

    pub fn lone_triangles(&self) -> usize {
        self.cells.values().filter(|k| k.is_lone_triangle()).count()
    }
}

fn check_odd_distinct(name: &str, parts: &[Part]) -> Result<()> {
    if let Some(p) = parts.iter().find(|&&p| p % 2 == 0) {
        return Err(Error::InvalidPartition(format!("{name} must all be odd, found {p}")));
    }
    if let Some(w) = parts.windows(2).find(|w| w[0] <= w[1]) {
        return Err(Error::InvalidPartition(format!(
            "{name} must be strictly decreasing, found {} before {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// Lays out green parts as rows and blue parts as columns around the diagonal.
pub fn build_diagram(greens: &[Part], blues: &[Part]) -> Result<ModularDiagram> {
    check_odd_distinct("greens", greens)?;
    check_odd_distinct("blues", blues)?;
    let (s, t) = (greens.len(), blues.len());
    let d = s.max(t);
    let mut cells = BTreeMap::new();
    for (i, &g) in greens.iter().enumerate() {
        let k = d - s + i + 1;
        cells.insert(Cell::new(k, k), CellKind::UpperTriangle);
        for col in k + 1..=k + (g as usize - 1) / 2 {
            cells.insert(Cell::new(k, col), CellKind::Square);
        }
    }
    for (j, &b) in blues.iter().enumerate() {
        let k = d - t + j + 1;
        cells
            .entry(Cell::new(k, k))
            .and_modify(|kind| *kind = CellKind::AdjoinedTriangles)
            .or_insert(CellKind::LowerTriangle);
        for row in k + 1..=k + (b as usize - 1) / 2 {
            cells.insert(Cell::new(row, k), CellKind::Square);
        }
    }
    Ok(ModularDiagram { cells, diagonal_length: d })
}

/// Erases the diagonal line wherever two triangles share a cell.
pub fn merge_adjoined(dia: &ModularDiagram) -> ModularDiagram {
    let cells = dia
        .cells
        .iter()
        .map(|(&cell, &kind)| match kind {
            CellKind::AdjoinedTriangles => (cell, CellKind::MergedSquare),
            other => (cell, other),
        })
        .collect();
    ModularDiagram { cells, diagonal_length: dia.diagonal_length }
}

/// Finds the longest row or column made only of squares. Ties go to the
/// topmost row / leftmost column.
pub fn longest_all_square_strip(dia: &ModularDiagram, orientation: Orientation) -> StripReport {
    let mut lines: BTreeMap<usize, (usize, bool)> = BTreeMap::new();
    for (cell, kind) in &dia.cells {
        let entry = lines.entry(cell.index(orientation)).or_insert((0, true));
        entry.0 += 1;
        entry.1 &= kind.is_square();
    }
    let mut best = (0, 0);
    for (&index, &(count, all_square)) in &lines {
        if all_square && count > best.0 {
            best = (count, index);
        }
    }
    StripReport { orientation, length_l: best.0, position: best.1, action: StripAction::None }
}

/// Deletes an all-square line and closes the gap.
pub fn remove_strip(dia: &ModularDiagram, orientation: Orientation, position: usize) -> Result<ModularDiagram> {
    let mut found = false;
    let mut cells = BTreeMap::new();
    for (&cell, &kind) in &dia.cells {
        let index = cell.index(orientation);
        if index == position {
            if !kind.is_square() {
                return Err(Error::MalformedDiagram {
                    cell,
                    reason: format!("{orientation:?} {position} is not all squares"),
                });
            }
            found = true;
        } else if index > position {
            cells.insert(cell.shifted(orientation, -1), kind);
        } else {
            cells.insert(cell, kind);
        }
    }
    if !found {
        let cell = match orientation {
            Orientation::Row => Cell::new(position, 1),
            Orientation::Column => Cell::new(1, position),
        };
        return Err(Error::MalformedDiagram { cell, reason: format!("{orientation:?} {position} is empty") });
    }
    Ok(ModularDiagram::from_cells(cells))
}

/// Inserts a line of `num_squares` squares at `position`, pushing existing
/// lines at or beyond it away by one. Columns are filled from row 1, rows
/// from column 1.
pub fn insert_strip(
    dia: &ModularDiagram,
    orientation: Orientation,
    position: usize,
    num_squares: usize,
) -> ModularDiagram {
    assert!(num_squares >= 1, "inserted strip must hold at least one square");
    assert!(position >= 1, "grid positions are 1-based");
    let mut cells: BTreeMap<Cell, CellKind> = dia
        .cells
        .iter()
        .map(
            |(&cell, &kind)| {
                if cell.index(orientation) >= position {
                    (cell.shifted(orientation, 1), kind)
                } else {
                    (cell, kind)
                }
            },
        )
        .collect();
    for i in 1..=num_squares {
        let cell = match orientation {
            Orientation::Row => Cell::new(position, i),
            Orientation::Column => Cell::new(i, position),
        };
        cells.insert(cell, CellKind::Square);
    }
    ModularDiagram::from_cells(cells)
}

/// First free line past the occupied grid: far right for columns, bottom for
/// rows.
pub fn far_edge(dia: &ModularDiagram, orientation: Orientation) -> usize {
    dia.extent(orientation) + 1
}

/// Redraws the diagonal and reads the green and blue parts back.
///
/// Any square (merged or not) on a diagonal cell becomes a green/blue pair.
/// The result is validated by rebuilding it and comparing cell by cell, so a
/// diagram that is not the canonical picture of some pair of color lists is
/// rejected with the first offending cell.
pub fn split_and_read(dia: &ModularDiagram) -> Result<(Vec<Part>, Vec<Part>)> {
    let mut normalized = BTreeMap::new();
    for (&cell, &kind) in &dia.cells {
        let kind = if cell.is_diagonal() {
            match kind {
                CellKind::UpperTriangle | CellKind::LowerTriangle => kind,
                _ => CellKind::MergedSquare,
            }
        } else if kind.is_square() {
            CellKind::Square
        } else {
            return Err(Error::MalformedDiagram { cell, reason: "triangle off the diagonal".into() });
        };
        normalized.insert(cell, kind);
    }

    let row_run = |k: usize| (k + 1..).take_while(|&c| normalized.contains_key(&Cell::new(k, c))).count();
    let col_run = |k: usize| (k + 1..).take_while(|&r| normalized.contains_key(&Cell::new(r, k))).count();

    let mut greens = Vec::new();
    let mut blues = Vec::new();
    // (row, last column) of each green row, (column, last row) of each blue column
    let mut green_reach = BTreeMap::new();
    let mut blue_reach = BTreeMap::new();
    for (&cell, &kind) in normalized.iter().filter(|(c, _)| c.is_diagonal()) {
        let k = cell.row;
        if kind != CellKind::LowerTriangle {
            let run = row_run(k);
            green_reach.insert(k, k + run);
            greens.push((cell, 1 + 2 * run as Part));
        }
        if kind != CellKind::UpperTriangle {
            let run = col_run(k);
            blue_reach.insert(k, k + run);
            blues.push((cell, 1 + 2 * run as Part));
        }
    }

    for &cell in normalized.keys().filter(|c| !c.is_diagonal()) {
        let consumed = if cell.col > cell.row {
            green_reach.get(&cell.row).is_some_and(|&last| cell.col <= last)
        } else {
            blue_reach.get(&cell.col).is_some_and(|&last| cell.row <= last)
        };
        if !consumed {
            let owner = if cell.col > cell.row { "green row" } else { "blue column" };
            return Err(Error::MalformedDiagram { cell, reason: format!("square not attached to a {owner}") });
        }
    }

    for (name, parts) in [("green", &greens), ("blue", &blues)] {
        if let Some(w) = parts.windows(2).find(|w| w[0].1 <= w[1].1) {
            return Err(Error::MalformedDiagram {
                cell: w[1].0,
                reason: format!("{name} parts not strictly decreasing ({} then {})", w[0].1, w[1].1),
            });
        }
    }
    let greens: Vec<Part> = greens.into_iter().map(|(_, p)| p).collect();
    let blues: Vec<Part> = blues.into_iter().map(|(_, p)| p).collect();

    let rebuilt = merge_adjoined(&build_diagram(&greens, &blues)?);
    if rebuilt.cells != normalized {
        let cell = rebuilt
            .cells
            .keys()
            .chain(normalized.keys())
            .copied()
            .filter(|c| rebuilt.cells.get(c) != normalized.get(c))
            .min()
            .expect("maps differ somewhere");
        return Err(Error::MalformedDiagram { cell, reason: "parts are not in canonical diagonal position".into() });
    }
    Ok((greens, blues))
}
