//! Monotone grid classes.
//!
//! A matrix is written row by row, top row first, with rows separated by `;`
//! and cells by `,`. Cells are `1`/`+1` (increasing), `-1` (decreasing), `0`
//! (empty) or `.` (at most one point).
//!
//! A [`Gridding`] places dividers *between* entries: a column cut `c` sits
//! after the first `c` positions and a row cut `h` sits between values `h` and
//! `h + 1`, so no point ever lies on a line.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("empty matrix")]
    Empty,
    #[error("invalid cell `{0}`")]
    InvalidCell(String),
    #[error("row {row} has {found} cells, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix has no non-empty cell")]
    AllEmpty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellType {
    Empty,
    Increasing,
    Decreasing,
    SinglePoint,
}

impl CellType {
    /// Whether the points of a cell, listed left to right by value, are
    /// allowed in a cell of this type.
    pub fn accepts(self, values: &[usize]) -> bool {
        match self {
            CellType::Empty => values.is_empty(),
            CellType::SinglePoint => values.len() <= 1,
            CellType::Increasing => values.windows(2).all(|w| w[0] < w[1]),
            CellType::Decreasing => values.windows(2).all(|w| w[0] > w[1]),
        }
    }
}

impl fmt::Display for CellType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellType::Empty => "0",
            CellType::Increasing => "1",
            CellType::Decreasing => "-1",
            CellType::SinglePoint => ".",
        })
    }
}

impl FromStr for CellType {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1" | "+1" => Ok(CellType::Increasing),
            "-1" => Ok(CellType::Decreasing),
            "0" => Ok(CellType::Empty),
            "." => Ok(CellType::SinglePoint),
            other => Err(GridError::InvalidCell(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GriddingMatrix {
    rows: usize,
    cols: usize,
    // row-major, top row first
    cells: Vec<CellType>,
}

impl GriddingMatrix {
    pub fn new(cells: Vec<Vec<CellType>>) -> Result<Self, GridError> {
        let rows = cells.len();
        let cols = cells.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(GridError::Empty);
        }
        for (row, r) in cells.iter().enumerate() {
            if r.len() != cols {
                return Err(GridError::Ragged {
                    row,
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        let cells: Vec<CellType> = cells.into_iter().flatten().collect();
        if cells.iter().all(|&c| c == CellType::Empty) {
            return Err(GridError::AllEmpty);
        }
        Ok(GriddingMatrix { rows, cols, cells })
    }

    /// The single-column class with cells increasing, decreasing, increasing
    /// from top to bottom.
    pub fn class_d() -> Self {
        "1;-1;1".parse().expect("valid matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Cell at `row` (0 = top) and `col` (0 = left).
    pub fn cell(&self, row: usize, col: usize) -> CellType {
        self.cells[row * self.cols + col]
    }

    /// Searches every divider placement for one under which each cell's
    /// points satisfy its type.
    pub fn find_gridding(&self, p: &Permutation) -> Option<Gridding> {
        let n = p.len();
        let mut found = None;
        for_each_cut_set(self.cols - 1, n, &mut |col_cuts| {
            // Bucket points per column once, then try every row cut set.
            let columns = split_columns(p, col_cuts);
            for_each_cut_set(self.rows - 1, n, &mut |row_cuts| {
                if self.columns_fit(&columns, row_cuts) {
                    found = Some(Gridding {
                        col_cuts: col_cuts.to_vec(),
                        row_cuts: row_cuts.to_vec(),
                    });
                    true
                } else {
                    false
                }
            })
        });
        found
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.find_gridding(p).is_some()
    }

    /// Checks a concrete gridding independently of the search.
    pub fn validate(&self, p: &Permutation, gridding: &Gridding) -> bool {
        let n = p.len();
        let cuts_ok = |cuts: &[usize], k: usize| {
            cuts.len() == k && cuts.windows(2).all(|w| w[0] <= w[1]) && cuts.iter().all(|&c| c <= n)
        };
        if !cuts_ok(&gridding.col_cuts, self.cols - 1)
            || !cuts_ok(&gridding.row_cuts, self.rows - 1)
        {
            return false;
        }
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); self.rows * self.cols];
        for (i, &v) in p.values().iter().enumerate() {
            let (row, col) = gridding.cell_of(self.rows, i, v);
            cells[row * self.cols + col].push(v);
        }
        cells
            .iter()
            .zip(&self.cells)
            .all(|(values, cell)| cell.accepts(values))
    }

    fn columns_fit(&self, columns: &[Vec<usize>], row_cuts: &[usize]) -> bool {
        for (col, values) in columns.iter().enumerate() {
            // Within one column, split values into bands and check each band
            // left to right.
            let mut last: Vec<Option<usize>> = vec![None; self.rows];
            let mut count = vec![0usize; self.rows];
            for &v in values {
                let band = row_cuts.iter().filter(|&&h| h < v).count();
                let row = self.rows - 1 - band;
                let ok = match self.cell(row, col) {
                    CellType::Empty => false,
                    CellType::SinglePoint => count[row] == 0,
                    CellType::Increasing => last[row].is_none_or(|u| u < v),
                    CellType::Decreasing => last[row].is_none_or(|u| u > v),
                };
                if !ok {
                    return false;
                }
                last[row] = Some(v);
                count[row] += 1;
            }
        }
        true
    }
}

fn split_columns(p: &Permutation, col_cuts: &[usize]) -> Vec<Vec<usize>> {
    let mut columns = vec![Vec::new(); col_cuts.len() + 1];
    for (i, &v) in p.values().iter().enumerate() {
        let col = col_cuts.iter().filter(|&&c| c <= i).count();
        columns[col].push(v);
    }
    columns
}

// Calls `f` on every weakly increasing sequence of `k` cuts drawn from 0..=n
// until it returns true. Returns whether `f` ever did.
fn for_each_cut_set(k: usize, n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(cuts: &mut Vec<usize>, k: usize, n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cuts.len() == k {
            return f(cuts);
        }
        let from = cuts.last().copied().unwrap_or(0);
        for c in from..=n {
            cuts.push(c);
            if go(cuts, k, n, f) {
                return true;
            }
            cuts.pop();
        }
        false
    }
    go(&mut Vec::with_capacity(k), k, n, f)
}

impl fmt::Display for GriddingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..self.rows {
            if row > 0 {
                f.write_str("; ")?;
            }
            for col in 0..self.cols {
                if col > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.cell(row, col))?;
            }
        }
        Ok(())
    }
}

impl FromStr for GriddingMatrix {
    type Err = GridError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.trim().is_empty() {
            return Err(GridError::Empty);
        }
        let cells = text
            .split(';')
            .map(|row| {
                if row.trim().is_empty() {
                    return Err(GridError::Empty);
                }
                row.split(',')
                    .map(str::parse)
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        GriddingMatrix::new(cells)
    }
}

/// A divider assignment: `col_cuts` has `cols - 1` weakly increasing
/// position cuts, `row_cuts` has `rows - 1` weakly increasing value cuts
/// (bottom divider first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gridding {
    pub col_cuts: Vec<usize>,
    pub row_cuts: Vec<usize>,
}

impl Gridding {
    /// Matrix cell (row from top, column from left) holding the entry with
    /// value `value` at 0-based position `position`.
    pub fn cell_of(&self, rows: usize, position: usize, value: usize) -> (usize, usize) {
        let col = self.col_cuts.iter().filter(|&&c| c <= position).count();
        let band = self.row_cuts.iter().filter(|&&h| h < value).count();
        (rows - 1 - band, col)
    }
}

impl fmt::Display for Gridding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |cuts: &[usize]| {
            cuts.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "columns after [{}], rows above [{}]",
            join(&self.col_cuts),
            join(&self.row_cuts)
        )
    }
}
