use std::fmt;

use super::{check_lines_split, format_rows, parse_rows};
use crate::{Error, Result};

/// Marker for the central cell of a perverse matrix.
pub const STAR: i8 = 2;

/// Value of the central cell when reading along its row.
const STAR_IN_ROW: i8 = -1;
/// Value of the central cell when reading along its column.
const STAR_IN_COL: i8 = 1;

/// A (4n+1)×(4n+3) matrix with the symmetries of a vertically and horizontally
/// symmetric ASM, except that the central cell reads −1 along its row and +1 along
/// its column. That orientation is the one under which the published 9×11 example
/// is valid; the mirrored convention describes the same objects.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PerverseAsm {
    n: usize,
    entries: Vec<i8>,
}

impl PerverseAsm {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let h = rows.len();
        if h % 4 != 1 {
            return Err(Error::InvalidMatrix(format!("{h} rows is not of the form 4n+1")));
        }
        let n = h / 4;
        if n == 0 {
            return Err(Error::InvalidMatrix("no perverse matrix has n = 0".into()));
        }
        let w = 4 * n + 3;
        if rows.iter().any(|r| r.len() != w) {
            return Err(Error::InvalidMatrix(format!("rows must have {w} entries")));
        }
        let entries: Vec<i8> = rows.into_iter().flatten().collect();
        let (ci, cj) = (2 * n, 2 * n + 1);
        for (k, &v) in entries.iter().enumerate() {
            let centre = k == ci * w + cj;
            if centre != (v == STAR) {
                return Err(Error::InvalidMatrix("exactly the central cell must be *".into()));
            }
            if !centre && !(-1..=1).contains(&v) {
                return Err(Error::InvalidMatrix(format!("entry {v} outside {{-1,0,1}}")));
            }
        }
        let m = PerverseAsm { n, entries };
        for i in 0..h {
            for j in 0..w {
                if m.raw(i, j) != m.raw(i, w - 1 - j) || m.raw(i, j) != m.raw(h - 1 - i, j) {
                    return Err(Error::InvalidMatrix(format!("mirror symmetry fails at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        check_lines_split(h, w, &|i, j| m.row_value(i, j), &|i, j| m.col_value(i, j), |_| 1, |_| 1)?;
        Ok(m)
    }

    pub fn from_text(s: &str) -> Result<Self> {
        Self::new(parse_rows(s, true)?)
    }

    pub fn to_text(&self) -> String {
        format_rows(self.entries.chunks(self.width()))
    }

    /// The order parameter n; the matrix has order 4n+2.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn height(&self) -> usize {
        4 * self.n + 1
    }

    pub fn width(&self) -> usize {
        4 * self.n + 3
    }

    /// Stored symbol at 0-based (i, j); the centre holds [`STAR`].
    pub fn raw(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.width() + j]
    }

    pub fn row_value(&self, i: usize, j: usize) -> i8 {
        match self.raw(i, j) {
            STAR => STAR_IN_ROW,
            v => v,
        }
    }

    pub fn col_value(&self, i: usize, j: usize) -> i8 {
        match self.raw(i, j) {
            STAR => STAR_IN_COL,
            v => v,
        }
    }

    /// The (2n+1)×(2n+1) block of rows 1..=2n+1 and columns 2..=2n+2 that determines
    /// the matrix.
    pub fn reduced(&self) -> Vec<Vec<i8>> {
        let m = 2 * self.n + 1;
        (0..m).map(|i| (0..m).map(|j| self.raw(i, j + 1)).collect()).collect()
    }

    /// Rebuilds the full matrix from its reduced block; validates the result.
    pub fn from_reduced(reduced: &[Vec<i8>]) -> Result<Self> {
        let m = reduced.len();
        if m.is_multiple_of(2) || reduced.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidMatrix("reduced block must be (2n+1)x(2n+1)".into()));
        }
        let n = m / 2;
        let (h, w) = (4 * n + 1, 4 * n + 3);
        let mut rows = vec![vec![0i8; w]; h];
        for (i, row) in rows.iter_mut().enumerate() {
            let ri = if i <= 2 * n { i } else { h - 1 - i };
            for (j, cell) in row.iter_mut().enumerate() {
                let rj = if j <= 2 * n + 1 { j } else { w - 1 - j };
                *cell = if rj == 0 { (ri == 2 * n) as i8 } else { reduced[ri][rj - 1] };
            }
        }
        Self::new(rows)
    }
}

impl fmt::Display for PerverseAsm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
