//! Alternating sign matrices: validation, symmetry classes, boundary statistics
//! and the six-vertex vertex types.

mod perverse;
mod stats;
mod symmetry;
mod vertex;

pub use perverse::{PerverseAsm, STAR};
pub use stats::{statistic, BoundaryStat};
pub use symmetry::{has_symmetry, SymmetryClass};
pub use vertex::{vertex_type, VertexType};

use std::fmt;

use crate::{Error, Result};

/// A validated alternating sign matrix, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        Self::from_flat(n, rows.into_iter().flatten().collect())
    }

    pub fn from_flat(n: usize, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidMatrix(format!("expected {} entries", n * n)));
        }
        if let Some(v) = entries.iter().find(|v| !(-1..=1).contains(*v)) {
            return Err(Error::InvalidMatrix(format!("entry {v} outside {{-1,0,1}}")));
        }
        check_lines(n, n, |i, j| entries[i * n + j], |_| 1, |_| 1)?;
        Ok(Asm { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n * n).map(|k| (k / n == k % n) as i8).collect();
        Asm { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry at 0-based (i, j).
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.n).map(<[i8]>::to_vec).collect()
    }

    pub fn from_text(s: &str) -> Result<Self> {
        Self::new(parse_rows(s, false)?)
    }

    pub fn to_text(&self) -> String {
        format_rows(self.entries.chunks(self.n))
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Checks that partial sums along every row and column stay in {0,1} and end at
/// the given totals. Rows read through `row_val`, columns through `col_val` of the
/// same accessor, which lets a cell read differently in the two directions.
pub(crate) fn check_lines(
    rows: usize,
    cols: usize,
    cell: impl Fn(usize, usize) -> i8,
    row_total: impl Fn(usize) -> i8,
    col_total: impl Fn(usize) -> i8,
) -> Result<()> {
    check_lines_split(rows, cols, &cell, &cell, row_total, col_total)
}

pub(crate) fn check_lines_split(
    rows: usize,
    cols: usize,
    row_val: &dyn Fn(usize, usize) -> i8,
    col_val: &dyn Fn(usize, usize) -> i8,
    row_total: impl Fn(usize) -> i8,
    col_total: impl Fn(usize) -> i8,
) -> Result<()> {
    for i in 0..rows {
        let mut s = 0i8;
        for j in 0..cols {
            s += row_val(i, j);
            if !(0..=1).contains(&s) {
                return Err(Error::InvalidMatrix(format!("row {} breaks alternation at column {}", i + 1, j + 1)));
            }
        }
        if s != row_total(i) {
            return Err(Error::InvalidMatrix(format!("row {} sums to {s}", i + 1)));
        }
    }
    for j in 0..cols {
        let mut s = 0i8;
        for i in 0..rows {
            s += col_val(i, j);
            if !(0..=1).contains(&s) {
                return Err(Error::InvalidMatrix(format!("column {} breaks alternation at row {}", j + 1, i + 1)));
            }
        }
        if s != col_total(j) {
            return Err(Error::InvalidMatrix(format!("column {} sums to {s}", j + 1)));
        }
    }
    Ok(())
}

pub(crate) fn parse_rows(s: &str, allow_star: bool) -> Result<Vec<Vec<i8>>> {
    s.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            line.split_whitespace()
                .map(|t| match t {
                    "1" => Ok(1),
                    "0" => Ok(0),
                    "-1" => Ok(-1),
                    "*" if allow_star => Ok(STAR),
                    _ => Err(Error::Parse(format!("bad entry {t:?}"))),
                })
                .collect()
        })
        .collect()
}

pub(crate) fn format_rows<'a>(rows: impl Iterator<Item = &'a [i8]>) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<&str> = row
            .iter()
            .map(|&v| match v {
                1 => "1",
                0 => "0",
                -1 => "-1",
                _ => "*",
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
