use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Asm;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymmetryClass {
    /// No symmetry imposed.
    Plain,
    /// Invariant under reflection in the vertical axis.
    VS,
    /// Vertical and horizontal reflections.
    VHS,
    /// Half-turn rotation.
    HTS,
    /// Quarter-turn rotation.
    QTS,
    /// Order 4n+2: quarter-turn symmetric outside the central 2×2 block, whose
    /// off-diagonal cells vanish.
    QQTS,
    /// Symmetric with a null diagonal (even order).
    OS,
    /// Odd order, symmetric under both diagonal reflections, zero on both
    /// diagonals except the centre.
    OOS,
    /// Vertical symmetry plus the off-diagonal condition (odd order).
    VOS,
    /// Vertically and horizontally perverse, order 4n+2; see `PerverseAsm`.
    VHP,
}

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 10] = [
        SymmetryClass::Plain,
        SymmetryClass::VS,
        SymmetryClass::VHS,
        SymmetryClass::HTS,
        SymmetryClass::QTS,
        SymmetryClass::QQTS,
        SymmetryClass::OS,
        SymmetryClass::OOS,
        SymmetryClass::VOS,
        SymmetryClass::VHP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SymmetryClass::Plain => "plain",
            SymmetryClass::VS => "vs",
            SymmetryClass::VHS => "vhs",
            SymmetryClass::HTS => "hts",
            SymmetryClass::QTS => "qts",
            SymmetryClass::QQTS => "qqts",
            SymmetryClass::OS => "os",
            SymmetryClass::OOS => "oos",
            SymmetryClass::VOS => "vos",
            SymmetryClass::VHP => "vhp",
        }
    }

    /// Whether the class can contain matrices of this order.
    pub fn admits_order(self, order: usize) -> bool {
        match self {
            SymmetryClass::Plain | SymmetryClass::HTS => order >= 1,
            SymmetryClass::VS | SymmetryClass::VHS | SymmetryClass::OOS | SymmetryClass::VOS => order % 2 == 1,
            SymmetryClass::QTS => order >= 1 && order % 4 != 2,
            SymmetryClass::QQTS | SymmetryClass::VHP => order % 4 == 2,
            SymmetryClass::OS => order >= 2 && order.is_multiple_of(2),
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        SymmetryClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown class {s:?}")))
    }
}

/// Whole-matrix membership test. Classes whose orders never match return false.
/// `VHP` objects are not square matrices, so the answer for `VHP` is always false.
pub fn has_symmetry(a: &Asm, c: SymmetryClass) -> bool {
    let n = a.order();
    if !c.admits_order(n) {
        return false;
    }
    let m = n - 1;
    let all = |p: &dyn Fn(usize, usize) -> bool| (0..n).all(|i| (0..n).all(|j| p(i, j)));
    let vertical = || all(&|i, j| a.get(i, j) == a.get(i, m - j));
    let horizontal = || all(&|i, j| a.get(i, j) == a.get(m - i, j));
    let transpose = || all(&|i, j| a.get(i, j) == a.get(j, i));
    let anti = || all(&|i, j| a.get(i, j) == a.get(m - j, m - i));
    let rotated = |i: usize, j: usize| a.get(i, j) == a.get(m - j, i);
    let centre = n / 2;
    match c {
        SymmetryClass::Plain => true,
        SymmetryClass::VS => vertical(),
        SymmetryClass::VHS => vertical() && horizontal(),
        SymmetryClass::HTS => all(&|i, j| a.get(i, j) == a.get(m - i, m - j)),
        SymmetryClass::QTS => {
            all(&|i, j| rotated(i, j))
                && (n.is_multiple_of(2) || a.get(centre, centre) == if (n / 2).is_multiple_of(2) { 1 } else { -1 })
        }
        SymmetryClass::QQTS => {
            let (lo, hi) = (centre - 1, centre);
            let in_block = |i: usize, j: usize| (lo..=hi).contains(&i) && (lo..=hi).contains(&j);
            all(&|i, j| in_block(i, j) || rotated(i, j)) && a.get(lo, hi) == 0 && a.get(hi, lo) == 0
        }
        SymmetryClass::OS => transpose() && (0..n).all(|i| a.get(i, i) == 0),
        SymmetryClass::OOS => {
            transpose()
                && anti()
                && (0..n).all(|i| i == centre || (a.get(i, i) == 0 && a.get(i, m - i) == 0))
                && a.get(centre, centre) == if (n / 2).is_multiple_of(2) { 1 } else { -1 }
        }
        SymmetryClass::VOS => vertical() && transpose() && (0..n).all(|i| i == centre || a.get(i, i) == 0),
        SymmetryClass::VHP => false,
    }
}
