use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Asm;
use crate::{Error, Result};

/// Boundary statistics, all reported 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundaryStat {
    /// Column of the 1 in the first row.
    FirstRowOne,
    /// Column of the 1 in the last row.
    LastRowOne,
    /// Row of the 1 in the first column.
    FirstColOne,
    /// Column of the leftmost 1 in the second row.
    SecondRowFirstOne,
    /// Row of the topmost 1 in the second column.
    SecondColFirstOne,
}

impl BoundaryStat {
    pub const ALL: [BoundaryStat; 5] = [
        BoundaryStat::FirstRowOne,
        BoundaryStat::LastRowOne,
        BoundaryStat::FirstColOne,
        BoundaryStat::SecondRowFirstOne,
        BoundaryStat::SecondColFirstOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundaryStat::FirstRowOne => "first-row",
            BoundaryStat::LastRowOne => "last-row",
            BoundaryStat::FirstColOne => "first-col",
            BoundaryStat::SecondRowFirstOne => "second-row",
            BoundaryStat::SecondColFirstOne => "second-col",
        }
    }

    /// Leftmost (or topmost) 1 on a line given by `get(k)`, k = 0..len.
    pub(crate) fn first_one(len: usize, get: impl Fn(usize) -> i8) -> Option<usize> {
        (0..len).find(|&k| get(k) == 1).map(|k| k + 1)
    }
}

impl fmt::Display for BoundaryStat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundaryStat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundaryStat::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown statistic {s:?}")))
    }
}

pub fn statistic(a: &Asm, s: BoundaryStat) -> Result<usize> {
    let n = a.order();
    let pos = match s {
        BoundaryStat::FirstRowOne => BoundaryStat::first_one(n, |j| a.get(0, j)),
        BoundaryStat::LastRowOne => BoundaryStat::first_one(n, |j| a.get(n - 1, j)),
        BoundaryStat::FirstColOne => BoundaryStat::first_one(n, |i| a.get(i, 0)),
        BoundaryStat::SecondRowFirstOne if n >= 2 => BoundaryStat::first_one(n, |j| a.get(1, j)),
        BoundaryStat::SecondColFirstOne if n >= 2 => BoundaryStat::first_one(n, |i| a.get(i, 1)),
        _ => None,
    };
    pos.ok_or_else(|| Error::UndefinedStatistic(format!("{s} on an order-{n} matrix")))
}
