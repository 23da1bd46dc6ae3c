//! Exhaustive generation of ASMs and of symmetry classes, tabulated by boundary
//! statistics.

mod classes;
mod grid;
mod table;

pub use grid::SearchState;
pub use table::{Provenance, RefinedTable};

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::arith::Integer;
use crate::asm::{has_symmetry, statistic, Asm, BoundaryStat, SymmetryClass};
use crate::{Error, Result};

/// Default worker count: the `ALTSIGN_JOBS` environment variable, else 1.
pub fn default_jobs() -> usize {
    std::env::var("ALTSIGN_JOBS").ok().and_then(|s| s.parse().ok()).filter(|&j| j > 0).unwrap_or(1)
}

/// Visits every ASM of order n once.
pub fn enumerate_asms(n: usize, mut visit: impl FnMut(&Asm)) {
    if n == 0 {
        return;
    }
    grid::search(&grid::GridSpec::square(n), |g| {
        visit(&Asm::from_flat(n, g.to_vec()).expect("search yields valid matrices"))
    });
}

/// Visits every matrix of a square class once, generated orbit by orbit.
pub fn enumerate_class(class: SymmetryClass, order: usize, mut visit: impl FnMut(&Asm)) -> Result<()> {
    let spec = classes::class_spec(class, order)?;
    grid::search(&spec, |g| visit(&Asm::from_flat(order, g.to_vec()).expect("search yields valid matrices")));
    Ok(())
}

/// Visits the reduced (2n+1)×(2n+1) block of every perverse matrix of order 4n+2.
/// There are none for n = 0: the fixed middle-row prefix does not exist.
pub fn enumerate_perverse(n: usize, mut visit: impl FnMut(&[Vec<i8>])) {
    if n == 0 {
        return;
    }
    let m = 2 * n + 1;
    grid::search(&classes::perverse_reduced_spec(n), |g| {
        let mut rows: Vec<Vec<i8>> = g.chunks(m).map(<[i8]>::to_vec).collect();
        rows[m - 1][m - 1] = crate::asm::STAR;
        visit(&rows)
    });
}

fn to_table(class: SymmetryClass, order: usize, stat: BoundaryStat, raw: BTreeMap<usize, u64>) -> RefinedTable {
    let mut t = RefinedTable::new(class, order, stat, Provenance::BruteForce);
    t.counts = raw.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect();
    t
}

/// Brute-force refined table using one worker per job.
pub fn refined_table_jobs(order: usize, class: SymmetryClass, stat: BoundaryStat, jobs: usize) -> Result<RefinedTable> {
    let raw = if class == SymmetryClass::VHP {
        if order % 4 != 2 {
            return Err(Error::Incompatible { class: class.to_string(), order });
        }
        let n = order / 4;
        if n == 0 {
            let _ = classes::perverse_stat(n, stat)?;
            BTreeMap::new()
        } else {
            let f = classes::perverse_stat(n, stat)?;
            grid::tabulate(&classes::perverse_reduced_spec(n), jobs, &*f)
        }
    } else {
        let spec = classes::class_spec(class, order)?;
        let f = classes::square_stat(order, stat)?;
        grid::tabulate(&spec, jobs, &*f)
    };
    Ok(to_table(class, order, stat, raw))
}

pub fn refined_table(order: usize, class: SymmetryClass, stat: BoundaryStat) -> Result<RefinedTable> {
    refined_table_jobs(order, class, stat, default_jobs())
}

pub fn count_total(order: usize, class: SymmetryClass) -> Result<Integer> {
    let stat = match class {
        SymmetryClass::VHP => BoundaryStat::SecondRowFirstOne,
        _ => BoundaryStat::FirstRowOne,
    };
    Ok(refined_table(order, class, stat)?.total())
}

/// Cross-check path: enumerate all ASMs of the order and keep the class members.
pub fn refined_table_filtered(order: usize, class: SymmetryClass, stat: BoundaryStat) -> Result<RefinedTable> {
    if !class.admits_order(order) || class == SymmetryClass::VHP {
        return Err(Error::Incompatible { class: class.to_string(), order });
    }
    let mut raw = BTreeMap::new();
    let mut err = None;
    enumerate_asms(order, |a| {
        if has_symmetry(a, class) {
            match statistic(a, stat) {
                Ok(s) => *raw.entry(s).or_insert(0u64) += 1,
                Err(e) => err = Some(e),
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(to_table(class, order, stat, raw))
}

/// Perverse table from the full (4n+1)×(4n+3) grid rather than the reduced block.
pub fn perverse_table_full_grid(n: usize, stat: BoundaryStat) -> Result<RefinedTable> {
    let f = classes::perverse_full_stat(n, stat)?;
    let raw = if n == 0 { BTreeMap::new() } else { grid::tabulate(&classes::perverse_full_spec(n), 1, &*f) };
    Ok(to_table(SymmetryClass::VHP, 4 * n + 2, stat, raw))
}
