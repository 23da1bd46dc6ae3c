use super::grid::{GridSpec, Rule};
use crate::asm::{BoundaryStat, SymmetryClass};
use crate::{Error, Result};

/// Search grid for a square symmetry class, one free cell per orbit.
pub(crate) fn class_spec(class: SymmetryClass, order: usize) -> Result<GridSpec> {
    if !class.admits_order(order) || class == SymmetryClass::VHP {
        return Err(Error::Incompatible { class: class.to_string(), order });
    }
    let n = order;
    let m = n - 1;
    let base = GridSpec::square(n);
    let centre = n / 2;
    let v = |i: usize, j: usize| (i, m - j);
    let h = |i: usize, j: usize| (m - i, j);
    let t = |i: usize, j: usize| (j, i);
    let at = |i: usize, j: usize| (m - j, m - i);
    let ht = |i: usize, j: usize| (m - i, m - j);
    let ro = |i: usize, j: usize| (j, m - i);
    let diagonal: Vec<(usize, usize)> = (0..n).filter(|&i| 2 * i != m).map(|i| (i, i)).collect();
    let antidiagonal: Vec<(usize, usize)> = (0..n).filter(|&i| 2 * i != m).map(|i| (i, m - i)).collect();
    let spec = match class {
        SymmetryClass::Plain => base,
        SymmetryClass::VS => base.with_orbits(&[&v], &[]),
        SymmetryClass::VHS => base.with_orbits(&[&v, &h], &[]),
        SymmetryClass::HTS => base.with_orbits(&[&ht], &[]),
        SymmetryClass::QTS => base.with_orbits(&[&ro], &[]),
        SymmetryClass::QQTS => {
            let (lo, hi) = (centre - 1, centre);
            let block = move |i: usize, j: usize| (lo..=hi).contains(&i) && (lo..=hi).contains(&j);
            let ro2 = move |i: usize, j: usize| if block(i, j) { (i, j) } else { (j, m - i) };
            base.with_orbits(&[&ro2], &[(lo, hi), (hi, lo)])
        }
        SymmetryClass::OS => base.with_orbits(&[&t], &diagonal),
        SymmetryClass::OOS => {
            let zeros: Vec<_> = diagonal.iter().chain(&antidiagonal).copied().collect();
            base.with_orbits(&[&t, &at], &zeros)
        }
        SymmetryClass::VOS => base.with_orbits(&[&t, &v], &diagonal),
        SymmetryClass::VHP => unreachable!("handled above"),
    };
    Ok(spec)
}

/// The (2n+1)×(2n+1) reduced block of a perverse matrix: rows 1..=2n+1 and
/// columns 2..=2n+2 of the full (4n+1)×(4n+3) matrix. The dropped first column
/// holds a single 1 in the middle row, so that row starts with partial sum 1. The
/// last column (the central column) reads 1, −1, …, −1 and the last row (the
/// central row) reads −1, 1, …, 1, both ending in the starred cell.
pub(crate) fn perverse_reduced_spec(n: usize) -> GridSpec {
    let m = 2 * n + 1;
    let last = m - 1;
    let mut spec = GridSpec::square(m);
    let alt = |k: usize| if k.is_multiple_of(2) { 1i8 } else { -1 };
    for i in 0..last {
        spec.rules[i * m + last] = Rule::Fixed(alt(i), alt(i));
        spec.rules[last * m + i] = Rule::Fixed(-alt(i), -alt(i));
    }
    spec.rules[last * m + last] = Rule::Fixed(-1, 1);
    // A line of the full matrix sums to 1 = 2s + e, where s is the sum of the half
    // before the centre and e the central entry; the reduced line must end at s + e.
    let half_target = |e: i8| if e == 1 { 1 } else { 0 };
    for k in 0..last {
        spec.row_target[k] = half_target(alt(k));
        spec.col_target[k] = half_target(-alt(k));
    }
    spec.row_init[last] = 1;
    spec.row_target[last] = 0;
    spec.col_target[last] = 1;
    spec
}

/// The full (4n+1)×(4n+3) perverse grid with vertical and horizontal orbits; the
/// slow cross-check for the reduced search.
pub(crate) fn perverse_full_spec(n: usize) -> GridSpec {
    let (rows, cols) = (4 * n + 1, 4 * n + 3);
    let mut base = GridSpec::square(rows);
    base.cols = cols;
    base.rules = vec![Rule::Free; rows * cols];
    base.col_init = vec![0; cols];
    base.col_target = vec![1; cols];
    let v = move |i: usize, j: usize| (i, cols - 1 - j);
    let h = move |i: usize, j: usize| (rows - 1 - i, j);
    let mut spec = base.with_orbits(&[&v, &h], &[]);
    spec.rules[2 * n * cols + 2 * n + 1] = Rule::Fixed(-1, 1);
    spec
}

pub(crate) type StatFn = Box<dyn Fn(&[i8]) -> usize + Sync>;

/// Extracts a 1-based statistic from a square grid of order `n`.
pub(crate) fn square_stat(n: usize, stat: BoundaryStat) -> Result<StatFn> {
    if n < 2 && matches!(stat, BoundaryStat::SecondRowFirstOne | BoundaryStat::SecondColFirstOne) {
        return Err(Error::UndefinedStatistic(format!("{stat} at order {n}")));
    }
    let f = move |g: &[i8]| -> usize {
        let line = |get: &dyn Fn(usize) -> i8| BoundaryStat::first_one(n, get).expect("every ASM line holds a 1");
        match stat {
            BoundaryStat::FirstRowOne => line(&|j| g[j]),
            BoundaryStat::LastRowOne => line(&|j| g[(n - 1) * n + j]),
            BoundaryStat::FirstColOne => line(&|i| g[i * n]),
            BoundaryStat::SecondRowFirstOne => line(&|j| g[n + j]),
            BoundaryStat::SecondColFirstOne => line(&|i| g[i * n + 1]),
        }
    };
    Ok(Box::new(f))
}

/// Statistic on a perverse matrix, read from its reduced block (full coordinates).
pub(crate) fn perverse_stat(n: usize, stat: BoundaryStat) -> Result<StatFn> {
    let m = 2 * n + 1;
    match stat {
        BoundaryStat::SecondRowFirstOne => {
            Ok(Box::new(move |g: &[i8]| BoundaryStat::first_one(m, |j| g[m + j]).expect("second row holds a 1") + 1))
        }
        BoundaryStat::SecondColFirstOne => {
            Ok(Box::new(move |g: &[i8]| BoundaryStat::first_one(m, |i| g[i * m]).expect("second column holds a 1")))
        }
        _ => Err(Error::UndefinedStatistic(format!("{stat} on perverse matrices"))),
    }
}

/// The same statistics read from the full perverse grid.
pub(crate) fn perverse_full_stat(n: usize, stat: BoundaryStat) -> Result<StatFn> {
    let (rows, cols) = (4 * n + 1, 4 * n + 3);
    match stat {
        BoundaryStat::SecondRowFirstOne => {
            Ok(Box::new(move |g: &[i8]| BoundaryStat::first_one(cols, |j| g[cols + j]).expect("second row holds a 1")))
        }
        BoundaryStat::SecondColFirstOne => Ok(Box::new(move |g: &[i8]| {
            BoundaryStat::first_one(rows, |i| g[i * cols + 1]).expect("second column holds a 1")
        })),
        _ => Err(Error::UndefinedStatistic(format!("{stat} on perverse matrices"))),
    }
}
