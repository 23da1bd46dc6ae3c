use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Mutex, OnceLock};

use crate::arith::{Cyclotomic, Integer, LaurentPoly, Rational, Ring, Var};
use crate::asm::{BoundaryStat, SymmetryClass};
use crate::closed_forms::{a_o, q_ni};
use crate::enumerate::{default_jobs, refined_table_jobs, RefinedTable};
use crate::Result;

pub(crate) type Zp = LaurentPoly<Cyclotomic>;

static JOBS: AtomicUsize = AtomicUsize::new(0);

/// Worker count used for the brute-force tables behind every check; 0 restores
/// the environment default.
pub fn set_jobs(jobs: usize) {
    JOBS.store(jobs, Ordering::Relaxed);
}

type Key = (SymmetryClass, usize, BoundaryStat);

/// Brute-force table, memoized for the life of the process. Enumeration is
/// deterministic, so sharing a table between checks cannot change a result.
pub(crate) fn brute(class: SymmetryClass, order: usize, stat: BoundaryStat) -> Result<RefinedTable> {
    static CACHE: OnceLock<Mutex<HashMap<Key, RefinedTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("table cache poisoned").get(&(class, order, stat)) {
        return Ok(t.clone());
    }
    let jobs = match JOBS.load(Ordering::Relaxed) {
        0 => default_jobs(),
        j => j,
    };
    let t = refined_table_jobs(order, class, stat, jobs)?;
    cache.lock().expect("table cache poisoned").insert((class, order, stat), t.clone());
    Ok(t)
}

pub(crate) fn zp(e: i64) -> Zp {
    Zp::monomial(Var::Z, Cyclotomic::from(1), e)
}

pub(crate) fn zc(c: impl Into<Cyclotomic>) -> Zp {
    Zp::constant(Var::Z, c.into())
}

pub(crate) fn count(t: &RefinedTable, i: i64) -> Zp {
    zc(t.get(i))
}

/// Σ_i f(i) over an inclusive range of positions.
pub(crate) fn sum_over(range: std::ops::RangeInclusive<i64>, f: impl Fn(i64) -> Zp) -> Zp {
    range.fold(Zp::zero_in(Var::Z), |acc, i| acc + f(i))
}

/// Σ_{i=2}^{2n} A_O(2n, i) z^{−i} from the closed form.
pub(crate) fn a_o_sum(n: usize) -> Result<Zp> {
    let mut acc = Zp::zero_in(Var::Z);
    for i in 2..=2 * n as i64 {
        acc = acc + zc(a_o(2 * n, i)?) * zp(-i);
    }
    Ok(acc)
}

/// Index triangle of the double sum over Q_{m,i}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Triangle {
    /// 1 ≤ j ≤ i ≤ m+1
    JUpToI,
    /// 1 ≤ i ≤ j ≤ m+1
    IUpToJ,
}

impl Triangle {
    pub(crate) fn label(self) -> &'static str {
        match self {
            Triangle::JUpToI => "j ≤ i",
            Triangle::IUpToJ => "i ≤ j",
        }
    }
}

/// 3^{−m²}(−q)^{−m} Σ Q_{m,i}(zq−1)^{m+i−2j+1}(q−z)^{m−i+2j−1} over the given
/// triangle, multiplied by (zq−1)^d where d is the returned exponent, the
/// smallest that keeps every power of (zq−1) non-negative.
pub(crate) fn q_block(m: usize, tri: Triangle) -> Result<(Zp, u32)> {
    let q = Cyclotomic::q();
    let zq1 = zc(q.clone()) * zp(1) - zc(1);
    let qz = zc(q.clone()) - zp(1);
    let top = m as i64 + 1;
    let pairs: Vec<(i64, i64)> = (1..=top)
        .flat_map(|i| (1..=top).map(move |j| (i, j)))
        .filter(|&(i, j)| match tri {
            Triangle::JUpToI => j <= i,
            Triangle::IUpToJ => i <= j,
        })
        .collect();
    let m = m as i64;
    let d = pairs.iter().map(|&(i, j)| -(m + i - 2 * j + 1)).max().unwrap_or(0).max(0);
    let mut acc = Zp::zero_in(Var::Z);
    for (i, j) in pairs {
        let a = m + i - 2 * j + 1 + d;
        let b = m - i + 2 * j - 1;
        debug_assert!(b >= 0);
        acc = acc + zc(q_ni(m as usize, i as usize)?) * zq1.powu(a as u32) * qz.powu(b as u32);
    }
    let scale = (-q).powi(-m).expect("q is a unit")
        * Cyclotomic::from(Rational::new(Integer::from(1), Integer::from(3).pow((m * m) as u32)));
    Ok((acc.scale(&scale), d as u32))
}

/// (zq − 1)^d.
pub(crate) fn zq1_pow(d: u32) -> Zp {
    (zc(Cyclotomic::q()) * zp(1) - zc(1)).powu(d)
}
