//! Executable checks of the refined-enumeration identities. Each check builds
//! its two sides from independent sources and compares them exactly.

mod check;
mod common;
mod genfun;
mod quarter;
mod reconcile;
mod schur;
mod vhp;
mod vs;

pub use check::{first_difference, IdentityCheck, Status, Witness};
pub use common::set_jobs;
pub use genfun::{check_oo, check_vh_4n1, check_vh_4n3, check_vos};
pub use quarter::{check_qqt, check_qt};
pub use reconcile::{
    check_ht_reconciliation, check_q_reconciliation, ht_reconciliation, q_reconciliation, ReconcileEntry,
    Reconciliation,
};
pub use schur::{
    check_schur_remarks, complete_homogeneous, schur_at_square, schur_jacobi_trudi, schur_tableaux, PartitionShape,
};
pub use vhp::check_vhp;
pub use vs::{check_problem2, check_vsasm};

use crate::six_vertex::{formula_vs_state_sum, refined_link_dwbc, refined_link_uturn, FormulaCheck};
use crate::{Error, Result};

/// Families accepted by `run_family`, in report order.
pub const FAMILIES: &[&str] = &[
    "vsasm",
    "problem2",
    "vh-4n+3",
    "vh-4n+1",
    "vhp",
    "oo",
    "vos",
    "qt",
    "qqt",
    "ht-even-closed-form",
    "q-closed-form",
    "schur-displays",
    "z-dwbc",
    "z-uturn",
    "z-uuturn",
    "z-offdiagonal",
    "z-halfturn-even",
    "dwbc-refined-link",
    "uturn-refined-link",
];

/// Parameters shared by every family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Largest matrix order any check may enumerate.
    pub max_order: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { max_order: 11, seed: 7, jobs: 1 }
    }
}

/// Sizes of a family that fit under the order ceiling, as (n, runner input).
fn sizes(family: &str, max: usize) -> Vec<usize> {
    let upto = |f: &dyn Fn(usize) -> usize, cap: usize| (1..=cap).take_while(|&n| f(n) <= max).collect::<Vec<_>>();
    match family {
        "vsasm" => upto(&|n| 2 * n + 1, 6),
        "problem2" => upto(&|n| 2 * n + 1, 5),
        "vh-4n+3" => upto(&|n| 4 * n + 3, usize::MAX),
        "vh-4n+1" => upto(&|n| 4 * n + 1, usize::MAX),
        "vhp" => upto(&|n| 4 * n + 2, 2),
        "oo" => upto(&|n| 4 * n + 1, usize::MAX),
        "vos" => upto(&|n| 8 * n + 3, usize::MAX),
        "qt" => (3..=max).filter(|o| o % 4 != 2).collect(),
        "qqt" => upto(&|n| 4 * n + 2, usize::MAX),
        "ht-even-closed-form" => vec![max.clamp(4, 8)],
        "q-closed-form" => vec![3],
        "schur-displays" => upto(&|n| 4 * n + 3, 2),
        "z-dwbc" => vec![1, 2, 3],
        "z-uturn" => vec![1, 2],
        "z-uuturn" => vec![1],
        "z-offdiagonal" => vec![1, 2],
        "z-halfturn-even" => vec![1, 2],
        "dwbc-refined-link" => vec![1, 2, 3, 4],
        "uturn-refined-link" => vec![1, 2, 3],
        _ => vec![],
    }
}

fn run_one(family: &str, n: usize, opts: &RunOptions) -> Result<IdentityCheck> {
    let formula = |w| formula_vs_state_sum(w, n, opts.seed, 5);
    match family {
        "vsasm" => check_vsasm(n),
        "problem2" => check_problem2(n),
        "vh-4n+3" => check_vh_4n3(n),
        "vh-4n+1" => check_vh_4n1(n),
        "vhp" => check_vhp(n),
        "oo" => check_oo(n),
        "vos" => check_vos(n, opts.max_order),
        "qt" => check_qt(n),
        "qqt" => check_qqt(n),
        "ht-even-closed-form" => check_ht_reconciliation(n),
        "q-closed-form" => check_q_reconciliation(n),
        "schur-displays" => check_schur_remarks(n, opts.seed),
        "z-dwbc" => formula(FormulaCheck::Dwbc),
        "z-uturn" => formula(FormulaCheck::UTurn),
        "z-uuturn" => formula(FormulaCheck::UUTurn).map(IdentityCheck::non_gating),
        "z-offdiagonal" => formula(FormulaCheck::OffDiagonal),
        "z-halfturn-even" => formula(FormulaCheck::HalfTurnEven),
        "dwbc-refined-link" => refined_link_dwbc(n),
        "uturn-refined-link" => refined_link_uturn(n),
        _ => Err(Error::Parse(format!("unknown identity {family:?}"))),
    }
}

/// Every size of one family under the options' order ceiling. For "qt" the
/// sizes are the orders themselves.
pub fn run_family(family: &str, opts: &RunOptions) -> Result<Vec<IdentityCheck>> {
    if !FAMILIES.contains(&family) {
        return Err(Error::Parse(format!("unknown identity {family:?}")));
    }
    set_jobs(opts.jobs);
    sizes(family, opts.max_order).into_iter().map(|n| run_one(family, n, opts)).collect()
}

/// All families, in a fixed order.
pub fn run_all(opts: &RunOptions) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    for f in FAMILIES {
        out.extend(run_family(f, opts)?);
    }
    Ok(out)
}
