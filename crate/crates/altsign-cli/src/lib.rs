//! Argument handling and dispatch for the `altsign` binary. Output goes to a
//! caller-supplied writer so the whole front end can be driven from tests.

use std::io::Write;

use altsign::asm::{BoundaryStat, SymmetryClass};
use altsign::closed_forms::closed_form_table;
use altsign::enumerate::{refined_table_jobs, RefinedTable};
use altsign::identities::{
    check_ht_reconciliation, check_q_reconciliation, ht_reconciliation, q_reconciliation, run_all, run_family,
    IdentityCheck, RunOptions, FAMILIES,
};
use altsign::six_vertex::{formula_vs_state_sum, refined_link_dwbc, refined_link_uturn, FormulaCheck};
use altsign::tilings::{brute_paths, genfun_qh, q_ni_det, q_ni_expand};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "altsign", version, about = "Alternating sign matrices: counts, refined tables and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Worker threads for enumeration.
    #[arg(long, env = "ALTSIGN_JOBS", default_value_t = 1)]
    jobs: usize,
}

#[derive(Args, Debug)]
struct ClassOrder {
    #[arg(long, value_parser = parse_class)]
    class: SymmetryClass,
    /// Matrix order.
    #[arg(long, visible_alias = "n")]
    order: usize,
    /// Boundary statistic; defaults to second-row for vs and vhp, first-row otherwise.
    #[arg(long, value_parser = parse_stat)]
    stat: Option<BoundaryStat>,
}

impl ClassOrder {
    fn stat(&self) -> BoundaryStat {
        self.stat.unwrap_or(match self.class {
            SymmetryClass::VS | SymmetryClass::VHP => BoundaryStat::SecondRowFirstOne,
            _ => BoundaryStat::FirstRowOne,
        })
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of matrices of a class and order, by enumeration.
    Count {
        #[command(flatten)]
        target: ClassOrder,
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force refined table.
    Refine {
        #[command(flatten)]
        target: ClassOrder,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form refined table, where one exists.
    Formula {
        #[command(flatten)]
        target: ClassOrder,
        #[command(flatten)]
        common: Common,
    },
    /// Run identity checks.
    Verify {
        /// A family name or "all".
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long, default_value_t = 11)]
        max_order: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Tiling counts of the quartered hexagon by four routes.
    Tilings {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Closed partition-function formula against its state sum.
    Partition {
        /// dwbc, uturn, uuturn, offdiagonal or halfturn-even.
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Check the refined-count specialization with x₁ symbolic instead
        /// (dwbc and uturn only).
        #[arg(long)]
        symbolic_x: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Entry-wise reconciliation of closed forms whose printed reading
    /// disagrees with an independent count.
    Report {
        /// Largest even order for the half-turn table.
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        /// Largest n for the tiling-count table.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_class(s: &str) -> Result<SymmetryClass, String> {
    s.parse().map_err(|e: altsign::Error| e.to_string())
}

fn parse_stat(s: &str) -> Result<BoundaryStat, String> {
    s.parse().map_err(|e: altsign::Error| e.to_string())
}

const MODELS: [FormulaCheck; 5] = [
    FormulaCheck::Dwbc,
    FormulaCheck::UTurn,
    FormulaCheck::UUTurn,
    FormulaCheck::OffDiagonal,
    FormulaCheck::HalfTurnEven,
];

type Out<'a> = &'a mut dyn Write;

/// Exit status: 0 on success, 1 if a gating identity failed, 2 on usage or
/// runtime errors.
pub fn run<I, T>(argv: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

type AnyResult<T> = Result<T, Box<dyn std::error::Error>>;

fn dispatch(cmd: Command, out: Out) -> AnyResult<i32> {
    match cmd {
        Command::Count { target, common } => {
            let t = refined_table_jobs(target.order, target.class, target.stat(), common.jobs)?;
            match common.format {
                Format::Json => {
                    let v =
                        json!({"class": target.class.name(), "order": target.order, "count": t.total().to_string()});
                    writeln!(out, "{v}")?
                }
                Format::Csv => writeln!(out, "class,order,count\n{},{},{}", target.class, target.order, t.total())?,
                Format::Table => writeln!(out, "{}", t.total())?,
            }
        }
        Command::Refine { target, common } => {
            let t = refined_table_jobs(target.order, target.class, target.stat(), common.jobs)?;
            print_table(&t, common.format, out)?;
        }
        Command::Formula { target, common } => {
            let t = closed_form_table(target.class, target.order, target.stat())?;
            print_table(&t, common.format, out)?;
        }
        Command::Verify { identity, max_order, seed, common } => {
            let opts = RunOptions { max_order, seed, jobs: common.jobs };
            let checks = if identity == "all" {
                run_all(&opts)?
            } else if FAMILIES.contains(&identity.as_str()) {
                run_family(&identity, &opts)?
            } else {
                return Err(format!(
                    "unknown identity {identity:?}; expected \"all\" or one of: {}",
                    FAMILIES.join(", ")
                )
                .into());
            };
            print_checks(&checks, common.format, out)?;
            return Ok(i32::from(checks.iter().any(IdentityCheck::blocking_failure)));
        }
        Command::Tilings { n, common } => tilings(n, common.format, out)?,
        Command::Partition { model, n, seed, trials, symbolic_x, common } => {
            let chk = if symbolic_x {
                match model.as_str() {
                    "dwbc" => refined_link_dwbc(n)?,
                    "uturn" => refined_link_uturn(n)?,
                    _ => return Err(format!("--symbolic-x supports dwbc and uturn, not {model:?}").into()),
                }
            } else {
                let which = MODELS
                    .into_iter()
                    .find(|m| m.name().trim_start_matches("z-") == model)
                    .ok_or_else(|| format!("unknown model {model:?}"))?;
                formula_vs_state_sum(which, n, seed, trials)?
            };
            print_checks(std::slice::from_ref(&chk), common.format, out)?;
            return Ok(i32::from(chk.blocking_failure()));
        }
        Command::Report { max_order, max_n, common } => {
            let ht = ht_reconciliation(max_order)?;
            let q = q_reconciliation(max_n)?;
            let checks = [check_ht_reconciliation(max_order)?, check_q_reconciliation(max_n)?];
            match common.format {
                Format::Json => writeln!(out, "{}", json!([ht.to_json(), q.to_json()]))?,
                Format::Csv => {
                    writeln!(out, "formula,order,position,printed,reconstructed,reference")?;
                    for rec in [&ht, &q] {
                        for e in &rec.entries {
                            let show = |r: &Result<String, String>| r.clone().unwrap_or_else(|_| "undefined".into());
                            writeln!(
                                out,
                                "{},{},{},{},{},{}",
                                rec.formula.replace(',', ""),
                                e.order,
                                e.i,
                                show(&e.printed),
                                show(&e.reconstructed),
                                e.reference
                            )?;
                        }
                    }
                }
                Format::Table => {
                    for c in &checks {
                        writeln!(out, "{c}")?;
                        for d in &c.detail {
                            writeln!(out, "    {d}")?;
                        }
                    }
                }
            }
            return Ok(i32::from(checks.iter().any(IdentityCheck::blocking_failure)));
        }
    }
    Ok(0)
}

fn print_table(t: &RefinedTable, format: Format, out: Out) -> AnyResult<()> {
    match format {
        Format::Json => writeln!(out, "{}", t.to_json())?,
        Format::Csv => {
            writeln!(out, "class,order,statistic,position,count")?;
            for row in t.csv_rows() {
                writeln!(out, "{row}")?;
            }
        }
        Format::Table => writeln!(out, "{t}")?,
    }
    Ok(())
}

fn print_checks(checks: &[IdentityCheck], format: Format, out: Out) -> AnyResult<()> {
    match format {
        Format::Json => {
            let v: Vec<Value> = checks.iter().map(IdentityCheck::to_json).collect();
            writeln!(out, "{}", Value::Array(v))?;
        }
        Format::Csv => {
            writeln!(out, "identity,n,status,gating")?;
            for c in checks {
                writeln!(out, "{},{},{},{}", c.identity, c.n, c.status, c.gating)?;
            }
        }
        Format::Table => {
            for c in checks {
                writeln!(out, "{c}")?;
            }
            let failed = checks.iter().filter(|c| c.blocking_failure()).count();
            writeln!(out, "{} checks, {failed} gating failures", checks.len())?;
        }
    }
    Ok(())
}

fn tilings(n: usize, format: Format, out: Out) -> AnyResult<()> {
    let mut rows = Vec::new();
    for i in 1..=n + 1 {
        let det = q_ni_det(n, i)?;
        let closed = altsign::closed_forms::q_ni(n, i)?;
        let expand = q_ni_expand(n, i)?;
        let paths = if n <= 3 { Some(brute_paths(n, i)?) } else { None };
        rows.push((i, closed, det, expand, paths));
    }
    let g = genfun_qh(n)?;
    match format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(i, c, d, e, p)| {
                    json!({"i": i, "closed_form": c.to_string(), "lgv": d.to_string(), "expansion": e.to_string(),
                           "paths": p.as_ref().map(ToString::to_string)})
                })
                .collect();
            writeln!(out, "{}", json!({"n": n, "q": v, "generating_function": g.to_string()}))?;
        }
        Format::Csv => {
            writeln!(out, "n,i,closed_form,lgv,expansion,paths")?;
            for (i, c, d, e, p) in &rows {
                writeln!(out, "{n},{i},{c},{d},{e},{}", p.as_ref().map(ToString::to_string).unwrap_or_default())?;
            }
        }
        Format::Table => {
            writeln!(out, "{:>3} {:>14} {:>14} {:>14} {:>14}", "i", "closed form", "lgv", "expansion", "paths")?;
            for (i, c, d, e, p) in &rows {
                let p = p.as_ref().map_or("-".to_string(), ToString::to_string);
                writeln!(out, "{i:>3} {c:>14} {d:>14} {e:>14} {p:>14}")?;
            }
            writeln!(out, "generating function: {g}")?;
        }
    }
    Ok(())
}
