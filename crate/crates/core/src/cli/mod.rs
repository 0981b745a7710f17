//! The `qpart` command line: sequences, identity checks, series expressions
//! and the partition-number cache.
//!
//! Exit codes: 0 success, 1 an identity was refuted, 2 usage or evaluation
//! error.

pub mod cache;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;
use thiserror::Error;

use crate::dsl;
use crate::enumeration::{self as en, QConvention};
use crate::identities::{self, IdentityError, Status, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qpart",
    version,
    about = "Restricted partition counts, q-series and identity checks"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Partition-number cache file.
    #[arg(long, global = true, env = "QPART_CACHE")]
    pub cache: Option<PathBuf>,
    /// Worker threads for identity checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a counting sequence.
    Seq(SeqArgs),
    /// Check registered identities ("all" for every one).
    Verify(VerifyArgs),
    /// Expand a q-series expression.
    Series(SeriesArgs),
    /// Manage the partition-number cache.
    Cache(CacheArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    P,
    #[value(name = "p_diff")]
    PDiff,
    A,
    #[value(name = "a_diff")]
    ADiff,
    #[value(name = "Q")]
    Q,
    #[value(name = "p_star")]
    PStar,
    Pbar,
    #[value(name = "pbar_diff")]
    PbarDiff,
    Abar,
    #[value(name = "abar_diff")]
    AbarDiff,
    Ubar,
    Breg,
    #[value(name = "breg_diff")]
    BregDiff,
    Areg,
    #[value(name = "areg_diff")]
    AregDiff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    #[value(name = "at-least")]
    AtLeast,
    Exactly,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Smallest-part multiplicity bound.
    #[arg(long)]
    pub m: Option<u32>,
    /// Regularity modulus or part index.
    #[arg(long)]
    pub l: Option<u32>,
    /// Difference between largest and smallest part.
    #[arg(long)]
    pub t: Option<u32>,
    /// Difference for the a_m and ā_m families.
    #[arg(long)]
    pub d: Option<u32>,
    /// Smallest-part value (Q) or difference (areg_diff).
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, value_enum)]
    pub convention: Option<ConventionArg>,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub from: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: i64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(required = true)]
    pub ids: Vec<String>,
    /// Upper end of the n axis.
    #[arg(long)]
    pub to: Option<i64>,
    /// Coefficient window for serieswise identities.
    #[arg(long)]
    pub order: Option<i64>,
    /// Evaluate points the grid constraint would skip (e.g. l ∤ n).
    #[arg(long)]
    pub include_nondivisible: bool,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    pub expr: String,
    #[arg(long, env = "QPART_ORDER", default_value_t = 20)]
    pub order: i64,
}

#[derive(Debug, Args)]
pub struct CacheArgs {
    #[command(subcommand)]
    pub action: CacheAction,
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Compute p(0..=TO) and write the cache.
    Warm {
        #[arg(long, default_value_t = 500)]
        to: i64,
    },
    /// Delete the cache file.
    Clear,
    /// Report the number of cached entries.
    Stat,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error(transparent)]
    Dsl(#[from] dsl::DslError),
    #[error(transparent)]
    Cache(#[from] cache::CacheIoError),
    #[error("write failed: {0}")]
    Output(#[from] std::io::Error),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    if let Command::Cache(c) = &cli.command {
        return run_cache(cli, &c.action, out);
    }
    let mut rewrite = false;
    let mut loaded = 0;
    if let Some(path) = &cli.cache {
        match cache::load(path)? {
            cache::LoadOutcome::Loaded(n) => loaded = n,
            cache::LoadOutcome::Missing => {}
            cache::LoadOutcome::Rejected(reason) => {
                writeln!(err, "warning: ignoring cache {}: {reason}; rebuilding", path.display())?;
                rewrite = true;
            }
        }
    }
    let code = match &cli.command {
        Command::Seq(a) => run_seq(cli.format, a, out)?,
        Command::Verify(a) => run_verify(cli, a, out)?,
        Command::Series(a) => run_series(cli.format, a, out)?,
        Command::Cache(_) => unreachable!("handled above"),
    };
    if let Some(path) = &cli.cache {
        if rewrite || en::p_memo_snapshot().len() > loaded {
            cache::save(path)?;
        }
    }
    Ok(code)
}

fn need(v: Option<u32>, flag: &str, family: Family) -> Result<u32, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("family {} needs --{flag}", family_name(family))))
}

fn family_name(f: Family) -> String {
    f.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn positive(v: u32, flag: &str) -> Result<u32, CliError> {
    if v == 0 {
        return usage(format!("--{flag} must be at least 1"));
    }
    Ok(v)
}

fn modulus(v: u32) -> Result<u32, CliError> {
    if v < 2 {
        return usage("--l must be at least 2");
    }
    Ok(v)
}

type Counter = Box<dyn Fn(i64) -> BigInt>;

fn counter(a: &SeqArgs) -> Result<Counter, CliError> {
    use Family as F;
    let f = a.family;
    let allowed: &[&str] = match f {
        F::P | F::Pbar | F::Ubar => &[],
        F::PDiff | F::PbarDiff => &["t"],
        F::A | F::Abar | F::PStar => &["m"],
        F::ADiff | F::AbarDiff => &["m", "d"],
        F::Q => &["l", "k", "convention"],
        F::Breg => &["l"],
        F::BregDiff => &["l", "t"],
        F::Areg => &["m", "l"],
        F::AregDiff => &["m", "l", "k"],
    };
    let given = [
        ("m", a.m.is_some()),
        ("l", a.l.is_some()),
        ("t", a.t.is_some()),
        ("d", a.d.is_some()),
        ("k", a.k.is_some()),
        ("convention", a.convention.is_some()),
    ];
    if let Some((flag, _)) = given.iter().find(|(name, set)| *set && !allowed.contains(name)) {
        return usage(format!("--{flag} does not apply to family {}", family_name(f)));
    }
    Ok(match f {
        F::P => Box::new(en::count_p),
        F::PDiff => {
            let t = need(a.t, "t", f)?;
            Box::new(move |n| en::count_p_fixed_diff(n, t))
        }
        F::A => {
            let m = positive(need(a.m, "m", f)?, "m")?;
            Box::new(move |n| en::count_a(m, n))
        }
        F::ADiff => {
            let m = positive(need(a.m, "m", f)?, "m")?;
            let d = need(a.d, "d", f)?;
            Box::new(move |n| en::count_a_diff(m, n, d))
        }
        F::Q => {
            let l = positive(need(a.l, "l", f)?, "l")?;
            let k = positive(need(a.k, "k", f)?, "k")?;
            let conv = match a.convention {
                Some(ConventionArg::Exactly) => QConvention::Exactly,
                _ => QConvention::AtLeast,
            };
            Box::new(move |n| en::count_q(l, k, n, conv))
        }
        F::PStar => {
            let m = positive(need(a.m, "m", f)?, "m")?;
            Box::new(move |n| en::count_p_star(m, n))
        }
        F::Pbar => Box::new(en::count_pbar),
        F::PbarDiff => {
            let t = need(a.t, "t", f)?;
            Box::new(move |n| en::count_pbar_diff(n, t))
        }
        F::Abar => {
            let m = positive(need(a.m, "m", f)?, "m")?;
            Box::new(move |n| en::count_abar(m, n))
        }
        F::AbarDiff => {
            let m = positive(need(a.m, "m", f)?, "m")?;
            let d = need(a.d, "d", f)?;
            Box::new(move |n| en::count_abar_diff(m, n, d))
        }
        F::Ubar => Box::new(en::count_ubar),
        F::Breg => {
            let l = modulus(need(a.l, "l", f)?)?;
            Box::new(move |n| en::count_breg(l, n))
        }
        F::BregDiff => {
            let l = modulus(need(a.l, "l", f)?)?;
            let t = need(a.t, "t", f)?;
            Box::new(move |n| en::count_breg_diff(l, n, t))
        }
        F::Areg => {
            let m = positive(need(a.m, "m", f)?, "m")?;
            let l = modulus(need(a.l, "l", f)?)?;
            Box::new(move |n| en::count_areg(m, l, n))
        }
        F::AregDiff => {
            let m = positive(need(a.m, "m", f)?, "m")?;
            let l = modulus(need(a.l, "l", f)?)?;
            let k = need(a.k, "k", f)?;
            Box::new(move |n| en::count_areg_diff(m, l, n, k))
        }
    })
}

fn render_rows(format: Format, rows: &[(i64, BigInt)], out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Table => {
            let w_n = rows.iter().map(|(n, _)| n.to_string().len()).max().unwrap_or(1).max(1);
            let w_v = rows.iter().map(|(_, v)| v.to_string().len()).max().unwrap_or(5).max(5);
            writeln!(out, "{:>w_n$}  {:>w_v$}", "n", "value")?;
            for (n, v) in rows {
                writeln!(out, "{n:>w_n$}  {:>w_v$}", v.to_string())?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,value")?;
            for (n, v) in rows {
                writeln!(out, "{n},{v}")?;
            }
        }
        Format::Json => {
            for (n, v) in rows {
                writeln!(out, "{}", json!({"n": n, "value": v.to_string()}))?;
            }
        }
    }
    Ok(())
}

fn run_seq(format: Format, a: &SeqArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.from > a.to {
        return usage(format!("--from {} is greater than --to {}", a.from, a.to));
    }
    let count = counter(a)?;
    let rows: Vec<(i64, BigInt)> = (a.from..=a.to).map(|n| (n, count(n))).collect();
    render_rows(format, &rows, out)?;
    Ok(EXIT_OK)
}

fn run_series(format: Format, a: &SeriesArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let s = dsl::evaluate(&a.expr, a.order)?;
    let rows: Vec<(i64, BigInt)> = (s.min_exp().min(0)..a.order)
        .map(|e| (e, s.coeff(e).expect("inside the evaluated window")))
        .collect();
    render_rows(format, &rows, out)?;
    Ok(EXIT_OK)
}

fn run_verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let all = identities::registry();
    let mut chosen = Vec::new();
    for id in &a.ids {
        if id == "all" {
            chosen.extend(all.iter());
        } else {
            match all.iter().find(|i| i.id == id) {
                Some(i) => chosen.push(i),
                None => return Err(IdentityError::NotFound(id.clone()).into()),
            }
        }
    }
    let opts = VerifyOptions {
        n_max: a.to,
        order: a.order,
        ignore_constraint: a.include_nondivisible,
        jobs: cli.jobs.max(1),
    };
    let mut code = EXIT_OK;
    if cli.format == Format::Csv {
        writeln!(out, "id,status,points,order,mismatches,first_counterexample")?;
    }
    for identity in chosen {
        let r = identities::verify_identity(identity, &opts)?;
        if r.status == Status::Refuted {
            code = EXIT_REFUTED;
        }
        match cli.format {
            Format::Table => {
                writeln!(
                    out,
                    "{}: {} ({} point{}{})",
                    r.id,
                    r.status,
                    r.points,
                    if r.points == 1 { "" } else { "s" },
                    r.order.map_or(String::new(), |o| format!(", order {o}"))
                )?;
                if let Some(reason) = &r.skip_reason {
                    writeln!(out, "  {reason}")?;
                }
                for cx in r.counterexamples.iter().take(5) {
                    writeln!(out, "  counterexample {cx}")?;
                }
                if r.mismatches > 5 {
                    writeln!(out, "  ... {} mismatches in total", r.mismatches)?;
                }
            }
            Format::Csv => {
                let first = r.counterexamples.first().map_or(String::new(), |c| c.to_string());
                writeln!(
                    out,
                    "{},{},{},{},{},\"{}\"",
                    r.id,
                    r.status,
                    r.points,
                    r.order.map_or(String::new(), |o| o.to_string()),
                    r.mismatches,
                    first.replace('"', "\"\"")
                )?;
            }
            Format::Json => {
                writeln!(out, "{}", serde_json::to_string(&r).expect("report serializes"))?;
            }
        }
    }
    Ok(code)
}

fn cache_path(cli: &Cli) -> Result<&Path, CliError> {
    cli.cache
        .as_deref()
        .ok_or_else(|| CliError::Usage("no cache path: pass --cache PATH or set QPART_CACHE".into()))
}

fn run_cache(cli: &Cli, action: &CacheAction, out: &mut dyn Write) -> Result<i32, CliError> {
    let path = cache_path(cli)?;
    let shown = path.display().to_string();
    let (verb, entries) = match action {
        CacheAction::Warm { to } => {
            if *to < 0 {
                return usage("--to must be non-negative");
            }
            cache::load(path)?;
            ("warmed", cache::warm(path, *to)?)
        }
        CacheAction::Clear => {
            cache::clear(path)?;
            ("cleared", 0)
        }
        CacheAction::Stat => match cache::entries(path)? {
            None => ("missing", 0),
            Some(Ok(n)) => ("present", n),
            Some(Err(reason)) => {
                return usage(format!("cache {shown} is unusable: {reason}"));
            }
        },
    };
    match cli.format {
        Format::Json => writeln!(out, "{}", json!({"path": shown, "state": verb, "entries": entries}))?,
        Format::Csv => writeln!(out, "path,state,entries\n{shown},{verb},{entries}")?,
        Format::Table => writeln!(out, "{shown}: {verb}, {entries} entries")?,
    }
    Ok(EXIT_OK)
}
