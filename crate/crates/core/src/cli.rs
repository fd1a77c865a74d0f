//! Command-line front end.
//!
//! Exit codes: 0 success, 1 inconsistency or failed verification, 2 usage
//! or input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::catalog::{catalog_with_cap, corpus_names, load_groups, to_table_def, BUILTIN_NAMES};
use crate::criteria::{self, RunOptions, DEFAULT_ORACLE_CAP};
use crate::group::{FiniteGroup, DEFAULT_CAP};
use crate::psi::{self, order_spectrum};
use crate::report;
use crate::verify::{self, Context, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const MAX_K: u32 = 64;

/// Inclusive range written `a..b` or `a`.
fn parse_range<T>(text: &str) -> Result<RangeInclusive<T>, String>
where
    T: std::str::FromStr + PartialOrd + Copy,
{
    let parse = |s: &str| {
        s.trim()
            .parse::<T>()
            .map_err(|_| format!("{s:?} is not a valid number"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {text:?}"));
    }
    Ok(lo..=hi)
}

fn parse_k_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let r = parse_range::<u32>(text)?;
    if *r.start() < 1 || *r.end() > MAX_K {
        return Err(format!("k range must lie within 1..{MAX_K}"));
    }
    Ok(r)
}

fn parse_prime_range(text: &str) -> Result<RangeInclusive<u64>, String> {
    parse_range::<u64>(text)
}

#[derive(Debug, Parser)]
#[command(
    name = "psik",
    version,
    about = "Element-order power sums and solvability criteria for finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GroupSelection {
    /// Built-in group (repeatable); see `psik catalog`.
    #[arg(long = "group", value_name = "NAME")]
    groups: Vec<String>,
    /// Group-definition document (repeatable).
    #[arg(long = "defs", value_name = "PATH")]
    defs: Vec<PathBuf>,
    /// Add the standard test corpus.
    #[arg(long)]
    corpus: bool,
    /// Largest group any constructor may build.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print n, the order spectrum and psi_k for each k.
    Compute {
        #[command(flatten)]
        select: GroupSelection,
        #[arg(long, value_parser = parse_k_range, default_value = "1..8")]
        k: RangeInclusive<u32>,
    },
    /// Print the order spectrum as TSV.
    Spectrum {
        #[command(flatten)]
        select: GroupSelection,
    },
    /// Run every solvability criterion and write a TSV report.
    Criteria {
        #[command(flatten)]
        select: GroupSelection,
        /// Window scanned by the psi_k criteria.
        #[arg(long, value_parser = parse_k_range, default_value = "4..32")]
        k: RangeInclusive<u32>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Skip the derived-series cross-check.
        #[arg(long)]
        no_oracle: bool,
        /// Largest group the cross-check runs on automatically.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        /// Print every verdict, not just the per-group summary.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Evaluate D_k > 1/(2^k p^(k-1)) over a grid of primes and exponents.
    ClaimCheck {
        #[arg(long, value_parser = parse_prime_range, default_value = "7..199")]
        p: RangeInclusive<u64>,
        #[arg(long, value_parser = parse_k_range, default_value = "4..25")]
        k: RangeInclusive<u32>,
    },
    /// Recompute every reproduced value and report pass/fail per item.
    VerifyPaper {
        /// Window used for the psi_k criteria.
        #[arg(long, value_parser = parse_k_range, default_value = "4..32")]
        k: RangeInclusive<u32>,
        /// Run against a deliberately broken catalog.
        #[arg(long, hide = true)]
        corrupt_catalog: bool,
    },
    /// List built-in groups, or export them as table definitions.
    Catalog {
        /// Print this group as a `table` definition (repeatable).
        #[arg(long, value_name = "NAME")]
        export: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Resolved groups plus whether anything had to be skipped.
struct Selected {
    groups: Vec<FiniteGroup>,
    skipped: bool,
}

fn select(sel: &GroupSelection, io: &mut Io<'_>) -> Selected {
    let mut groups = Vec::new();
    let mut skipped = false;
    for name in &sel.groups {
        match catalog_with_cap(name, sel.cap) {
            Ok(g) => groups.push(g),
            Err(e) => {
                let _ = writeln!(io.err, "skipped {name}: {e}");
                skipped = true;
            }
        }
    }
    for path in &sel.defs {
        let loaded = fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|text| load_groups(&text, sel.cap).map_err(|e| e.to_string()));
        match loaded {
            Ok(gs) => groups.extend(gs),
            Err(e) => {
                let _ = writeln!(io.err, "skipped {}: {e}", path.display());
                skipped = true;
            }
        }
    }
    if sel.corpus {
        for name in corpus_names() {
            match catalog_with_cap(&name, sel.cap) {
                Ok(g) => groups.push(g),
                Err(e) => {
                    let _ = writeln!(io.err, "skipped {name}: {e}");
                    skipped = true;
                }
            }
        }
    }
    if groups.is_empty() && !skipped {
        let _ = writeln!(
            io.err,
            "no groups selected; use --group, --defs or --corpus"
        );
        skipped = true;
    }
    Selected { groups, skipped }
}

fn status(skipped: bool) -> i32 {
    if skipped {
        EXIT_USAGE
    } else {
        EXIT_OK
    }
}

fn compute(sel: &GroupSelection, k: &RangeInclusive<u32>, io: &mut Io<'_>) -> std::io::Result<i32> {
    let selected = select(sel, io);
    for (i, g) in selected.groups.iter().enumerate() {
        if i > 0 {
            writeln!(io.out)?;
        }
        let spectrum = order_spectrum(g);
        writeln!(io.out, "group\t{}", g.name())?;
        writeln!(io.out, "order\t{}", g.order())?;
        writeln!(io.out, "spectrum\t{}", spectrum.summary())?;
        for k in k.clone() {
            writeln!(io.out, "psi_{k}\t{}", spectrum.psi_k(k).expect("k >= 1"))?;
        }
    }
    Ok(status(selected.skipped))
}

fn spectrum(sel: &GroupSelection, io: &mut Io<'_>) -> std::io::Result<i32> {
    let selected = select(sel, io);
    writeln!(io.out, "group\torder\telement_order\tcount")?;
    for g in &selected.groups {
        for (d, c) in order_spectrum(g).counts() {
            writeln!(io.out, "{}\t{}\t{d}\t{c}", g.name(), g.order())?;
        }
    }
    Ok(status(selected.skipped))
}

struct CriteriaArgs<'a> {
    select: &'a GroupSelection,
    k: &'a RangeInclusive<u32>,
    report: &'a Option<PathBuf>,
    no_oracle: bool,
    oracle_cap: usize,
    verbose: bool,
}

fn criteria_cmd(args: CriteriaArgs<'_>, io: &mut Io<'_>) -> std::io::Result<i32> {
    let selected = select(args.select, io);
    let options = RunOptions {
        k_window: args.k.clone(),
        oracle_cap: args.oracle_cap,
        force_oracle: false,
        skip_oracle: args.no_oracle,
    };
    let reports: Vec<_> = selected
        .groups
        .iter()
        .map(|g| criteria::run_all(g, &options))
        .collect();
    let text = report::render(&reports);
    match args.report {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                writeln!(io.err, "cannot write {}: {e}", path.display())?;
                return Ok(EXIT_USAGE);
            }
            for r in &reports {
                let certified: Vec<String> = r
                    .verdicts
                    .iter()
                    .filter(|v| v.verdict.is_certified())
                    .map(|v| match v.k_used {
                        Some(k) if k != 1 => format!("{}(k={k})", v.criterion),
                        _ => v.criterion.to_string(),
                    })
                    .collect();
                writeln!(
                    io.out,
                    "{}\t{}\tcertified: {}\toracle: {}\t{}",
                    r.group_name,
                    r.order,
                    if certified.is_empty() {
                        "none".to_string()
                    } else {
                        certified.join(",")
                    },
                    r.oracle_solvable
                        .map_or_else(|| "-".to_string(), |b| b.to_string()),
                    if r.consistency {
                        "consistent"
                    } else {
                        "INCONSISTENT"
                    }
                )?;
                if args.verbose {
                    for v in &r.verdicts {
                        writeln!(
                            io.out,
                            "  {:<13} {:<17} lhs≈{:.6e} rhs≈{:.6e}{}",
                            v.criterion.as_str(),
                            v.verdict.as_str(),
                            psi::approx(&v.lhs),
                            psi::approx(&v.rhs),
                            v.note
                                .as_deref()
                                .map(|n| format!(" ({n})"))
                                .unwrap_or_default()
                        )?;
                    }
                }
            }
        }
        None => io.out.write_all(text.as_bytes())?,
    }
    for r in reports.iter().filter(|r| !r.consistency) {
        writeln!(
            io.err,
            "inconsistent: {} certified but the derived series says non-solvable",
            r.group_name
        )?;
    }
    if reports.iter().any(|r| !r.consistency) {
        Ok(EXIT_FAILURE)
    } else {
        Ok(status(selected.skipped))
    }
}

/// Points where the inequality is asserted: `p > 7, k ≥ 4` and `p = 7, k ≥ 13`.
pub fn claim_asserted(p: u64, k: u32) -> bool {
    (p > 7 && k >= 4) || (p == 7 && k >= 13)
}

fn claim_check(
    primes: &RangeInclusive<u64>,
    ks: &RangeInclusive<u32>,
    io: &mut Io<'_>,
) -> std::io::Result<i32> {
    writeln!(io.out, "p\tk\tresult\tasserted")?;
    let (mut points, mut mismatches) = (0usize, 0usize);
    for p in primes.clone().filter(|&p| psi::is_prime(p)) {
        for k in ks.clone() {
            let holds = psi::claim_inequality_holds(p, k).expect("p is prime");
            let asserted = claim_asserted(p, k);
            points += 1;
            if asserted && !holds {
                mismatches += 1;
            }
            writeln!(
                io.out,
                "{p}\t{k}\t{}\t{}",
                if holds { "holds" } else { "fails" },
                if asserted { "holds" } else { "-" }
            )?;
        }
    }
    writeln!(io.out, "# {points} points, {mismatches} mismatches")?;
    if points == 0 {
        writeln!(io.err, "no primes in the requested range")?;
        return Ok(EXIT_USAGE);
    }
    Ok(if mismatches == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn verify_paper(k: &RangeInclusive<u32>, corrupt: bool, io: &mut Io<'_>) -> std::io::Result<i32> {
    let ctx = if corrupt {
        Context::corrupted(k.clone())
    } else {
        Context::new(k.clone())
    };
    let outcomes = verify::run(&ctx);
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    for o in &outcomes {
        writeln!(
            io.out,
            "{}\t{}\t{}\t{}\texpected: {}\tactual: {}",
            o.status, o.id, o.origin, o.claim, o.expected, o.actual
        )?;
    }
    writeln!(
        io.out,
        "# {} passed, {} failed, {} window-limited",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::WindowLimited)
    )?;
    Ok(if count(Status::Fail) == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn catalog_cmd(export: &[String], cap: usize, io: &mut Io<'_>) -> std::io::Result<i32> {
    if export.is_empty() {
        for name in BUILTIN_NAMES {
            writeln!(io.out, "{name}")?;
        }
        writeln!(io.out, "Z<n>\tcyclic group of order n")?;
        writeln!(io.out, "Dih<n>\tZ_n : Z_2 by inversion, order 2n")?;
        return Ok(EXIT_OK);
    }
    let mut code = EXIT_OK;
    for name in export {
        match catalog_with_cap(name, cap) {
            Ok(g) => io.out.write_all(to_table_def(&g).as_bytes())?,
            Err(e) => {
                writeln!(io.err, "skipped {name}: {e}")?;
                code = EXIT_USAGE;
            }
        }
    }
    Ok(code)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { out, err };
    let result = match &cli.command {
        Command::Compute { select, k } => compute(select, k, &mut io),
        Command::Spectrum { select } => spectrum(select, &mut io),
        Command::Criteria {
            select,
            k,
            report,
            no_oracle,
            oracle_cap,
            verbose,
        } => criteria_cmd(
            CriteriaArgs {
                select,
                k,
                report,
                no_oracle: *no_oracle,
                oracle_cap: *oracle_cap,
                verbose: *verbose,
            },
            &mut io,
        ),
        Command::ClaimCheck { p, k } => claim_check(p, k, &mut io),
        Command::VerifyPaper { k, corrupt_catalog } => verify_paper(k, *corrupt_catalog, &mut io),
        Command::Catalog { export, cap } => catalog_cmd(export, *cap, &mut io),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(io.err, "output error: {e}");
        EXIT_USAGE
    })
}
