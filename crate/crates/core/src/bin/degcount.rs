//! Command-line front end for the degree-sequence counting engine.
//!
//! Exit codes: 0 on success, 2 on invalid input or resource failure,
//! 3 when a verification subcommand finds a mismatch.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use degcount::alloc_model;
use degcount::dp;
use degcount::error::Error;
use degcount::estimator::{self, ConjectureForm};
use degcount::oracle;

#[derive(Parser)]
#[command(name = "degcount", version, about = "Exact counting of graphical degree sequences")]
struct Cli {
    /// Worker threads (0 = all cores). Defaults to the DEGCOUNT_THREADS
    /// environment variable; the flag wins when both are set.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count zero-free graphical degree sequences: L, H, D, D0.
    Count(CountArgs),
    /// Cross-check the dynamic programs against brute-force enumeration.
    Verify(VerifyArgs),
    /// Table-allocation model: f1, f4 and their ratio per n.
    Table(TableArgs),
    /// Monte-Carlo estimate of the graphical fraction D(n)/E(n).
    Estimate(EstimateArgs),
    /// Point query of the bounded partition function P(N,k,l,s).
    Pnkls(PnklsArgs),
    /// Count of graphical partitions G(N) for even N.
    Gcount(GcountArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    /// Ragged rolling-slab engine; streams every row up to n.
    Improved,
    /// Rectangular-table reference engine; computes L(n) only.
    Baseline,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

#[derive(Args)]
struct CountArgs {
    /// Sequence length (largest one with --algorithm improved).
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Algorithm::Improved)]
    algorithm: Algorithm,
    /// Emit only the row for n, not every row up to n.
    #[arg(long)]
    single: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest N in the P(N,k,l,s) sweep.
    #[arg(long, default_value_t = 10)]
    max_big_n: u64,
    /// Largest k and l in the P(N,k,l,s) sweep.
    #[arg(long, default_value_t = 5)]
    max_kl: u32,
    /// Largest s in the P(N,k,l,s) sweep.
    #[arg(long, default_value_t = 10)]
    max_s: i64,
    /// Largest sequence length in the D(n) sweep.
    #[arg(long, default_value_t = 8)]
    max_n: u32,
    /// Corrupt one comparison to prove the checker can fail.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Comma-separated n values, each >= 4.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u64>,
    /// Compare every row that has a published reference value.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct EstimateArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Formulas to evaluate alongside: burns-lower, burns-upper:C,
    /// wang-form:C, pittel-form, g-ratio. Repeatable.
    #[arg(long = "conjecture")]
    conjectures: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct PnklsArgs {
    #[arg(value_name = "N")]
    big_n: i64,
    k: i64,
    l: i64,
    s: i64,
    /// Also evaluate by brute-force enumeration and compare.
    #[arg(long)]
    both: bool,
}

#[derive(Args)]
struct GcountArgs {
    /// Even partition size N.
    #[arg(long)]
    big_n: u64,
}

fn parse_conjecture(text: &str) -> Result<ConjectureForm, Error> {
    let (name, arg) = match text.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (text, None),
    };
    let constant = |a: Option<&str>| -> Result<f64, Error> {
        let a = a.ok_or_else(|| {
            Error::InvalidArgument(format!("conjecture {name} needs a constant, e.g. {name}:2.0"))
        })?;
        a.parse()
            .map_err(|e| Error::InvalidArgument(format!("bad constant {a}: {e}")))
    };
    match name {
        "burns-lower" => Ok(ConjectureForm::BurnsLower),
        "burns-upper" => Ok(ConjectureForm::BurnsUpper { c: constant(arg)? }),
        "wang-form" => Ok(ConjectureForm::WangForm { c: constant(arg)? }),
        "pittel-form" => Ok(ConjectureForm::PittelForm),
        "g-ratio" => Ok(ConjectureForm::GRatio),
        other => Err(Error::InvalidArgument(format!("unknown conjecture form: {other}"))),
    }
}

fn emit(text: &str, output: Option<&std::path::Path>) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn run_count(threads: usize, args: &CountArgs) -> Result<(), Error> {
    if args.algorithm == Algorithm::Baseline {
        let l = dp::count_l_baseline(args.n, threads)?;
        let text = match args.format {
            Format::Csv => format!("n,L\n{},{}\n", args.n, l),
            Format::Jsonl => format!("{{\"n\":{},\"L\":\"{}\"}}\n", args.n, l),
        };
        return emit(&text, args.output.as_deref());
    }
    let mut report = dp::count_all_improved(args.n, threads)?;
    if args.single {
        report.rows.retain(|r| r.n == args.n);
    }
    let text = match args.format {
        Format::Csv => report.to_csv(),
        Format::Jsonl => report.to_json_lines(),
    };
    emit(&text, args.output.as_deref())
}

/// Returns the number of mismatches found.
fn run_verify(threads: usize, args: &VerifyArgs) -> Result<u64, Error> {
    let mut bad = 0u64;
    let mut checked = 0u64;
    let mut memo = dp::PnklsMemo::new();
    for n in 0..=args.max_big_n as i64 {
        for k in 0..=args.max_kl as i64 {
            for l in 0..=args.max_kl as i64 {
                for s in -1..=args.max_s {
                    let fast = memo.get(n, k, l, s);
                    let mut slow = oracle::p_nkls_bruteforce(n, k as u32, l as u32, s);
                    if args.inject_fault && (n, k, l, s) == (4, 2, 2, 2) {
                        slow += 1u32;
                    }
                    checked += 1;
                    if fast != slow {
                        bad += 1;
                        eprintln!("MISMATCH P({n},{k},{l},{s}): recurrence {fast}, enumeration {slow}");
                    }
                }
            }
        }
    }

    if args.max_n >= 2 {
        let report = dp::count_all_improved(args.max_n, threads)?;
        for row in &report.rows {
            let slow = oracle::d_bruteforce(row.n);
            checked += 1;
            if row.d != slow {
                bad += 1;
                eprintln!("MISMATCH D({}): engine {}, enumeration {slow}", row.n, row.d);
            }
        }
    }
    println!("verify: {checked} comparisons, {bad} mismatches");
    Ok(bad)
}

/// Returns the number of rows disagreeing with the reference table.
fn run_table(args: &TableArgs) -> Result<u64, Error> {
    if let Some(&n) = args.n.iter().find(|&&n| n < 4) {
        return Err(Error::InvalidArgument(format!("table needs n >= 4, got {n}")));
    }
    let rows = alloc_model::alloc_table(&args.n);
    print!("{}", alloc_model::alloc_csv(&rows));
    if !args.check {
        return Ok(0);
    }
    let mut bad = 0u64;
    for row in &rows {
        let Some(reference) = alloc_model::REFERENCE_TABLE.iter().find(|r| r.0 == row.n) else {
            continue;
        };
        let ok = row.f1 == reference.1.into()
            && row.f4 == reference.2.into()
            && row.ratio == reference.3;
        if !ok {
            bad += 1;
            eprintln!(
                "MISMATCH n={}: got ({},{},{}), reference ({},{},{})",
                row.n, row.f1, row.f4, row.ratio, reference.1, reference.2, reference.3
            );
        }
    }
    println!("table check: {bad} mismatches");
    Ok(bad)
}

fn run_estimate(threads: usize, args: &EstimateArgs) -> Result<(), Error> {
    let forms = args
        .conjectures
        .iter()
        .map(|t| parse_conjecture(t))
        .collect::<Result<Vec<_>, _>>()?;
    let report = estimator::estimate_ratio(args.n, args.samples, args.seed, threads, &forms)?;
    let text = match args.format {
        Format::Csv => report.to_csv(),
        Format::Jsonl => report.to_json_lines(),
    };
    emit(&text, args.output.as_deref())
}

/// Returns 1 when --both finds a disagreement.
fn run_pnkls(args: &PnklsArgs) -> Result<u64, Error> {
    let fast = dp::fourvar::p_nkls(args.big_n, args.k, args.l, args.s);
    if !args.both {
        println!("{fast}");
        return Ok(0);
    }
    if args.big_n > 64 || args.k.max(args.l) > 32 {
        return Err(Error::InvalidArgument(
            "--both enumerates partitions; keep N <= 64 and k, l <= 32".into(),
        ));
    }
    let slow = if args.big_n < 0 || args.k < 0 || args.l < 0 {
        num_traits::Zero::zero()
    } else {
        oracle::p_nkls_bruteforce(args.big_n, args.k as u32, args.l as u32, args.s)
    };
    println!("recurrence  {fast}");
    println!("enumeration {slow}");
    Ok(if fast == slow { 0 } else { 1 })
}

fn resolve_threads(flag: Option<usize>) -> Result<usize, Error> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("DEGCOUNT_THREADS") {
        Ok(v) => v
            .parse()
            .map_err(|e| Error::InvalidArgument(format!("DEGCOUNT_THREADS={v}: {e}"))),
        Err(_) => Ok(0),
    }
}

fn dispatch(cli: &Cli) -> Result<u64, Error> {
    let threads = resolve_threads(cli.threads)?;
    match &cli.cmd {
        Cmd::Count(args) => run_count(threads, args).map(|_| 0),
        Cmd::Verify(args) => run_verify(threads, args),
        Cmd::Table(args) => run_table(args),
        Cmd::Estimate(args) => run_estimate(threads, args).map(|_| 0),
        Cmd::Pnkls(args) => run_pnkls(args),
        Cmd::Gcount(args) => dp::g_count(args.big_n).map(|g| {
            println!("{g}");
            0
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
