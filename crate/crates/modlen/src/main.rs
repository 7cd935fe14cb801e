use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use modlen::error::Error;
use modlen::root_system::{Family, GroupSpec, RootSystem};
use modlen::stats::StatSpec;
use modlen::verify::{self, Suite, VerifyOptions};

/// Accidental-launch guard for `dist`: large enough for the rank-11 type A
/// run, small enough to reject E8 and 13!-scale groups unless raised.
const DEFAULT_DIST_MAX_ORDER: u128 = 600_000_000;

#[derive(Parser)]
#[command(
    name = "modlen",
    version,
    about = "Modular-height inversion statistics over finite Weyl groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a statistic distribution and write it as CSV
    Dist(DistArgs),
    /// Check embedded golden tables and claims against recomputation
    Verify(VerifyArgs),
    /// Print root-system facts for a Weyl type
    Info(InfoArgs),
}

#[derive(Args)]
struct DistArgs {
    /// Weyl family: A, B, C, D, E, F or G
    #[arg(long)]
    family: Family,
    #[arg(long)]
    rank: usize,
    /// Modulus of the statistic (k >= 1)
    #[arg(long)]
    k: u32,
    /// Residue of the statistic (any integer; reduced mod k)
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    h: i64,
    /// Worker threads (default: MODLEN_THREADS or hardware parallelism)
    #[arg(long)]
    threads: Option<usize>,
    /// Write the CSV here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Refuse groups with more elements than this
    #[arg(long, default_value_t = DEFAULT_DIST_MAX_ORDER)]
    max_order: u128,
}

#[derive(Args)]
struct VerifyArgs {
    /// examples, figure1, table2, tableB, tableD, exceptional or conjgen
    #[arg(long)]
    suite: String,
    /// Skip cells whose group order exceeds this (reported as NOTRUN)
    #[arg(long, default_value_t = verify::DEFAULT_MAX_ORDER)]
    max_order: u128,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct InfoArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    rank: usize,
    /// Also print the top value of the (k, h) statistic
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    h: i64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Dist(args) => cmd_dist(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Info(args) => cmd_info(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// 2 for bad requests, 3 for resource limits; matches the documented
/// contract (0 success, 2 usage, 3 resource/overflow).
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidSpec { .. }
        | Error::InvalidStat
        | Error::UnknownSuite(_)
        | Error::UnknownTable(_)
        | Error::CsvParse { .. }
        | Error::MergeMismatch(_) => 2,
        Error::TooLarge { .. } | Error::BudgetExceeded { .. } | Error::Overflow(_) => 3,
    }
}

fn thread_count(flag: Option<usize>) -> usize {
    if let Some(t) = flag {
        return t.max(1);
    }
    if let Ok(value) = std::env::var("MODLEN_THREADS") {
        match value.parse::<usize>() {
            Ok(t) if t >= 1 => return t,
            _ => eprintln!("warning: ignoring invalid MODLEN_THREADS={value}"),
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

fn cmd_dist(args: DistArgs) -> Result<ExitCode, Error> {
    let group = GroupSpec::new(args.family, args.rank)?;
    let stat = StatSpec::new(args.k, args.h)?;
    let order = group
        .order()
        .ok_or(Error::Overflow("computing the group order"))?;
    if order > args.max_order {
        return Err(Error::BudgetExceeded {
            order,
            budget: args.max_order,
        });
    }

    let threads = thread_count(args.threads);
    let started = Instant::now();
    let dist = verify::compute_distribution(group, stat, threads)?;
    let elapsed = started.elapsed();

    let csv = dist.to_csv();
    match &args.out {
        Some(path) => std::fs::write(path, csv).map_err(|e| Error::TooLarge {
            what: "output file",
            detail: format!("{}: {e}", path.display()),
        })?,
        None => {
            print!("{csv}");
            std::io::stdout().flush().ok();
        }
    }
    eprintln!(
        "{group} {stat}: |W| = {order}, degree {}, {}, {:.2}s",
        dist.degree(),
        dist.unimodality(),
        elapsed.as_secs_f64()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let suite: Suite = args.suite.parse()?;
    let opts = VerifyOptions {
        max_order: args.max_order,
        threads: thread_count(args.threads),
    };
    let report = verify::verify_suite(suite, &opts);
    print!("{}", report.render());
    println!();
    print!("{}", report.machine_lines());
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_info(args: InfoArgs) -> Result<ExitCode, Error> {
    let group = GroupSpec::new(args.family, args.rank)?;
    let rs = RootSystem::new(group)?;
    println!("group: {group}");
    println!("rank: {}", group.rank());
    println!("positive roots: {}", rs.num_positive_roots());
    match group.order() {
        Some(order) => println!("group order: {order}"),
        None => println!("group order: exceeds u128"),
    }
    let histogram: Vec<String> = rs
        .height_histogram()
        .into_iter()
        .map(|(height, count)| format!("{height}:{count}"))
        .collect();
    println!("height histogram: {}", histogram.join(" "));
    println!("highest root height: {}", rs.highest_root_height());
    if let Some(k) = args.k {
        let stat = StatSpec::new(k, args.h)?;
        println!(
            "top statistic value L[{stat}](w0) = {} (distribution degree)",
            rs.height_class_count(stat)
        );
    }
    Ok(ExitCode::SUCCESS)
}
