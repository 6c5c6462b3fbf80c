use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use linarr::arrangement::{parse_arrangement, render_arrangement, Arrangement};
use linarr::error::Error;
use linarr::harness::{
    analyze, build_by_name, catalog, random_arrangement, verify, ziegler_checks, Analyzer,
    SUITE_IDS,
};
use linarr::report::VerifyReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

/// Exact analysis and verification of derivation modules of line arrangements.
#[derive(Parser)]
#[command(name = "linarr", version, about)]
struct Cli {
    /// Output format: human-readable text or key=value records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on the degrees shown in dimension tables.
    #[arg(long, global = true)]
    max_degree: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: lattice, graded dimensions, generators, freeness,
    /// Hilbert function, local derivations, covers and conjecture status.
    Analyze { target: String },
    /// Run a verification suite (see `catalog list` for suite ids).
    Verify {
        suite: String,
        target: String,
        /// Second arrangement for the paired external-data check.
        second: Option<String>,
    },
    /// Minimal line covers of the multiple points.
    Cover { target: String },
    /// Named arrangements.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Generate a random rational arrangement.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        lines: usize,
        #[arg(long, default_value_t = 5)]
        max_coeff: i64,
        /// Write the arrangement file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the named arrangements and the known verification suites.
    List,
    /// Show one entry, including its arrangement file.
    Show { name: String },
}

fn load_target(target: &str) -> Result<(String, Arrangement), Error> {
    if let Some(name) = target.strip_prefix("catalog:") {
        let arr = build_by_name(name)?;
        return Ok((name.to_string(), arr));
    }
    let text = std::fs::read_to_string(target)?;
    let arr = parse_arrangement(&text)?;
    Ok((target.to_string(), arr))
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_) | Error::Io(_) | Error::UnknownSuite(_) | Error::Undefined(_, _)
    )
}

fn print_report(report: &VerifyReport, format: Format) {
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Records => print!("{}", report.render_records()),
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Analyze { target } => {
            let (name, arr) = load_target(&target)?;
            let mut analyzer = Analyzer::new(name, arr);
            let report = analyze(&mut analyzer, cli.max_degree)?;
            match cli.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Records => print!("{}", report.render_records()),
            }
            Ok(report.passed())
        }
        Command::Verify {
            suite,
            target,
            second,
        } => {
            if suite == "ziegler" {
                let second = second.ok_or_else(|| {
                    Error::Parse("the ziegler suite needs two arrangement targets".into())
                })?;
                let (name_a, a) = load_target(&target)?;
                let (name_b, b) = load_target(&second)?;
                let mut report = VerifyReport::new("ziegler", format!("{name_a} vs {name_b}"));
                report.extend(ziegler_checks(&a, &b)?);
                print_report(&report, cli.format);
                return Ok(report.passed());
            }
            if !SUITE_IDS.contains(&suite.as_str()) {
                return Err(Error::UnknownSuite(suite));
            }
            let (name, arr) = load_target(&target)?;
            let mut analyzer = Analyzer::new(name, arr);
            let report = verify(&mut analyzer, &suite)?;
            print_report(&report, cli.format);
            Ok(report.passed())
        }
        Command::Cover { target } => {
            let (name, arr) = load_target(&target)?;
            let mut analyzer = Analyzer::new(name.clone(), arr);
            let result = analyzer.cover()?.clone();
            match cli.format {
                Format::Text => {
                    println!("cover of the multiple points of {name}");
                    println!("  N  = {}", result.n);
                    for l in &result.witness_n {
                        println!("       {l}");
                    }
                    println!("  N0 = {}", result.n0);
                    for l in &result.witness_n0 {
                        println!("       {l}");
                    }
                }
                Format::Records => {
                    println!("target={name}");
                    println!("cover.N={}", result.n);
                    println!("cover.N0={}", result.n0);
                    for l in &result.witness_n {
                        println!("cover.witness={l}");
                    }
                    for l in &result.witness_n0 {
                        println!("cover.witness0={l}");
                    }
                }
            }
            Ok(true)
        }
        Command::Catalog { action } => {
            match action {
                CatalogAction::List => {
                    for entry in catalog() {
                        let kind = if entry.builder.is_some() {
                            "built-in"
                        } else {
                            "external data"
                        };
                        println!("{:<14} [{kind}] {}", entry.name, entry.description);
                    }
                    println!("\nverification suites: {}", SUITE_IDS.join(", "));
                    println!("paired suite: ziegler <fileA> <fileB>");
                }
                CatalogAction::Show { name } => {
                    let entries = catalog();
                    let entry = entries
                        .iter()
                        .find(|e| e.name == name)
                        .ok_or_else(|| Error::UnknownSuite(format!("catalog entry {name}")))?;
                    println!("{}: {}", entry.name, entry.description);
                    if entry.builder.is_some() {
                        let arr = build_by_name(&name)?;
                        print!("{}", render_arrangement(&arr));
                    } else {
                        println!(
                            "no built-in coordinates; supply a pair of arrangement files and \
                             run `linarr verify ziegler <fileA> <fileB>`"
                        );
                    }
                }
            }
            Ok(true)
        }
        Command::Random {
            seed,
            lines,
            max_coeff,
            out,
        } => {
            let arr = random_arrangement(seed, lines, max_coeff)?;
            let text = render_arrangement(&arr);
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if usage_error(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
