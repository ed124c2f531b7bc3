use std::path::PathBuf;
use std::process::ExitCode;

use bispace_lab::catalog::Report;
use bispace_lab::harness::{self, emit_reports, Format, SuiteConfig, DEFAULT_SAMPLES};
use bispace_lab::{enumerate_spaces, Execution};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bispace-lab",
    version,
    about = "Checks preopen-set properties of finite and schematic bispaces"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Run on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Verify every catalog entry against its recorded verdicts.
    VerifyCatalog {
        /// Record evaluation time per claim.
        #[arg(long)]
        timings: bool,
        /// Append an entry with one inverted verdict, which must fail.
        #[arg(long)]
        negative_control: bool,
    },
    /// List every space on K points in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Run theorem suites over all bispaces on K points.
    Suite {
        #[arg(long)]
        n: usize,
        /// A suite id, or `all`.
        #[arg(long, default_value = "all")]
        which: String,
        /// Seed for sampled map sweeps; required exactly when K is 4 and a
        /// map suite is selected.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Print the suite ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Check a space file.
    Check {
        file: PathBuf,
        /// JSON array of extra claims.
        #[arg(long)]
        claims: Option<PathBuf>,
    },
}

const INPUT_ERROR: u8 = 2;

fn finish(reports: &[Report], format: Format) -> ExitCode {
    print!("{}", emit_reports(reports, format));
    if reports.iter().all(Report::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(INPUT_ERROR)
}

fn point_list(s: bispace_lab::Mask) -> String {
    let points: Vec<String> = s.iter().map(|p| p.to_string()).collect();
    format!("[{}]", points.join(","))
}

fn enumerate(n: usize, format: Format) -> ExitCode {
    let spaces = match enumerate_spaces(n) {
        Ok(s) => s,
        Err(e) => return input_error(e),
    };
    for (k, space) in spaces.iter().enumerate() {
        match format {
            Format::Text => {
                let opens: Vec<String> = space.opens().iter().map(|o| o.to_string()).collect();
                println!("{k:>4}  {}", opens.join(" "));
            }
            Format::Machine => {
                let opens: Vec<String> = space.opens().iter().map(|&o| point_list(o)).collect();
                println!(
                    r#"{{"record":"space","n":{n},"index":{k},"opens":[{}]}}"#,
                    opens.join(",")
                );
            }
        }
    }
    match format {
        Format::Text => println!("{} spaces on {n} points", spaces.len()),
        Format::Machine => println!(r#"{{"record":"count","n":{n},"count":{}}}"#, spaces.len()),
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match cli.command {
        Command::VerifyCatalog {
            timings,
            negative_control,
        } => finish(&harness::run_catalog(exec, timings, negative_control), format),
        Command::Enumerate { n } => enumerate(n, format),
        Command::Suite {
            n,
            which,
            seed,
            samples,
            list,
        } => {
            if list {
                for id in harness::suite_ids() {
                    println!("{id}");
                }
                return ExitCode::SUCCESS;
            }
            match SuiteConfig::new(n, &which, seed, samples, format) {
                Ok(config) => finish(&harness::run_theorem_suite(&config, exec), format),
                Err(e) => input_error(e),
            }
        }
        Command::Check { file, claims } => match harness::check_user_file(&file, claims.as_deref()) {
            Ok(report) => finish(&[report], format),
            Err(e) => input_error(e),
        },
    }
}
