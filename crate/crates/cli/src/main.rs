//! `acg`: analyze permutation groups, verify the anticentral theorems over a
//! corpus, and construct standard test groups.

mod analyze;
mod construct;
mod outcome;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use outcome::Outcome;

#[derive(Parser)]
#[command(name = "acg", version, about = "Anticentral elements in finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize one group and its anticentral classes.
    Analyze {
        /// Group file.
        file: PathBuf,
        /// Restrict the analysis to one element, in cycle notation.
        #[arg(long)]
        element: Option<String>,
        /// Append the character table export.
        #[arg(long)]
        emit_chartab: bool,
        /// Write the report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites over a directory of group files and/or the builtin corpus.
    Verify {
        /// Directory of group files.
        dir: Option<PathBuf>,
        /// Include the builtin corpus.
        #[arg(long)]
        builtin: bool,
        /// Comma-separated suite ids; all suites when omitted.
        #[arg(long)]
        suite: Option<String>,
        /// Worker threads across groups.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Largest group order for structural suites.
        #[arg(long)]
        max_order: Option<u64>,
        /// Largest group order for character-table suites.
        #[arg(long)]
        chartab_max_order: Option<u64>,
        /// Write the aggregate report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a group from a family and write it with a manifest sidecar.
    Construct {
        /// Family name.
        family: String,
        /// Parameters as `--key value` or `key=value`, plus `-o <file>`.
        #[arg(num_args = 0.., allow_hyphen_values = true, trailing_var_arg = true)]
        params: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze {
            file,
            element,
            emit_chartab,
            out,
        } => analyze::run(&file, element.as_deref(), emit_chartab, out.as_deref()),
        Command::Verify {
            dir,
            builtin,
            suite,
            jobs,
            max_order,
            chartab_max_order,
            out,
        } => verify::run(verify::Options {
            dir,
            builtin,
            suites: suite,
            jobs,
            max_order,
            chartab_max_order,
            out,
        }),
        Command::Construct { family, params } => construct::run(&family, &params),
    };
    let outcome = outcome.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        Outcome::InputError
    });
    ExitCode::from(outcome as u8)
}
