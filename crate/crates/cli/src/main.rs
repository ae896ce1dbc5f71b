use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod error;


#[derive(Parser)]
#[command(name = "sharpbound", version, about = "Characteristics, sharp bounds and exhaustive verification for digraphs, rooted trees and partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Digraph,
    Tree,
    Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Validity,
    Sharpness,
    Cases,
    TreePartition,
}

#[derive(Subcommand)]
enum Command {
    /// Print the characteristics of a digraph, rooted tree or partition.
    Invariants {
        /// Input document; `-` or absent reads standard input.
        input: Option<PathBuf>,
        /// Require the document to be of this kind.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Render a digraph document as Graphviz DOT.
    Dot {
        input: Option<PathBuf>,
    },
    /// Evaluate a bound from named parameters, e.g. `bound conj1 v=9 ccmax=3 sccmin=2`.
    Bound {
        /// conj1..conj5, partition-upper or partition-lower.
        conjecture: String,
        /// Parameters as key=value.
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run an exhaustive verification sweep.
    Verify {
        /// conj1..conj5, partition-upper or partition-lower (default conj5 for tree-partition).
        #[arg(long)]
        conj: Option<String>,
        /// Largest instance size to enumerate.
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "validity")]
        mode: ModeArg,
        /// Worker threads; the report does not depend on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Lift the enumeration caps (representation limits still apply).
        #[arg(long)]
        force_cap: bool,
    },
    /// Print the built-in witness catalogue for a case table.
    Witnesses {
        #[arg(long)]
        conj: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Invariants { input, kind, format } => commands::invariants(input.as_deref(), kind, format),
        Command::Dot { input } => commands::dot(input.as_deref()),
        Command::Bound {
            conjecture,
            params,
            format,
        } => commands::bound(&conjecture, &params, format),
        Command::Verify {
            conj,
            max_n,
            mode,
            jobs,
            out,
            format,
            force_cap,
        } => commands::verify(commands::VerifyArgs {
            conj: conj.as_deref(),
            max_n,
            mode,
            jobs,
            out: out.as_deref(),
            format,
            force_cap,
        }),
        Command::Witnesses { conj, format } => commands::witnesses(&conj, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sharpbound: {e}");
            e.exit_code()
        }
    }
}
