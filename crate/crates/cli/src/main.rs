use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cskit::{CliError, Format, GraphSource, Method, Output, SystemArg};
use cskit_tworow::EvacMethod;

#[derive(Parser)]
#[command(name = "cskit", version, about = "Crystal skeletons of standard Young tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build CS(λ) and print it as JSON or DOT.
    Build {
        /// Comma-separated parts, e.g. 3,2,1.
        shape: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
    },
    /// Check a graph against the GL_n, S_n or local axioms. Exits 1 on failure.
    Verify {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        shape: Option<String>,
        /// A graph document; `-` reads standard input.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "all")]
        system: SystemArg,
        /// Also print a JSON summary.
        #[arg(long)]
        json: bool,
    },
    /// Run every invariant check on all λ ⊢ n ≤ max_n.
    Suite {
        #[arg(default_value_t = 5)]
        max_n: usize,
        /// Also compare the golden figure files in this directory.
        #[arg(long)]
        seeded_figures: Option<PathBuf>,
    },
    /// Components of the restriction to [1, n-1], one per removable box.
    Branch { shape: String },
    /// Strongly connected components of CS(λ).
    Scc { shape: String },
    /// Lattice path tools for two-row shapes.
    Tworow {
        #[command(subcommand)]
        action: TwoRow,
    },
    /// Export the dual equivalence graph DE(λ).
    De {
        shape: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum TwoRow {
    /// Path, rcomp, outgoing edges and evacuation of a path (ddu…) or tableau (12/3).
    Show {
        input: String,
        #[arg(long)]
        evac: Option<EvacMethod>,
    },
    /// Compare the path model with the tableau skeleton for a shape λ₁,λ₂.
    Check { shape: String },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Build { shape, format, method } => cskit::cmd_build(&shape, format, method),
        Command::Verify { shape, input, system, json } => {
            let source = match (shape, input) {
                (Some(s), _) => GraphSource::Shape(s),
                (None, Some(p)) if p == "-" => {
                    let text = std::io::read_to_string(std::io::stdin()).map_err(|source| CliError::Io { path: "-".into(), source })?;
                    GraphSource::Json(text)
                }
                (None, Some(p)) => GraphSource::File(p),
                (None, None) => unreachable!("clap requires one of them"),
            };
            cskit::cmd_verify(&source, system, json)
        }
        Command::Suite { max_n, seeded_figures } => cskit::cmd_suite(max_n, seeded_figures.as_deref()),
        Command::Branch { shape } => cskit::cmd_branch(&shape),
        Command::Scc { shape } => cskit::cmd_scc(&shape),
        Command::Tworow { action: TwoRow::Show { input, evac } } => cskit::cmd_tworow_show(&input, evac),
        Command::Tworow { action: TwoRow::Check { shape } } => cskit::cmd_tworow_check(&shape),
        Command::De { shape, format } => cskit::cmd_de(&shape, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
