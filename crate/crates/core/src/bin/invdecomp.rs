use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use invdecomp::harness::{self, Command, FieldSel, Format, RunConfig};

/// Exact checks and decomposition pipelines for quaternion algebras with
/// involution over iterated Laurent series fields.
#[derive(Parser, Debug)]
#[command(name = "invdecomp", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// JSON input (presentation, algebra pair or witness).
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Random samples per gauge check.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Scramble moves in round-trip pipelines.
    #[arg(long, default_value_t = 10)]
    moves: usize,
    /// `q` or `fp:<p>`.
    #[arg(long, default_value = "q")]
    field: FieldSel,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cfg = RunConfig {
        command: cli.command,
        input: cli.input,
        seed: cli.seed,
        samples: cli.samples,
        moves: cli.moves,
        field: cli.field,
    };
    let outcome = harness::run(&cfg);
    let text = harness::render(&outcome, cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(outcome.status.exit_code() as u8)
}
