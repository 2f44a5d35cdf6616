use clap::{Args, Parser, Subcommand};
use qhe_cli::commands::{execute, CommandKind, Overrides};
use qhe_cli::config::OutputFormat;
use qhe_cli::CliError;
use std::path::PathBuf;
use std::process::ExitCode;

/// Parameter sweeps and cycle reports for multi-level quantum Otto engines.
#[derive(Parser)]
#[command(name = "qhe", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rasterize the (r1l, r2l, r2h) ratio space: regions, theta, kappa, looseness
    ScanRegion3(RunArgs),
    /// Sweep the cold control point of the driven Lambda-system against a fixed hot point
    ScanDark(RunArgs),
    /// Net work, heat and efficiency as the hot temperature sweeps a grid
    WorkCurve(RunArgs),
    /// Exact vs high-temperature critical ratio along a cold-temperature ladder
    LimitStudy(RunArgs),
    /// Full JSON report for a single cycle
    CycleReport(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Path to the JSON config document
    #[arg(long)]
    config: PathBuf,
    /// Output file (defaults to the config's `out` field, else stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format (overrides the config)
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Seed recorded in the output metadata (overrides the config)
    #[arg(long)]
    seed: Option<u64>,
}

fn run(kind: CommandKind, args: &RunArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| CliError::config(format!("reading {}: {e}", args.config.display())))?;
    let overrides = Overrides {
        out: args.out.clone(),
        format: args.format,
        seed: args.seed,
    };
    execute(kind, &text, &overrides)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, args) = match &cli.command {
        Command::ScanRegion3(a) => (CommandKind::ScanRegion3, a),
        Command::ScanDark(a) => (CommandKind::ScanDark, a),
        Command::WorkCurve(a) => (CommandKind::WorkCurve, a),
        Command::LimitStudy(a) => (CommandKind::LimitStudy, a),
        Command::CycleReport(a) => (CommandKind::CycleReport, a),
    };
    match run(kind, args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qhe: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
