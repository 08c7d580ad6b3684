use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use lebdecomp::cli::{run, Command, Format, RunConfig, ToleranceOverrides};

/// Lebesgue-type decomposition and related operations on PSD matrices.
#[derive(Parser)]
#[command(name = "lebdecomp", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Input JSON files.
    inputs: Vec<PathBuf>,
    /// Vector for rn-witness: a JSON array, or @path.
    #[arg(long)]
    y: Option<String>,
    #[arg(long, env = "LEBDECOMP_TOL_RANK")]
    tol_rank: Option<f64>,
    #[arg(long)]
    tol_abs: Option<f64>,
    #[arg(long)]
    tol_psd: Option<f64>,
    #[arg(long)]
    tol_conv: Option<f64>,
    /// Write the result here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = RunConfig {
        command: args.command,
        inputs: args.inputs,
        vector: args.y,
        tolerance: ToleranceOverrides {
            rel_rank: args.tol_rank,
            abs_zero: args.tol_abs,
            psd_slack: args.tol_psd,
            conv_tol: args.tol_conv,
        },
        output: args.output,
        format: args.format,
    };
    let outcome = run(&config);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.exit_code as u8)
}
