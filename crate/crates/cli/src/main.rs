use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use minkq_cli::{run_job, validate_config, CliError};

/// Geometry and confined quantum mechanics on surfaces in Minkowski 3-space.
#[derive(Parser, Debug)]
#[command(name = "minkq", version)]
struct Args {
    /// JSON job description (a previous summary.json also works)
    #[arg(long)]
    config: PathBuf,
    /// directory for the CSV tables and summary.json
    #[arg(long, default_value = "out")]
    out_dir: PathBuf,
    /// check the config and exit
    #[arg(long)]
    validate_only: bool,
    #[arg(long)]
    quiet: bool,
}

fn fail(e: &CliError) -> ExitCode {
    for line in e.report() {
        eprintln!("{line}");
    }
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.validate_only {
        return match validate_config(&args.config) {
            Ok(d) if d.is_empty() => {
                if !args.quiet {
                    println!("{}: ok", args.config.display());
                }
                ExitCode::SUCCESS
            }
            Ok(d) => fail(&CliError::Invalid(d)),
            Err(e) => fail(&e),
        };
    }
    match run_job(&args.config, &args.out_dir) {
        Ok(report) => {
            if !args.quiet {
                for (t, f) in report.tables.iter().zip(&report.files) {
                    println!("wrote {} ({} rows)", f.display(), t.rows.len());
                }
                println!("wrote {}", report.summary_path.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}
