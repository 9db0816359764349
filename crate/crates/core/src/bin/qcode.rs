use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qcode::css::DEFAULT_MAX_WEIGHT;
use qcode::report;
use qcode::specfile::SpecFile;
use qcode::Error;

#[derive(Parser)]
#[command(name = "qcode", version, about = "Build, prune and check CSS codes from spec files")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest logical weight searched when computing distances.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_WEIGHT)]
    max_weight: usize,

    /// Worker threads; all cores when unset.
    #[arg(long, global = true, env = "QCODE_THREADS")]
    threads: Option<usize>,

    /// Exit with status 4 when a gate is invalid.
    #[arg(long, global = true)]
    strict: bool,

    /// Directory for exported files.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the code and report its parameters and locality.
    Build { spec: PathBuf },
    /// Exact distance up to --max-weight.
    Distance { spec: PathBuf },
    /// Rank the prunings described by the [search] block.
    PruneSearch { spec: PathBuf },
    /// Check the circuit described by the [gate] block.
    VerifyGate { spec: PathBuf },
    /// Write check matrices, Tanner graph and circuit files to --out.
    Export { spec: PathBuf },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::ParseAt { .. } => 2,
        Error::Commutation { .. } => 3,
        _ => 1,
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Precondition(e.to_string()))?;
    }
    let path = match &cli.command {
        Command::Build { spec }
        | Command::Distance { spec }
        | Command::PruneSearch { spec }
        | Command::VerifyGate { spec }
        | Command::Export { spec } => spec,
    };
    let spec = SpecFile::load(path)?;
    let built = spec.build()?;
    let mut status = 0;
    match &cli.command {
        Command::Build { .. } => print!("{}", report::build_report(&spec, &built)),
        Command::Distance { .. } => print!("{}", report::distance_report(&spec, &built, cli.max_weight)),
        Command::PruneSearch { .. } => print!("{}", report::search_report(&spec, &built)?.0),
        Command::VerifyGate { .. } => {
            let run = report::gate_run(&spec, &built)?;
            print!("{}", run.text);
            if cli.strict && !run.report.valid {
                status = 4;
            }
        }
        Command::Export { .. } => {
            let dir = cli.out.as_deref().unwrap_or(Path::new("."));
            for p in report::export(&spec, &built, dir)? {
                println!("{}", p.display());
            }
            return Ok(0);
        }
    }
    if let Some(dir) = &cli.out {
        report::export(&spec, &built, dir)?;
    }
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
