use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qalg::commands::{self, ConstructArgs};
use qalg::selftest::run_selftest;
use qalg::{CliError, RunOptions};

/// Exact-arithmetic toolkit for finite dimensional quiver algebras.
#[derive(Parser)]
#[command(name = "qalg", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized searches (falls back to QALG_SEED, then 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Bound for order searches.
    #[arg(long, global = true, default_value_t = 64)]
    bound: u64,
    /// Attempt budget for randomized form and witness searches.
    #[arg(long, global = true, default_value_t = 64)]
    attempts: u32,
}

impl Common {
    fn options(&self) -> RunOptions {
        let seed = self.seed.or_else(|| {
            std::env::var("QALG_SEED").ok().and_then(|s| s.parse().ok())
        });
        RunOptions {
            seed: seed.unwrap_or(0),
            bound: self.bound,
            attempts: self.attempts,
            json: self.json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, radical layers, socle, connectedness, Frobenius status.
    Info {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Dynkin / extended Dynkin type with the definiteness certificate.
    Type {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Nakayama automorphism, its order, outer order, and inner witness.
    Nakayama {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Build a derived algebra and emit it in the same file format.
    Construct {
        /// skew|smash2|veronese2|trivext|twisted-trivext|beilinson|basic|double
        kind: String,
        file: PathBuf,
        /// Automorphism spec (JSON) for twisted-trivext.
        #[arg(long)]
        sigma: Option<String>,
        /// Generator spec (JSON) or the word `nakayama`, for skew.
        #[arg(long)]
        generator: Option<String>,
        /// Order of the cyclic group for skew (computed when omitted).
        #[arg(long)]
        order: Option<usize>,
        /// Output path (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// The finite-generation verdict with its reason trail.
    Fg {
        file: Option<PathBuf>,
        /// Classify every .json file in a directory.
        #[arg(long)]
        batch: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the invariant corpus and print one line per property.
    Selftest {
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Info { file, common } => {
            let opts = common.options();
            let report = commands::cmd_info(&file, opts)?;
            println!("{}", report.render(opts.json));
        }
        Command::Type { file, common } => {
            let opts = common.options();
            let report = commands::cmd_type(&file, opts)?;
            println!("{}", report.render(opts.json));
        }
        Command::Nakayama { file, common } => {
            let opts = common.options();
            let report = commands::cmd_nakayama(&file, opts)?;
            println!("{}", report.render(opts.json));
        }
        Command::Construct { kind, file, sigma, generator, order, output, common } => {
            let opts = common.options();
            let args = ConstructArgs { sigma, generator, order };
            let (outfile, report) = commands::cmd_construct(&kind, &file, &args, opts)?;
            let text = serde_json::to_string_pretty(&outfile)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            match output {
                Some(path) => {
                    std::fs::write(&path, text.as_bytes()).map_err(|e| {
                        CliError::Parse(format!("cannot write {}: {e}", path.display()))
                    })?;
                    eprintln!("{}", report.render(opts.json));
                }
                None => println!("{text}"),
            }
        }
        Command::Fg { file, batch, common } => {
            let opts = common.options();
            match (file, batch) {
                (Some(path), None) => {
                    let report = commands::cmd_fg(&path, opts)?;
                    println!("{}", report.render(opts.json));
                }
                (None, Some(dir)) => {
                    for (name, report) in commands::cmd_fg_batch(&dir, opts)? {
                        println!("== {name}");
                        println!("{}", report.render(opts.json));
                    }
                }
                _ => {
                    return Err(CliError::Parse(
                        "fg needs a file argument or --batch DIR".into(),
                    ))
                }
            }
        }
        Command::Selftest { common } => {
            let opts = common.options();
            let outcome = run_selftest(opts);
            for line in &outcome.lines {
                println!("{line}");
            }
            if opts.json {
                println!("{}", outcome.report.render(true));
            }
            if !outcome.all_passed {
                return Err(CliError::Internal("selftest failed".into()));
            }
        }
    }
    Ok(())
}
