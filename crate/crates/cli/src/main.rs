use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nmgraph::io::MatrixFormat;
use nmgraph_cli::{BenchOptions, CliResult, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "nmgraph",
    version,
    about = "Neighbourhood matrices of simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dense,
    Mm,
}

#[derive(Subcommand)]
enum Command {
    /// Build the neighbourhood matrix of an edge list.
    Compute {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "dense")]
        format: Format,
    },
    /// Recover the edge list from a matrix file (dense or Matrix Market).
    Reconstruct {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the structural report of an edge list as JSON.
    Analyze { input: PathBuf },
    /// Run the invariant suite on a graph or a seeded random corpus.
    Verify {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Largest vertex count in the random corpus.
        #[arg(long, default_value_t = 32)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check a corrupted matrix; exits 1 when the suite catches it.
        #[arg(long)]
        self_test: bool,
    },
    /// Time both triangle-counting paths on a random graph.
    Bench {
        #[arg(long, default_value_t = 1024)]
        size: usize,
        /// Expected average degree.
        #[arg(long, default_value_t = 8.0)]
        density: f64,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> CliResult {
    let stdout = io::stdout();
    let out = &mut stdout.lock();
    match cli.command {
        Command::Compute {
            input,
            output,
            format,
        } => {
            let format = match format {
                Format::Dense => MatrixFormat::Dense,
                Format::Mm => MatrixFormat::MatrixMarket,
            };
            nmgraph_cli::compute(&input, output.as_deref(), format, out)
        }
        Command::Reconstruct { input, output } => {
            nmgraph_cli::reconstruct(&input, output.as_deref(), out)
        }
        Command::Analyze { input } => nmgraph_cli::analyze(&input, out),
        Command::Verify {
            input,
            trials,
            size,
            seed,
            self_test,
        } => {
            let opts = VerifyOptions {
                trials,
                size,
                seed,
                self_test,
            };
            nmgraph_cli::verify(input.as_deref(), &opts, out)
        }
        Command::Bench {
            size,
            density,
            reps,
            seed,
        } => {
            let opts = BenchOptions {
                size,
                degree: density,
                repetitions: reps,
                seed,
            };
            nmgraph_cli::bench(&opts, out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("nmgraph: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
