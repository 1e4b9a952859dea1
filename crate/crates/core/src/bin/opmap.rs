use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use orthopreserve::cli::{self, OutputFormat};

#[derive(Parser)]
#[command(name = "opmap", version, about = "Classify orthogonality-preserving real-linear maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a map file, or every *.json file in a directory.
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = cli::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = cli::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Write a canonical orthogonality-preserving isometry.
    Synth {
        #[arg(long)]
        dim_h: usize,
        #[arg(long)]
        dim_k: usize,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        sigma: Option<Vec<i8>>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare the decision with the sampling oracle.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = cli::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = cli::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = cli::DEFAULT_TOL)]
        tol: f64,
    },
    /// Build the corrector map of an orthogonality-preserving map.
    Corrector {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = cli::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = cli::DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { cli::EXIT_USAGE } else { cli::EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let (output, format) = match args.command {
        Command::Classify { input, tol, seed, text, .. } => {
            (cli::cmd_classify(&input, tol, seed), if text { OutputFormat::Text } else { OutputFormat::Json })
        }
        Command::Synth { dim_h, dim_k, s, sigma, seed, out } => {
            (cli::cmd_synth(dim_h, dim_k, s, sigma, seed, &out), OutputFormat::Json)
        }
        Command::Check { input, samples, seed, tol } => (cli::cmd_check(&input, samples, seed, tol), OutputFormat::Json),
        Command::Corrector { input, out, tol, seed } => (cli::cmd_corrector(&input, &out, tol, seed), OutputFormat::Json),
    };
    let rendered = cli::render(&output.report, format);
    if output.code == cli::EXIT_OK || output.code == cli::EXIT_DISAGREEMENT {
        println!("{rendered}");
    } else {
        eprintln!("{rendered}");
    }
    ExitCode::from(output.code as u8)
}
