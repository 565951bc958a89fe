use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use twistlab::{eval, parse, parse_word, run_suite};
use twistlab_core::bundle::chern_oracle;
use twistlab_core::twistcore::{
    chern_of_word, minimality_report, obstruction_certificate, FreeGroupTwist, LetterBundle,
};

/// Exact checks for the twist over the irrational-rotation groupoid.
#[derive(Parser)]
#[command(name = "twistlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an element expression and print its canonical form.
    Eval { expr: String },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record elapsed_ms as 0 so reports are byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print the obstruction certificate of one grading.
    Certify {
        #[arg(long)]
        word: String,
    },
    /// Largest gap in the orbit of 0 under the golden rotation.
    Orbit {
        #[arg(long, default_value_t = 100_000)]
        iterations: usize,
    },
}

const FAILURE: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Eval { expr } => {
            let parsed = match parse(&expr) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(USAGE);
                }
            };
            match eval(&parsed) {
                Ok(v) => {
                    println!("{v}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{}", e.located(&expr));
                    ExitCode::from(FAILURE)
                }
            }
        }
        Command::Verify {
            suite,
            seed,
            samples,
            json,
            no_timing,
        } => {
            let mut report = match run_suite(&suite, seed, samples) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(USAGE);
                }
            };
            if no_timing {
                report.elapsed_ms = 0;
            }
            match json {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, report.to_json()) {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(USAGE);
                    }
                    println!("{}", report.summary());
                }
                None => print!("{}", report.to_json()),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("{}", report.summary());
                ExitCode::from(FAILURE)
            }
        }
        Command::Certify { word } => {
            let w = match parse_word(&word) {
                Ok(w) => w,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(USAGE);
                }
            };
            let k = obstruction_certificate(&FreeGroupTwist::full(), &w)
                .expect("the full twist contains every grading");
            let letters: i64 = w
                .letters()
                .iter()
                .map(|l| chern_oracle(&LetterBundle::of(Some(*l)).bundle))
                .sum();
            println!(
                "word {w}: certificate {k}, chern {}, letter sum {letters}",
                chern_of_word(&w)
            );
            if k == chern_of_word(&w) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(FAILURE)
            }
        }
        Command::Orbit { iterations } => {
            if iterations == 0 {
                eprintln!("--iterations must be positive");
                return ExitCode::from(USAGE);
            }
            let r = minimality_report(iterations);
            println!(
                "N = {}: max_gap {:e}, bound {:e}, {}",
                r.iterations,
                r.max_gap,
                r.bound,
                if r.passed { "PASS" } else { "FAIL" }
            );
            if r.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(FAILURE)
            }
        }
    }
}
