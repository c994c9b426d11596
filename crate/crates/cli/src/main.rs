mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use idealrough::{Directedness, EmptyMeet, Error};

/// Ideal-based rough approximation over finite models.
#[derive(Parser, Debug)]
#[command(name = "idealrough", version, about)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Directedness clause for σ-ideals.
    #[arg(long, value_enum, default_value_t = Mode::Weak, global = true)]
    pub mode: Mode,
    /// Do not admit the empty set as a σ-ideal.
    #[arg(long, global = true)]
    pub no_empty: bool,
    /// Value of <x> when no predecessor neighborhood contains x.
    #[arg(long, value_enum, default_value_t = Meet::Empty, global = true)]
    pub empty_meet: Meet,
    /// Seed for seeded generators.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Also write the JSON result to this file.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Read Ca1 literally as `Cᵃ11 ∧ Cᵃ00`.
    #[arg(long, global = true)]
    pub ca1_literal: bool,
}

impl Global {
    pub fn directedness(&self) -> Directedness {
        match self.mode {
            Mode::Strict => Directedness::Strict,
            Mode::Weak => Directedness::Weak,
        }
    }

    pub fn meet(&self) -> EmptyMeet {
        match self.empty_meet {
            Meet::Empty => EmptyMeet::Empty,
            Meet::Universe => EmptyMeet::Universe,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Strict,
    Weak,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Meet {
    Empty,
    Universe,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaArg {
    Min,
    Ca,
    File,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Relation properties, pairwise bounds and neighborhoods.
    Inspect {
        document: PathBuf,
        /// Emit JSON instead of tables.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate σ-ideals with a clause-by-clause audit.
    Ideals { document: PathBuf },
    /// Lower and upper approximation of one set.
    Approx {
        document: PathBuf,
        /// Operator tag: kappa, iad, iad_prime, iasd, gosi, gosih, strong, antichain.
        #[arg(long)]
        op: String,
        /// Named set of the document, or a comma list of labels.
        #[arg(long)]
        set: String,
        /// Family holding the ideal (lattice ideal, or σ-ideal of the power set for gosih).
        #[arg(long)]
        ideal: Option<String>,
        /// Family holding the antichain of σ-ideals.
        #[arg(long)]
        antichain: Option<String>,
        /// Family holding the ring or algebra for iad and iasd (default: power set).
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Approximations in a discrete space with actual points.
    Mereo {
        document: PathBuf,
        /// Comma list overriding the document's actual points.
        #[arg(long)]
        actual_points: Option<String>,
        #[arg(long, default_value = "CG")]
        scheme: String,
        #[arg(long, value_enum, default_value_t = GammaArg::Min)]
        gamma: GammaArg,
        /// Named set or comma list; omit to report structure only.
        #[arg(long)]
        set: Option<String>,
        /// Family holding one actual clan as regions; default: every actual clan.
        #[arg(long)]
        clan: Option<String>,
    },
    /// Run a law suite.
    Verify {
        /// Suite id, or `all`.
        #[arg(long)]
        suite: String,
        /// Use the exhaustive generator.
        #[arg(long, conflicts_with = "count")]
        exhaustive: bool,
        /// Seeded instance count.
        #[arg(long)]
        count: Option<usize>,
        /// Restrict to these law ids.
        #[arg(long = "law")]
        laws: Vec<String>,
    },
}

/// Result of a command: JSON for stdout or the report file, text for stdout, and
/// whether every checked law held.
pub struct Output {
    pub json: serde_json::Value,
    pub text: Option<String>,
    pub laws_hold: bool,
}

fn run(cli: Cli) -> Result<Output, Error> {
    let g = &cli.global;
    match cli.command {
        Command::Inspect { document, json } => commands::inspect(g, &document, json),
        Command::Ideals { document } => commands::ideals(g, &document),
        Command::Approx {
            document,
            op,
            set,
            ideal,
            antichain,
            algebra,
        } => commands::approx(
            g,
            &document,
            &commands::ApproxArgs {
                op: &op,
                set: &set,
                ideal: ideal.as_deref(),
                antichain: antichain.as_deref(),
                algebra: algebra.as_deref(),
            },
        ),
        Command::Mereo {
            document,
            actual_points,
            scheme,
            gamma,
            set,
            clan,
        } => commands::mereo(
            g,
            &document,
            &commands::MereoArgs {
                actual_points: actual_points.as_deref(),
                scheme: &scheme,
                gamma,
                set: set.as_deref(),
                clan: clan.as_deref(),
            },
        ),
        Command::Verify {
            suite,
            exhaustive,
            count,
            laws,
        } => commands::verify(g, &suite, exhaustive, count, &laws),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let report = cli.global.report.clone();
    match run(cli) {
        Ok(out) => {
            let rendered = serde_json::to_string_pretty(&out.json).expect("output serializes");
            if let Some(path) = report {
                if let Err(e) = std::fs::write(&path, format!("{rendered}\n")) {
                    eprintln!("error[E304]: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            let body = out.text.unwrap_or_else(|| format!("{rendered}\n"));
            // ignore EPIPE
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.laws_hold {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(1)
        }
    }
}
