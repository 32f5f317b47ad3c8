//! `paraq`: C1 decision procedure, proof checker, LP tables and CHSH tools.

mod bridge;
mod chsh;
mod config;
mod error;
mod logic;
mod util;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::chsh::{StateArg, StrategyArg};
use crate::config::{Config, OutputFormat, Overrides};
use crate::error::CliError;
use crate::logic::Query;
use crate::util::{parse_angle, parse_angles};

#[derive(Parser)]
#[command(
    name = "paraq",
    version,
    about = "Paraconsistent logic C1 and CHSH tools"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// TOML config file; flags override its keys.
    #[arg(long, global = true, env = "PARAQ_CONFIG")]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// conjunctive | disjunctive
    #[arg(long, global = true)]
    iff_mode: Option<String>,
    /// Cap on branching nodes (variables plus negations).
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// paper-eq4 | standard | max
    #[arg(long, global = true)]
    pattern: Option<String>,
    /// pair-offset | absolute
    #[arg(long, global = true)]
    angle_map: Option<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula file (one per line, `#` comments) and print it back.
    Parse { file: PathBuf },
    /// Decide validity or entailment in C1.
    Decide(DecideArgs),
    /// Check a line-oriented Hilbert proof script.
    ProveCheck {
        script: PathBuf,
        /// Premise file; defaults to the lines the script marks `premise`.
        #[arg(long)]
        premises: Option<PathBuf>,
    },
    /// Dump the three-valued connective tables.
    TruthTables,
    /// Two-qubit CHSH computations.
    #[command(subcommand)]
    Chsh(ChshCommand),
    /// Read CHSH outcomes as C1 theories.
    #[command(subcommand)]
    Bridge(BridgeCommand),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("query").required(true).args(["valid", "entails"]))]
struct DecideArgs {
    /// Formula to test for validity.
    #[arg(long, value_name = "FORMULA")]
    valid: Option<String>,
    /// Premise file; the conclusion follows as a positional argument.
    #[arg(long, value_name = "PREMISES", requires = "conclusion")]
    entails: Option<PathBuf>,
    conclusion: Option<String>,
    /// Measure wall time into `elapsed_ms` (otherwise reported as 0).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct StateOpts {
    #[arg(long, value_enum, default_value = "phi-plus")]
    state: StateArg,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    beta: f64,
}

#[derive(Subcommand)]
enum ChshCommand {
    /// Correlator E(a,b) and joint outcome probabilities.
    Expect {
        #[command(flatten)]
        state: StateOpts,
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        b: f64,
    },
    /// CHSH value S for four settings (default 0,pi/2,pi/4,3pi/4).
    S {
        #[command(flatten)]
        state: StateOpts,
        /// a,a',b,b'
        #[arg(long, value_parser = parse_angles, allow_hyphen_values = true)]
        angles: Option<paraq::ChshAngles64>,
    },
    /// Simulate the CHSH game.
    Game {
        #[arg(long, value_enum, default_value = "quantum-optimal")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 1_000_000)]
        rounds: u64,
        /// Settings for `--strategy custom`: a,a',b,b'
        #[arg(long, value_parser = parse_angles, allow_hyphen_values = true)]
        angles: Option<paraq::ChshAngles64>,
    },
    /// Inconsistency-degree surface over normalized angles.
    Scan {
        #[arg(long, default_value_t = 64)]
        grid: usize,
        /// Write the table here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BridgeCommand {
    /// Locality report for a CHSH outcome.
    Report {
        #[command(flatten)]
        state: StateOpts,
        #[arg(long, value_parser = parse_angles, allow_hyphen_values = true)]
        angles: Option<paraq::ChshAngles64>,
    },
    /// Non-explosion witness for a superposition conjunction or a formula.
    Certificate {
        #[arg(long, default_value_t = 2)]
        states: usize,
        #[arg(long, conflicts_with = "states")]
        formula: Option<String>,
        #[arg(long, default_value = paraq::bridge::FRESH)]
        fresh: String,
    },
}

fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let g = cli.global;
    let cfg = Config::load(
        g.config.as_deref(),
        Overrides {
            iff_mode: g.iff_mode,
            branch_budget: g.budget,
            sign_pattern: g.pattern,
            angle_map: g.angle_map,
            seed: g.seed,
            output_format: g.format,
        },
    )?;
    match cli.command {
        Command::Parse { file } => logic::parse_cmd(out, &cfg, &file),
        Command::Decide(d) => {
            let query = match (d.valid, d.entails, d.conclusion) {
                (Some(f), None, None) => Query::Valid(f),
                (None, Some(p), Some(c)) => Query::Entails(p, c),
                _ => {
                    return Err(CliError::Input(
                        "use --valid <FORMULA> or --entails <PREMISES> <FORMULA>".into(),
                    ))
                }
            };
            logic::decide_cmd(out, &cfg, query, d.timing)
        }
        Command::ProveCheck { script, premises } => {
            logic::prove_check_cmd(out, err, &script, premises.as_deref())
        }
        Command::TruthTables => logic::truth_tables_cmd(out, &cfg),
        Command::Chsh(c) => match c {
            ChshCommand::Expect { state, a, b } => {
                let s = chsh::build_state(state.state, state.alpha, state.beta)?;
                chsh::expect_cmd(out, &cfg, &s, a, b)
            }
            ChshCommand::S { state, angles } => {
                let s = chsh::build_state(state.state, state.alpha, state.beta)?;
                chsh::s_cmd(
                    out,
                    &cfg,
                    &s,
                    angles.unwrap_or_else(paraq::ChshAngles64::optimal),
                )
            }
            ChshCommand::Game {
                strategy,
                rounds,
                angles,
            } => chsh::game_cmd(out, &cfg, strategy, angles, rounds),
            ChshCommand::Scan { grid, out: dest } => {
                chsh::scan_cmd(out, &cfg, grid, dest.as_deref())
            }
        },
        Command::Bridge(b) => match b {
            BridgeCommand::Report { state, angles } => {
                let s = chsh::build_state(state.state, state.alpha, state.beta)?;
                bridge::report_cmd(
                    out,
                    &cfg,
                    &s,
                    angles.unwrap_or_else(paraq::ChshAngles64::optimal),
                )
            }
            BridgeCommand::Certificate {
                states,
                formula,
                fresh,
            } => {
                let formula = formula.as_deref().map(logic::parse_formula).transpose()?;
                bridge::certificate_cmd(out, &cfg, formula, states, &fresh)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = match run(cli, &mut out, &mut err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
