use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use num_complex::Complex64;
use paraq::quantum::{
    bell_phi_plus, chsh_s, entangled_state, epr_pair, expectation, joint_probabilities,
    play_chsh_game, scan_surface, ChshAngles, Strategy,
};
use paraq::TwoQubitState64;
use serde::Serialize;

use crate::config::{Config, OutputFormat};
use crate::error::CliError;
use crate::util::sig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateArg {
    /// (|00⟩ + |11⟩)/√2
    PhiPlus,
    /// (|00⟩ − |11⟩)/√2, the anticorrelated pair in the X basis
    Epr,
    /// |00⟩
    Product,
    /// α|00⟩ + β|11⟩ from --alpha/--beta, renormalized
    Entangled,
}

pub fn build_state(kind: StateArg, alpha: f64, beta: f64) -> Result<TwoQubitState64, CliError> {
    Ok(match kind {
        StateArg::PhiPlus => bell_phi_plus(),
        StateArg::Epr => epr_pair(),
        StateArg::Product => TwoQubitState64::basis(false, false),
        StateArg::Entangled => {
            entangled_state(Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0))?
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    QuantumOptimal,
    ClassicalBest,
    Custom,
}

fn json(out: &mut dyn Write, v: &impl Serialize) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).unwrap())?;
    Ok(())
}

#[derive(Serialize)]
struct ExpectReport {
    theta_a: f64,
    theta_b: f64,
    expectation: f64,
    /// P(++), P(+−), P(−+), P(−−)
    probabilities: [f64; 4],
}

pub fn expect_cmd(
    out: &mut dyn Write,
    cfg: &Config,
    state: &TwoQubitState64,
    theta_a: f64,
    theta_b: f64,
) -> Result<u8, CliError> {
    let r = ExpectReport {
        theta_a,
        theta_b,
        expectation: expectation(state, theta_a, theta_b),
        probabilities: joint_probabilities(state, theta_a, theta_b),
    };
    match cfg.output_format {
        OutputFormat::Json => json(out, &r)?,
        OutputFormat::Csv => {
            writeln!(out, "theta_a,theta_b,E,P++,P+-,P-+,P--")?;
            let p = r.probabilities.map(|x| sig(x, 9));
            writeln!(
                out,
                "{},{},{},{}",
                sig(theta_a, 9),
                sig(theta_b, 9),
                sig(r.expectation, 9),
                p.join(",")
            )?;
        }
        OutputFormat::Text => {
            writeln!(out, "E = {}", sig(r.expectation, 9))?;
            let p = r.probabilities.map(|x| sig(x, 9));
            writeln!(
                out,
                "P(++) = {}  P(+-) = {}  P(-+) = {}  P(--) = {}",
                p[0], p[1], p[2], p[3]
            )?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct SReport {
    pattern: String,
    angles: ChshAngles<f64>,
    correlators: [f64; 4],
    s_value: f64,
    degree: f64,
}

pub fn s_cmd(
    out: &mut dyn Write,
    cfg: &Config,
    state: &TwoQubitState64,
    angles: ChshAngles<f64>,
) -> Result<u8, CliError> {
    let r = chsh_s(state, &angles, cfg.sign_pattern);
    let rep = SReport {
        pattern: cfg.sign_pattern.to_string(),
        angles,
        correlators: r.correlators,
        s_value: r.s_value,
        degree: r.degree,
    };
    match cfg.output_format {
        OutputFormat::Json => json(out, &rep)?,
        OutputFormat::Csv => {
            writeln!(out, "E_ab,E_ab',E_a'b,E_a'b',S,D")?;
            let e = rep.correlators.map(|x| sig(x, 9));
            writeln!(
                out,
                "{},{},{}",
                e.join(","),
                sig(rep.s_value, 9),
                sig(rep.degree, 9)
            )?;
        }
        OutputFormat::Text => {
            let e = rep.correlators.map(|x| sig(x, 9));
            writeln!(
                out,
                "E(a,b) = {}  E(a,b') = {}  E(a',b) = {}  E(a',b') = {}",
                e[0], e[1], e[2], e[3]
            )?;
            writeln!(out, "S = {} ({})", sig(rep.s_value, 9), rep.pattern)?;
            writeln!(out, "D = {}", sig(rep.degree, 9))?;
        }
    }
    Ok(0)
}

pub fn game_cmd(
    out: &mut dyn Write,
    cfg: &Config,
    strategy: StrategyArg,
    angles: Option<ChshAngles<f64>>,
    rounds: u64,
) -> Result<u8, CliError> {
    let strategy = match (strategy, angles) {
        (StrategyArg::QuantumOptimal, _) => Strategy::QuantumOptimal,
        (StrategyArg::ClassicalBest, _) => Strategy::ClassicalBest,
        (StrategyArg::Custom, Some(a)) => Strategy::Custom(a),
        (StrategyArg::Custom, None) => {
            return Err(CliError::Input("--strategy custom needs --angles".into()))
        }
    };
    let summary = play_chsh_game(strategy, rounds, cfg.seed)?;
    match cfg.output_format {
        OutputFormat::Json => json(out, &summary)?,
        OutputFormat::Csv => {
            writeln!(out, "strategy,rounds,seed,wins,win_rate")?;
            writeln!(
                out,
                "{},{},{},{},{}",
                summary.strategy,
                summary.rounds,
                summary.seed,
                summary.wins,
                sig(summary.win_rate, 9)
            )?;
        }
        OutputFormat::Text => {
            writeln!(out, "strategy: {}", summary.strategy)?;
            writeln!(out, "rounds: {}  seed: {}", summary.rounds, summary.seed)?;
            writeln!(out, "wins: {}", summary.wins)?;
            writeln!(out, "win rate: {}", sig(summary.win_rate, 9))?;
        }
    }
    Ok(0)
}

pub fn scan_cmd(
    out: &mut dyn Write,
    cfg: &Config,
    grid: usize,
    dest: Option<&Path>,
) -> Result<u8, CliError> {
    let points = scan_surface::<f64>(grid, cfg.angle_map)?;
    let mut file;
    let sink: &mut dyn Write = match dest {
        Some(p) => {
            file = BufWriter::new(
                File::create(p)
                    .map_err(|e| CliError::Input(format!("cannot create {}: {e}", p.display())))?,
            );
            &mut file
        }
        None => out,
    };
    if cfg.output_format == OutputFormat::Json {
        json(sink, &points)?;
    } else {
        writeln!(sink, "x,y,S,D")?;
        for p in &points {
            writeln!(
                sink,
                "{},{},{},{}",
                sig(p.x, 9),
                sig(p.y, 9),
                sig(p.s, 9),
                sig(p.d, 9)
            )?;
        }
    }
    sink.flush()?;
    Ok(0)
}
