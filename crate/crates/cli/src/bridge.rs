use std::io::Write;

use paraq::bridge::{
    locality_report, non_explosion_certificate, superposition_formula, BridgeError,
};
use paraq::quantum::{chsh_s, ChshAngles};
use paraq::{Formula, TwoQubitState64, Valuation};
use serde::Serialize;

use crate::config::{Config, OutputFormat};
use crate::error::CliError;

fn bridge_err(e: BridgeError) -> CliError {
    match e {
        BridgeError::Semantics(s) => s.into(),
        other => CliError::Input(other.to_string()),
    }
}

pub fn report_cmd(
    out: &mut dyn Write,
    cfg: &Config,
    state: &TwoQubitState64,
    angles: ChshAngles<f64>,
) -> Result<u8, CliError> {
    let result = chsh_s(state, &angles, cfg.sign_pattern);
    let rep = locality_report(&result, &cfg.c1()).map_err(bridge_err)?;
    match cfg.output_format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rep).unwrap())?,
        OutputFormat::Csv => {
            writeln!(out, "query,status")?;
            for q in &rep.verdicts {
                writeln!(out, "\"{}\",{}", q.query, q.verdict.status())?;
            }
        }
        OutputFormat::Text => write!(out, "{rep}")?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct Certificate<'a> {
    formula: &'a Formula,
    fresh: &'a str,
    status: &'static str,
    valuation: Option<&'a Valuation>,
}

pub fn certificate_cmd(
    out: &mut dyn Write,
    cfg: &Config,
    formula: Option<Formula>,
    states: usize,
    fresh: &str,
) -> Result<u8, CliError> {
    if formula.is_none() && states == 0 {
        return Err(CliError::Input("--states must be at least 1".into()));
    }
    let f = formula.unwrap_or_else(|| superposition_formula(states));
    let (valuation, code) = match non_explosion_certificate(&f, fresh, &cfg.c1()) {
        Ok(v) => (Some(v), 0),
        Err(BridgeError::Unsatisfiable(_)) => (None, 1),
        Err(e) => return Err(bridge_err(e)),
    };
    let cert = Certificate {
        formula: &f,
        fresh,
        status: if valuation.is_some() {
            "certified"
        } else {
            "unsatisfiable"
        },
        valuation: valuation.as_ref(),
    };
    match cfg.output_format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&cert).unwrap())?,
        OutputFormat::Csv => {
            writeln!(out, "formula,value")?;
            if let Some(v) = &valuation {
                for (g, b) in v.entries() {
                    writeln!(out, "\"{g}\",{}", u8::from(*b))?;
                }
            }
        }
        OutputFormat::Text => match &valuation {
            Some(v) => {
                writeln!(out, "{} does not entail {fresh}", f)?;
                writeln!(out, "witness: {v}")?;
            }
            None => writeln!(
                out,
                "{f} is unsatisfiable in C1; explosion from it is vacuous"
            )?,
        },
    }
    Ok(code)
}
