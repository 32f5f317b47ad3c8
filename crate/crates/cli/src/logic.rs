use std::io::Write;
use std::path::Path;
use std::time::Instant;

use paraq::formula::Formula;
use paraq::lp::{truth_table, Connective3};
use paraq::parse::parse_formula_file;
use paraq::proofs::{check_derivation, parse_script, Justification};
use paraq::semantics::{Status, Valuation};
use serde::Serialize;

use crate::config::{Config, OutputFormat};
use crate::error::{read_file, CliError};

fn read_formulas(path: &Path) -> Result<Vec<Formula>, CliError> {
    let text = read_file(path)?;
    let located = parse_formula_file(&text)
        .map_err(|e| CliError::Input(format!("{}:{e}", path.display())))?;
    Ok(located.into_iter().map(|l| l.formula).collect())
}

pub fn parse_formula(text: &str) -> Result<Formula, CliError> {
    Formula::parse(text).map_err(|e| CliError::Input(format!("`{text}`: {e}")))
}

#[derive(Serialize)]
struct ParsedLine {
    line: usize,
    formula: Formula,
    node_count: usize,
    depth: usize,
    variables: Vec<String>,
}

pub fn parse_cmd(out: &mut dyn Write, cfg: &Config, path: &Path) -> Result<u8, CliError> {
    let text = read_file(path)?;
    let located = parse_formula_file(&text)
        .map_err(|e| CliError::Input(format!("{}:{e}", path.display())))?;
    let rows: Vec<ParsedLine> = located
        .into_iter()
        .map(|l| ParsedLine {
            line: l.line,
            node_count: l.formula.node_count(),
            depth: l.formula.depth(),
            variables: l.formula.variables(),
            formula: l.formula,
        })
        .collect();
    match cfg.output_format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).unwrap())?,
        OutputFormat::Csv => {
            writeln!(out, "line,formula,node_count,depth")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},\"{}\",{},{}",
                    r.line, r.formula, r.node_count, r.depth
                )?;
            }
        }
        OutputFormat::Text => {
            for r in &rows {
                writeln!(out, "{}: {}", r.line, r.formula)?;
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct DecideReport<'a> {
    query: String,
    status: Status,
    countermodel: Option<&'a Valuation>,
    branches_explored: u64,
    elapsed_ms: f64,
}

pub enum Query {
    Valid(String),
    Entails(std::path::PathBuf, String),
}

pub fn decide_cmd(
    out: &mut dyn Write,
    cfg: &Config,
    query: Query,
    timing: bool,
) -> Result<u8, CliError> {
    let (premises, conclusion) = match &query {
        Query::Valid(f) => (Vec::new(), parse_formula(f)?),
        Query::Entails(file, f) => (read_formulas(file)?, parse_formula(f)?),
    };
    let start = Instant::now();
    let verdict = cfg.c1().entails(&premises, &conclusion)?;
    let elapsed_ms = if timing {
        start.elapsed().as_secs_f64() * 1e3
    } else {
        0.0
    };
    let query_text = {
        let ps: Vec<String> = premises.iter().map(Formula::render).collect();
        format!("{{{}}} |= {}", ps.join(", "), conclusion)
    };
    let report = DecideReport {
        query: query_text,
        status: verdict.status(),
        countermodel: verdict.countermodel(),
        branches_explored: verdict.branches_explored,
        elapsed_ms,
    };
    match cfg.output_format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap())?,
        OutputFormat::Csv => {
            writeln!(out, "formula,value")?;
            if let Some(cm) = report.countermodel {
                for (f, v) in cm.entries() {
                    writeln!(out, "\"{f}\",{}", u8::from(*v))?;
                }
            }
        }
        OutputFormat::Text => {
            writeln!(out, "{}", report.status)?;
            writeln!(out, "query: {}", report.query)?;
            if let Some(cm) = report.countermodel {
                writeln!(out, "countermodel: {cm}")?;
            }
            writeln!(out, "branches explored: {}", report.branches_explored)?;
            if timing {
                writeln!(out, "elapsed: {:.3} ms", report.elapsed_ms)?;
            }
        }
    }
    Ok(if verdict.is_valid() { 0 } else { 1 })
}

pub fn prove_check_cmd(
    out: &mut dyn Write,
    err: &mut dyn Write,
    script: &Path,
    premises: Option<&Path>,
) -> Result<u8, CliError> {
    let text = read_file(script)?;
    let d =
        parse_script(&text).map_err(|e| CliError::Input(format!("{}: {e}", script.display())))?;
    // without a premises file, lines marked `premise` are the hypotheses
    let premises = match premises {
        Some(p) => read_formulas(p)?,
        None => d
            .lines
            .iter()
            .filter(|l| l.justification == Justification::Premise)
            .map(|l| l.formula.clone())
            .collect(),
    };
    match check_derivation(&d, &premises) {
        Ok(theorem) => {
            writeln!(out, "OK: {} lines, derived {theorem}", d.lines.len())?;
            Ok(0)
        }
        Err(e) => {
            writeln!(err, "{}: {e}", script.display())?;
            Ok(1)
        }
    }
}

pub fn truth_tables_cmd(out: &mut dyn Write, cfg: &Config) -> Result<u8, CliError> {
    let rows: Vec<_> = Connective3::ALL
        .iter()
        .flat_map(|&c| truth_table(c))
        .collect();
    match cfg.output_format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).unwrap())?,
        OutputFormat::Csv => {
            writeln!(out, "connective,a,b,value")?;
            for r in &rows {
                let b = r.b.map(|b| b.to_string()).unwrap_or_default();
                writeln!(out, "{},{},{b},{}", r.connective.name(), r.a, r.value)?;
            }
        }
        OutputFormat::Text => {
            for c in Connective3::ALL {
                writeln!(out, "{}", c.name())?;
                for r in truth_table(c) {
                    match r.b {
                        None => writeln!(out, "  {} | {}", r.a, r.value)?,
                        Some(b) => writeln!(out, "  {} {} | {}", r.a, b, r.value)?,
                    }
                }
            }
        }
    }
    Ok(0)
}
