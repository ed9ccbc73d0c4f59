//! Plain-text result files.
//!
//! * `trace.csv`: header `evals,gws`, one row per log point, values with 17
//!   significant digits.
//! * `set.tsv`: one solution per row, decision values, a tab, objective
//!   values (each group space separated). Also the population format read
//!   by `select`.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use f4m_core::algorithm::TracePoint;
use f4m_core::{EvaluatedSolution, Solution};

pub const TRACE_HEADER: &str = "evals,gws";

pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn join(values: &[f64]) -> String {
    values.iter().map(|&v| fmt17(v)).collect::<Vec<_>>().join(" ")
}

pub fn check_trace(trace: &[TracePoint<f64>]) -> Result<()> {
    for w in trace.windows(2) {
        if w[1].evals <= w[0].evals {
            bail!("trace evaluations not increasing at {}", w[1].evals);
        }
        if w[1].gws > w[0].gws {
            bail!(
                "trace increases from {} to {} at {} evaluations",
                w[0].gws,
                w[1].gws,
                w[1].evals
            );
        }
    }
    Ok(())
}

/// Renders a trace, refusing traces that are not non-increasing.
pub fn trace_to_csv(trace: &[TracePoint<f64>]) -> Result<String> {
    check_trace(trace)?;
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    for p in trace {
        writeln!(out, "{},{}", p.evals, fmt17(p.gws)).unwrap();
    }
    Ok(out)
}

pub fn parse_trace(text: &str) -> Result<Vec<TracePoint<f64>>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == TRACE_HEADER => {}
        other => bail!("bad trace header {other:?}, expected '{TRACE_HEADER}'"),
    }
    lines
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| {
            let (e, g) = l.split_once(',').with_context(|| format!("trace row {}: missing comma", i + 1))?;
            Ok(TracePoint {
                evals: e.trim().parse().with_context(|| format!("trace row {}", i + 1))?,
                gws: g.trim().parse().with_context(|| format!("trace row {}", i + 1))?,
            })
        })
        .collect()
}

pub fn read_trace(path: &Path) -> Result<Vec<TracePoint<f64>>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_trace(&text).with_context(|| format!("in {}", path.display()))
}

pub fn set_to_tsv(set: &[Solution]) -> String {
    let mut out = String::new();
    for s in set {
        writeln!(out, "{}\t{}", join(&s.decision), join(&s.objectives)).unwrap();
    }
    out
}

fn parse_group(text: &str, row: usize) -> Result<Vec<f64>> {
    text.split_whitespace()
        .map(|t| t.parse::<f64>().with_context(|| format!("set row {row}: bad number '{t}'")))
        .collect()
}

pub fn parse_set(text: &str) -> Result<Vec<Solution>> {
    let mut set = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (d, f) = line
            .split_once('\t')
            .with_context(|| format!("set row {}: missing tab separator", i + 1))?;
        let objectives = parse_group(f, i + 1)?;
        if objectives.is_empty() {
            bail!("set row {}: no objective values", i + 1);
        }
        set.push(EvaluatedSolution::new(parse_group(d, i + 1)?, objectives));
    }
    Ok(set)
}

pub fn read_set(path: &Path) -> Result<Vec<Solution>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_set(&text).with_context(|| format!("in {}", path.display()))
}
