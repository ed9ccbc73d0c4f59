use std::collections::BTreeMap;

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};

use crate::experiment::RunRecord;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub fingerprint: String,
    pub runs: usize,
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator); 0 for a single run.
    pub std: f64,
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedFinal {
    pub seed: u64,
    pub gws: f64,
    pub wall_clock_s: f64,
}

/// Contents of `summary.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryFile {
    pub config: serde_json::Value,
    pub stats: SummaryStats,
    pub finals: Vec<SeedFinal>,
    pub wall_clock_s: f64,
}

/// Mean, sample std, min and max.
pub fn describe(values: &[f64]) -> Result<(f64, f64, f64, f64)> {
    if values.is_empty() {
        bail!("no values to summarize");
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let std = if values.len() > 1 {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok((mean, std, min, max))
}

pub fn stats_for(fingerprint: &str, values: &[f64]) -> Result<SummaryStats> {
    let (mean, std, min, max) = describe(values)?;
    Ok(SummaryStats {
        fingerprint: fingerprint.to_string(),
        runs: values.len(),
        mean,
        std,
        min,
        max,
    })
}

/// Final-gws statistics per fingerprint, ordered by fingerprint.
pub fn summarize(records: &[RunRecord]) -> Result<Vec<SummaryStats>> {
    if records.is_empty() {
        bail!("no run records to summarize");
    }
    let mut groups: BTreeMap<&str, Vec<f64>> = BTreeMap::new();
    for r in records {
        groups.entry(&r.fingerprint).or_default().push(r.final_gws);
    }
    groups.into_iter().map(|(fp, vals)| stats_for(fp, &vals)).collect()
}
