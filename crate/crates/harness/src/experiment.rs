use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use anyhow::{Context, Result};
use f4m_core::algorithm::{run_som_emoa, TracePoint};
use f4m_core::problems::{Problem, ProblemRegistry};
use f4m_core::selection::random_search_baseline;
use f4m_core::{gws, SolutionSet};
use rayon::prelude::*;

use crate::config::{AlgorithmName, ExperimentConfig};
use crate::io::{set_to_tsv, trace_to_csv};
use crate::summary::{stats_for, SeedFinal, SummaryFile};

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub fingerprint: String,
    pub seed: u64,
    pub trace: Vec<TracePoint<f64>>,
    pub final_set: SolutionSet,
    pub final_gws: f64,
    pub wall_clock_s: f64,
}

#[derive(Debug, Clone)]
pub struct ExperimentOutcome {
    /// `<out>/<fingerprint>`.
    pub dir: PathBuf,
    pub records: Vec<RunRecord>,
    pub summary: SummaryFile,
}

impl ExperimentOutcome {
    pub fn seed_dir(&self, seed: u64) -> PathBuf {
        self.dir.join(format!("seed_{seed}"))
    }
}

/// One repetition on an already-built problem. Random search has no
/// convergence history, so its trace is the single final point.
pub fn execute_run(config: &ExperimentConfig, problem: &dyn Problem<f64>, seed: u64) -> Result<RunRecord> {
    let start = Instant::now();
    let (trace, final_set, final_gws) = match config.algorithm.name {
        AlgorithmName::RandomSearch => {
            let set = random_search_baseline(problem, config.algorithm.evals, config.algorithm.k, seed)?;
            let g = gws(&set)?;
            let trace = vec![TracePoint { evals: config.algorithm.evals, gws: g }];
            (trace, set, g)
        }
        _ => {
            let out = run_som_emoa(problem, &config.run_config(seed))?;
            (out.trace, out.final_set, out.final_gws)
        }
    };
    Ok(RunRecord {
        fingerprint: config.fingerprint(),
        seed,
        trace,
        final_set,
        final_gws,
        wall_clock_s: start.elapsed().as_secs_f64(),
    })
}

fn write(path: &Path, contents: impl AsRef<[u8]>) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn write_weights(dir: &Path, problem: &dyn Problem<f64>) -> Result<()> {
    match problem.weights() {
        Some(w) => write(&dir.join("weights.txt"), w.to_text()),
        None => Ok(()),
    }
}

/// Runs every repetition of `config` and persists the results.
pub fn run_experiment(config: &ExperimentConfig, registry: &ProblemRegistry<f64>) -> Result<ExperimentOutcome> {
    let mut config = config.clone();
    config.validate(registry)?;
    let fingerprint = config.fingerprint();
    let dir = config.experiment.out.join(&fingerprint);
    std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    write(&dir.join("config.toml"), config.to_toml())?;

    let build = |seed: u64| -> Result<Arc<dyn Problem<f64>>> {
        let name = &config.problem.name;
        registry
            .build(name, &config.problem_params(seed)?)
            .with_context(|| format!("building problem '{name}'"))
    };
    let shared = if config.problem.weight_seed_per_run {
        None
    } else {
        let p = build(config.experiment.seed_base)?;
        write_weights(&dir, p.as_ref())?;
        Some(p)
    };

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = config.experiment.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool.build().context("starting worker pool")?;
    let start = Instant::now();
    let seeds: Vec<u64> = config.seeds().collect();
    let records = pool.install(|| {
        seeds
            .par_iter()
            .map(|&seed| -> Result<RunRecord> {
                let seed_dir = dir.join(format!("seed_{seed}"));
                std::fs::create_dir_all(&seed_dir).with_context(|| format!("creating {}", seed_dir.display()))?;
                let problem = match &shared {
                    Some(p) => Arc::clone(p),
                    None => {
                        let p = build(seed)?;
                        write_weights(&seed_dir, p.as_ref())?;
                        p
                    }
                };
                let record = execute_run(&config, problem.as_ref(), seed)?;
                write(&seed_dir.join("trace.csv"), trace_to_csv(&record.trace)?)?;
                write(&seed_dir.join("set.tsv"), set_to_tsv(&record.final_set))?;
                Ok(record)
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let finals: Vec<f64> = records.iter().map(|r| r.final_gws).collect();
    let summary = SummaryFile {
        config: serde_json::to_value(&config)?,
        stats: stats_for(&fingerprint, &finals)?,
        finals: records
            .iter()
            .map(|r| SeedFinal {
                seed: r.seed,
                gws: r.final_gws,
                wall_clock_s: r.wall_clock_s,
            })
            .collect(),
        wall_clock_s: start.elapsed().as_secs_f64(),
    };
    write(&dir.join("summary.json"), serde_json::to_string_pretty(&summary)?)?;
    Ok(ExperimentOutcome { dir, records, summary })
}
