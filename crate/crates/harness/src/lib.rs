//! Batch experiments for the few-for-many algorithms in `f4m-core`.
//!
//! An [`ExperimentConfig`] (TOML, every field defaulted) names a registered
//! problem, an algorithm variant and a repetition protocol.
//! [`run_experiment`] executes the repetitions on a worker pool and writes
//!
//! ```text
//! <out>/<fingerprint>/config.toml
//! <out>/<fingerprint>/summary.json
//! <out>/<fingerprint>/weights.txt
//! <out>/<fingerprint>/seed_<s>/trace.csv
//! <out>/<fingerprint>/seed_<s>/set.tsv
//! ```
//!
//! The fingerprint is a hash of the resolved configuration without its
//! output location or thread count, so identical experiments share a
//! directory wherever they are run.

pub mod config;
pub mod experiment;
pub mod io;
pub mod summary;

pub use config::{AlgorithmName, ExperimentConfig};
pub use experiment::{execute_run, run_experiment, ExperimentOutcome, RunRecord};
pub use summary::{summarize, SummaryFile, SummaryStats};
