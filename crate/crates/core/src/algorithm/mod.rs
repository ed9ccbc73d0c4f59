//! SoM-EMOA: a steady-state `(k + 1)` evolutionary loop that minimizes the
//! sum-of-minimum value of its population.
//!
//! One run:
//!
//! 1. Sample `N` uniform random solutions (charged against the budget) and
//!    build the per-objective [`Archive`] from them.
//! 2. Draw `k` distinct sample members as the initial population.
//! 3. Until the budget is spent: pick parents ([`mating_selection`]), apply
//!    SBX and polynomial mutation, evaluate, update the archive, then drop
//!    the member of `P ∪ {offspring}` whose removal hurts coverage least
//!    ([`fast_removal`]).
//!
//! Runs are single-threaded and fully determined by the seed.

mod archive;
mod mating;
mod operators;
mod population;
mod removal;

pub use archive::{archive_init, archive_update, Archive};
pub use mating::{mating_selection, sample_objective, selection_probabilities, MatingFlags};
pub use operators::{poly_mutation, sbx_children, sbx_crossover};
pub use population::PopulationState;
pub use removal::{fast_removal, naive_removal, RemovalOutcome, RemovalScratch, Removed};

use std::sync::Arc;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{F4mError, Result};
use crate::metrics::set_objective_vector;
use crate::problems::Problem;
use crate::scalar::Scalar;
use crate::types::{DecisionVector, EvaluatedSolution};

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Population (output set) size.
    pub k: usize,
    /// Total evaluations, including the initial sample.
    pub eval_budget: usize,
    /// Size of the initial random sample.
    pub init_sample_n: usize,
    pub eta_c: f64,
    pub eta_m: f64,
    pub p_c: f64,
    /// Per-coordinate mutation probability; `None` means `1 / d`.
    pub p_m: Option<f64>,
    pub seed: u64,
    pub use_archive: bool,
    pub use_probability_p: bool,
    /// Evaluations between trace points.
    pub log_every: usize,
    /// Recheck `v` and `u <= v` after every generation.
    pub check_invariants: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            k: 5,
            eval_budget: 60_000,
            init_sample_n: 600,
            eta_c: 20.0,
            eta_m: 20.0,
            p_c: 1.0,
            p_m: None,
            seed: 0,
            use_archive: true,
            use_probability_p: true,
            log_every: 600,
            check_invariants: cfg!(debug_assertions),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(F4mError::InvalidConfig(msg));
        if self.k == 0 {
            return bad("k must be >= 1".into());
        }
        if self.init_sample_n < self.k {
            return bad(format!(
                "initial sample size {} smaller than k = {}",
                self.init_sample_n, self.k
            ));
        }
        if self.eval_budget < self.init_sample_n {
            return bad(format!(
                "evaluation budget {} smaller than initial sample size {}",
                self.eval_budget, self.init_sample_n
            ));
        }
        if !(0.0..=1.0).contains(&self.p_c) {
            return bad(format!("p_c = {} outside [0, 1]", self.p_c));
        }
        if let Some(p_m) = self.p_m {
            if !(0.0..=1.0).contains(&p_m) {
                return bad(format!("p_m = {p_m} outside [0, 1]"));
            }
        }
        if !(self.eta_c >= 0.0 && self.eta_m >= 0.0) {
            return bad("distribution indices must be nonnegative".into());
        }
        if self.log_every == 0 {
            return bad("log_every must be >= 1".into());
        }
        Ok(())
    }

    pub fn mating_flags(&self) -> MatingFlags {
        MatingFlags {
            use_archive: self.use_archive,
            use_probability_p: self.use_probability_p,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint<T> {
    pub evals: usize,
    pub gws: T,
}

/// Read-only view handed to observers after every generation.
pub struct GenerationView<'a, T> {
    pub evals: usize,
    pub population: &'a PopulationState<T>,
    pub archive: &'a Archive<T>,
    pub removed: Removed,
}

/// Hooks into a run. All methods default to no-ops.
pub trait RunObserver<T> {
    /// Every evaluated solution, in evaluation order (initial sample first).
    fn on_evaluation(&mut self, _solution: &EvaluatedSolution<T>) {}
    fn on_generation(&mut self, _view: &GenerationView<'_, T>) {}
    /// Trace points, at the same cadence as [`RunOutput::trace`].
    fn on_trace(&mut self, _point: TracePoint<T>) {}
}

pub struct NoopObserver;

impl<T> RunObserver<T> for NoopObserver {}

impl<T, F: FnMut(TracePoint<T>)> RunObserver<T> for TraceSink<F> {
    fn on_trace(&mut self, point: TracePoint<T>) {
        (self.0)(point)
    }
}

/// Adapts a closure into an observer that only receives trace points.
pub struct TraceSink<F>(pub F);

#[derive(Debug, Clone)]
pub struct RunOutput<T> {
    pub final_set: Vec<EvaluatedSolution<T>>,
    pub final_gws: T,
    /// `(evals, gws)` after the initial sample, then every `log_every`
    /// evaluations and at termination.
    pub trace: Vec<TracePoint<T>>,
    pub evaluations: usize,
    pub archive: Archive<T>,
}

fn random_decision<T: Scalar, R: Rng + ?Sized>(bounds: &[(T, T)], rng: &mut R) -> DecisionVector<T> {
    bounds
        .iter()
        .map(|&(lo, hi)| lo + (hi - lo) * T::lit(rng.random::<f64>()))
        .collect::<Vec<T>>()
        .into()
}

pub fn run_som_emoa<T: Scalar>(problem: &dyn Problem<T>, config: &RunConfig) -> Result<RunOutput<T>> {
    run_som_emoa_observed(problem, config, &mut NoopObserver)
}

/// [`run_som_emoa`] with observer hooks.
///
/// RNG order: initial sample coordinates, the `k` population indices, then
/// per generation the mating draws, SBX draws, mutation draws and (when the
/// offspring is no worse than `v` everywhere) one removal draw.
pub fn run_som_emoa_observed<T: Scalar>(
    problem: &dyn Problem<T>,
    config: &RunConfig,
    observer: &mut dyn RunObserver<T>,
) -> Result<RunOutput<T>> {
    config.validate()?;
    let spec = problem.spec();
    let bounds = &spec.bounds;
    let p_m = config.p_m.unwrap_or(1.0 / spec.d as f64);
    let flags = config.mating_flags();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let mut sample = Vec::with_capacity(config.init_sample_n);
    for _ in 0..config.init_sample_n {
        let s = problem.evaluate_solution(random_decision(bounds, &mut rng))?;
        observer.on_evaluation(&s);
        sample.push(Arc::new(s));
    }
    let mut evals = config.init_sample_n;
    let mut archive = Archive::init(&sample)?;
    let picks = index::sample(&mut rng, sample.len(), config.k);
    let mut pop = PopulationState::new(picks.iter().map(|i| Arc::clone(&sample[i])).collect())?;
    drop(sample);

    let mut trace = Vec::with_capacity(config.eval_budget / config.log_every + 2);
    let emit = |point: TracePoint<T>, trace: &mut Vec<TracePoint<T>>, observer: &mut dyn RunObserver<T>| {
        trace.push(point);
        observer.on_trace(point);
    };
    emit(TracePoint { evals, gws: pop.gws() }, &mut trace, observer);

    let mut scratch = RemovalScratch::new();
    while evals < config.eval_budget {
        let (p1, p2) = mating_selection(&pop, &archive, flags, &mut rng);
        let child = sbx_crossover(&p1.decision, &p2.decision, config.eta_c, config.p_c, bounds, &mut rng);
        let child = poly_mutation(&child, config.eta_m, p_m, bounds, &mut rng);
        let offspring = Arc::new(problem.evaluate_solution(child.into())?);
        evals += 1;
        observer.on_evaluation(&offspring);
        archive.update(&offspring);

        let outcome = fast_removal(&pop, &offspring.objectives, &mut rng, &mut scratch);
        if let Removed::Member(i) = outcome.removed {
            pop.replace(i, offspring, outcome.new_v);
        }
        if config.check_invariants {
            check_invariants(&pop, &archive)?;
        }
        observer.on_generation(&GenerationView {
            evals,
            population: &pop,
            archive: &archive,
            removed: outcome.removed,
        });
        if evals.is_multiple_of(config.log_every) || evals == config.eval_budget {
            emit(TracePoint { evals, gws: pop.gws() }, &mut trace, observer);
        }
    }

    Ok(RunOutput {
        final_gws: pop.gws(),
        final_set: pop.to_solutions(),
        trace,
        evaluations: evals,
        archive,
    })
}

fn check_invariants<T: Scalar>(pop: &PopulationState<T>, archive: &Archive<T>) -> Result<()> {
    let v = set_objective_vector(pop.members())?;
    if v.as_slice() != pop.v() {
        return Err(F4mError::InvariantViolation("population minima out of sync".into()));
    }
    if archive.u().iter().zip(pop.v()).any(|(u, v)| u > v) {
        return Err(F4mError::InvariantViolation("archive minima exceed population minima".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{ProblemParams, ProblemRegistry};

    fn small_config(seed: u64) -> RunConfig {
        RunConfig {
            k: 3,
            eval_budget: 3000,
            init_sample_n: 100,
            log_every: 100,
            seed,
            check_invariants: true,
            ..RunConfig::default()
        }
    }

    fn problem() -> Arc<dyn Problem<f64>> {
        ProblemRegistry::with_builtins()
            .build("f4m-dtlz2", &ProblemParams { m: 12, ..Default::default() })
            .unwrap()
    }

    #[test]
    fn validation() {
        let mut c = small_config(0);
        c.init_sample_n = 2;
        assert!(c.validate().is_err());
        let mut c = small_config(0);
        c.eval_budget = 50;
        assert!(c.validate().is_err());
        let mut c = small_config(0);
        c.p_c = 1.5;
        assert!(c.validate().is_err());
        assert!(run_som_emoa(problem().as_ref(), &c).is_err());
    }

    #[test]
    fn trace_is_monotone_and_complete() {
        let out = run_som_emoa(problem().as_ref(), &small_config(1)).unwrap();
        assert_eq!(out.evaluations, 3000);
        assert_eq!(out.trace.first().unwrap().evals, 100);
        assert_eq!(out.trace.last().unwrap().evals, 3000);
        assert_eq!(out.trace.len(), 30);
        assert!(out.trace.windows(2).all(|w| w[1].gws <= w[0].gws));
        assert_eq!(out.final_set.len(), 3);
        assert_eq!(out.final_gws, crate::metrics::gws(&out.final_set).unwrap());
    }

    #[test]
    fn deterministic_given_seed() {
        let p = problem();
        let a = run_som_emoa(p.as_ref(), &small_config(9)).unwrap();
        let b = run_som_emoa(p.as_ref(), &small_config(9)).unwrap();
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.final_set, b.final_set);
        let c = run_som_emoa(p.as_ref(), &small_config(10)).unwrap();
        assert_ne!(a.final_set, c.final_set);
    }

    #[test]
    fn ablations_run() {
        let p = problem();
        for (use_archive, use_probability_p) in [(false, true), (true, false)] {
            let c = RunConfig {
                use_archive,
                use_probability_p,
                ..small_config(2)
            };
            let out = run_som_emoa(p.as_ref(), &c).unwrap();
            assert!(out.trace.windows(2).all(|w| w[1].gws <= w[0].gws));
        }
    }

    #[test]
    fn trace_sink_sees_every_point() {
        let p = problem();
        let mut seen = Vec::new();
        let out = run_som_emoa_observed(p.as_ref(), &small_config(3), &mut TraceSink(|tp| seen.push(tp))).unwrap();
        assert_eq!(seen, out.trace);
    }

    #[test]
    fn runs_in_f32() {
        let p = ProblemRegistry::<f32>::with_builtins()
            .build("f4m-dtlz2", &ProblemParams { m: 10, ..Default::default() })
            .unwrap();
        let out = run_som_emoa(p.as_ref(), &small_config(4)).unwrap();
        assert!(out.final_gws.is_finite());
    }
}
