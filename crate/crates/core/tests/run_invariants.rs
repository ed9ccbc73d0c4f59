use std::sync::Arc;

use f4m_core::algorithm::{run_som_emoa_observed, GenerationView, RunConfig, RunObserver};
use f4m_core::problems::{ProblemParams, ProblemRegistry};
use f4m_core::EvaluatedSolution;

#[derive(Default)]
struct HistoryCheck {
    ideal: Vec<f64>,
    generations: usize,
    violations: usize,
}

impl RunObserver<f64> for HistoryCheck {
    fn on_evaluation(&mut self, s: &EvaluatedSolution<f64>) {
        if self.ideal.is_empty() {
            self.ideal = s.objectives.to_vec();
        }
        for (u, &f) in self.ideal.iter_mut().zip(s.objectives.iter()) {
            *u = u.min(f);
        }
    }

    fn on_generation(&mut self, view: &GenerationView<'_, f64>) {
        self.generations += 1;
        if view.archive.u() != self.ideal.as_slice() {
            self.violations += 1;
        }
        for (i, slot) in view.archive.slots().iter().enumerate() {
            if slot.objectives[i] != view.archive.u()[i] {
                self.violations += 1;
            }
        }
    }
}

#[test]
fn archive_tracks_history_minimum() {
    let registry = ProblemRegistry::<f64>::with_builtins();
    for name in ["f4m-dtlz1", "f4m-wfg2", "nmlr"] {
        let p = registry
            .build(name, &ProblemParams { m: 15, ..Default::default() })
            .unwrap();
        let config = RunConfig {
            k: 4,
            eval_budget: 4_000,
            init_sample_n: 200,
            check_invariants: true,
            seed: 5,
            ..RunConfig::default()
        };
        let mut obs = HistoryCheck::default();
        let out = run_som_emoa_observed(p.as_ref(), &config, &mut obs).unwrap();
        assert_eq!(obs.generations, 3_800);
        assert_eq!(obs.violations, 0, "{name}");
        assert!(out.trace.windows(2).all(|w| w[1].gws <= w[0].gws));
    }
}

#[test]
fn final_set_is_drawn_from_evaluations() {
    struct Seen(Vec<Arc<EvaluatedSolution<f64>>>);
    impl RunObserver<f64> for Seen {
        fn on_evaluation(&mut self, s: &EvaluatedSolution<f64>) {
            self.0.push(Arc::new(s.clone()));
        }
    }
    let p = ProblemRegistry::<f64>::with_builtins()
        .build("f4m-dtlz3", &ProblemParams { m: 8, ..Default::default() })
        .unwrap();
    let config = RunConfig {
        k: 3,
        eval_budget: 1_500,
        init_sample_n: 100,
        ..RunConfig::default()
    };
    let mut seen = Seen(Vec::new());
    let out = run_som_emoa_observed(p.as_ref(), &config, &mut seen).unwrap();
    assert_eq!(seen.0.len(), 1_500);
    for s in &out.final_set {
        assert!(seen.0.iter().any(|e| e.as_ref() == s));
    }
}
