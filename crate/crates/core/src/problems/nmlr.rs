//! Noisy mixed linear regression.
//!
//! Each of the `m` tasks is a single linear measurement `b_i = a_i . x* + e_i`
//! generated by one of `k*` latent models (assigned round-robin, task `i`
//! uses model `i mod k*`). Objective `i` is the squared residual
//! `(a_i . x - b_i)^2`, so a set of `k*` solutions can reach the noise floor.
//!
//! All randomness comes from one seeded ChaCha8 stream, consumed in this
//! order: ground-truth models (`k* x d` uniform draws in `[-1, 1]`), task
//! vectors (`m x d` standard normal draws), then noise (`m` normal draws with
//! standard deviation `sigma`).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal, StandardNormal};

use super::{Problem, ProblemSpec};
use crate::error::{F4mError, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NmlrParams {
    pub m: usize,
    pub d: usize,
    pub k_star: usize,
    pub sigma: f64,
    pub seed: u64,
}

impl NmlrParams {
    pub const DEFAULT_D: usize = 10;
    pub const DEFAULT_SIGMA: f64 = 0.1;
    pub const BOUND: f64 = 2.0;
}

#[derive(Debug, Clone, PartialEq)]
pub struct NmlrInstance<T> {
    params: NmlrParams,
    task_vectors: Vec<Vec<T>>,
    targets: Vec<T>,
    noise: Vec<T>,
    assignment: Vec<usize>,
    ground_truth: Vec<Vec<T>>,
    spec: ProblemSpec<T>,
}

impl<T: Scalar> NmlrInstance<T> {
    pub fn new(params: NmlrParams) -> Result<Self> {
        let NmlrParams {
            m,
            d,
            k_star,
            sigma,
            seed,
        } = params;
        if k_star == 0 || k_star > m {
            return Err(F4mError::InvalidProblem(format!(
                "nmlr: need 1 <= k* <= m, got k*={k_star}, m={m}"
            )));
        }
        if d == 0 {
            return Err(F4mError::InvalidProblem("nmlr: d must be >= 1".into()));
        }
        if !(sigma >= 0.0 && sigma.is_finite()) {
            return Err(F4mError::InvalidProblem(format!("nmlr: invalid sigma {sigma}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ground_truth: Vec<Vec<f64>> = (0..k_star)
            .map(|_| (0..d).map(|_| rng.random_range(-1.0..=1.0)).collect())
            .collect();
        let task_vectors: Vec<Vec<f64>> = (0..m)
            .map(|_| (0..d).map(|_| StandardNormal.sample(&mut rng)).collect())
            .collect();
        let noise: Vec<f64> = if sigma > 0.0 {
            let normal = Normal::new(0.0, sigma).expect("sigma validated");
            (0..m).map(|_| normal.sample(&mut rng)).collect()
        } else {
            vec![0.0; m]
        };
        let assignment: Vec<usize> = (0..m).map(|i| i % k_star).collect();

        let to_t = |v: &Vec<f64>| v.iter().map(|&x| T::lit(x)).collect::<Vec<T>>();
        let task_vectors: Vec<Vec<T>> = task_vectors.iter().map(to_t).collect();
        let ground_truth: Vec<Vec<T>> = ground_truth.iter().map(to_t).collect();
        let noise: Vec<T> = noise.into_iter().map(T::lit).collect();
        let targets = (0..m)
            .map(|i| dot(&task_vectors[i], &ground_truth[assignment[i]]) + noise[i])
            .collect();
        let bound = T::lit(NmlrParams::BOUND);
        let spec = ProblemSpec::new("nmlr", m, vec![(-bound, bound); d])?;
        Ok(Self {
            params,
            task_vectors,
            targets,
            noise,
            assignment,
            ground_truth,
            spec,
        })
    }

    pub fn params(&self) -> NmlrParams {
        self.params
    }

    pub fn ground_truth(&self) -> &[Vec<T>] {
        &self.ground_truth
    }

    pub fn noise(&self) -> &[T] {
        &self.noise
    }

    pub fn task_vectors(&self) -> &[Vec<T>] {
        &self.task_vectors
    }

    pub fn targets(&self) -> &[T] {
        &self.targets
    }

    /// Latent model index generating each task.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

impl<T: Scalar> Problem<T> for NmlrInstance<T> {
    fn spec(&self) -> &ProblemSpec<T> {
        &self.spec
    }

    fn evaluate_unchecked(&self, x: &[T]) -> Vec<T> {
        self.task_vectors
            .iter()
            .zip(&self.targets)
            .map(|(a, &b)| {
                let r = dot(a, x) - b;
                r * r
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::gws;
    use proptest::prelude::*;

    fn params(sigma: f64, seed: u64) -> NmlrParams {
        NmlrParams {
            m: 25,
            d: 10,
            k_star: 5,
            sigma,
            seed,
        }
    }

    fn ground_truth_objectives(inst: &NmlrInstance<f64>) -> Vec<Vec<f64>> {
        inst.ground_truth()
            .iter()
            .map(|x| inst.evaluate(x).unwrap().into_inner())
            .collect()
    }

    #[test]
    fn zero_noise_recovers_exactly() {
        let inst = NmlrInstance::<f64>::new(params(0.0, 3)).unwrap();
        assert_eq!(gws(&ground_truth_objectives(&inst)).unwrap(), 0.0);
    }

    #[test]
    fn noisy_ground_truth_bounded_by_noise_energy() {
        let inst = NmlrInstance::<f64>::new(params(0.1, 8)).unwrap();
        let g = gws(&ground_truth_objectives(&inst)).unwrap();
        let energy: f64 = inst.noise().iter().map(|e| e * e).sum();
        assert!(g <= energy * (1.0 + 1e-12), "{g} > {energy}");
    }

    #[test]
    fn seeded_determinism() {
        let a = NmlrInstance::<f64>::new(params(0.1, 42)).unwrap();
        let b = NmlrInstance::<f64>::new(params(0.1, 42)).unwrap();
        assert_eq!(a, b);
        let c = NmlrInstance::<f64>::new(params(0.1, 43)).unwrap();
        assert_ne!(a.targets(), c.targets());
    }

    #[test]
    fn rejects_bad_params() {
        let mut p = params(0.1, 0);
        p.k_star = 30;
        assert!(NmlrInstance::<f64>::new(p).is_err());
        p.k_star = 0;
        assert!(NmlrInstance::<f64>::new(p).is_err());
        assert!(NmlrInstance::<f64>::new(params(-1.0, 0)).is_err());
    }

    #[test]
    fn round_robin_assignment() {
        let inst = NmlrInstance::<f64>::new(params(0.1, 1)).unwrap();
        assert_eq!(&inst.assignment()[..7], &[0, 1, 2, 3, 4, 0, 1]);
    }

    proptest! {
        #[test]
        fn midpoint_convexity(
            seed in 0u64..50,
            x in prop::collection::vec(-2.0f64..2.0, 10),
            y in prop::collection::vec(-2.0f64..2.0, 10),
        ) {
            let inst = NmlrInstance::<f64>::new(params(0.1, seed)).unwrap();
            let mid: Vec<f64> = x.iter().zip(&y).map(|(a, b)| 0.5 * (a + b)).collect();
            let fx = inst.evaluate(&x).unwrap();
            let fy = inst.evaluate(&y).unwrap();
            let fm = inst.evaluate(&mid).unwrap();
            for i in 0..25 {
                let rhs = 0.5 * (fx[i] + fy[i]);
                prop_assert!(fm[i] <= rhs + 1e-12 * (1.0 + rhs));
            }
        }
    }
}
