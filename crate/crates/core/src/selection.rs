//! Greedy sum-of-minimum subset selection and a random-search comparator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{F4mError, Result};
use crate::problems::Problem;
use crate::scalar::{ordered_sum, Scalar};
use crate::types::{EvaluatedSolution, Objectives};

/// Indices (into `pop`, in pick order) of a greedy size-`k` subset.
///
/// Each step adds the candidate minimizing the sum-of-minimum of the grown
/// set, scored incrementally from the running minima. Ties go to the lowest
/// population index.
pub fn greedy_subset_indices<T, S>(pop: &[S], k: usize) -> Result<Vec<usize>>
where
    T: Scalar,
    S: Objectives<T>,
{
    if pop.is_empty() {
        return Err(F4mError::EmptySet);
    }
    if k == 0 || k > pop.len() {
        return Err(F4mError::InvalidConfig(format!(
            "subset size {k} must be in 1..={}",
            pop.len()
        )));
    }
    let m = pop[0].objectives().len();
    if let Some(bad) = pop.iter().find(|s| s.objectives().len() != m) {
        return Err(F4mError::InconsistentDimension {
            expected: m,
            found: bad.objectives().len(),
        });
    }
    let mut current = vec![T::infinity(); m];
    let mut taken = vec![false; pop.len()];
    let mut picks = Vec::with_capacity(k);
    for _ in 0..k {
        let mut best: Option<(usize, T)> = None;
        for (idx, cand) in pop.iter().enumerate() {
            if taken[idx] {
                continue;
            }
            let score = ordered_sum(
                current
                    .iter()
                    .zip(cand.objectives())
                    .map(|(&c, &f)| if f < c { f } else { c }),
            );
            if best.is_none_or(|(_, b)| score < b) {
                best = Some((idx, score));
            }
        }
        let (idx, _) = best.expect("k <= |pop| leaves a candidate");
        taken[idx] = true;
        for (c, &f) in current.iter_mut().zip(pop[idx].objectives()) {
            if f < *c {
                *c = f;
            }
        }
        picks.push(idx);
    }
    Ok(picks)
}

/// Greedy size-`k` subset of `pop`, members in pick order.
pub fn greedy_subset<T: Scalar>(pop: &[EvaluatedSolution<T>], k: usize) -> Result<Vec<EvaluatedSolution<T>>> {
    Ok(greedy_subset_indices(pop, k)?
        .into_iter()
        .map(|i| pop[i].clone())
        .collect())
}

/// Evaluates `eval_budget` uniform random points and keeps a greedy subset
/// of size `k`.
pub fn random_search_baseline<T: Scalar>(
    problem: &dyn Problem<T>,
    eval_budget: usize,
    k: usize,
    seed: u64,
) -> Result<Vec<EvaluatedSolution<T>>> {
    if eval_budget < k {
        return Err(F4mError::InvalidConfig(format!(
            "evaluation budget {eval_budget} smaller than k = {k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bounds = &problem.spec().bounds;
    let mut pop = Vec::with_capacity(eval_budget);
    for _ in 0..eval_budget {
        let x: Vec<T> = bounds
            .iter()
            .map(|&(lo, hi)| lo + (hi - lo) * T::lit(rng.random::<f64>()))
            .collect();
        pop.push(problem.evaluate_solution(x.into())?);
    }
    greedy_subset(&pop, k)
}
