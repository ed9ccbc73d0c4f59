use std::sync::Arc;

use rand::Rng;

use super::{Archive, PopulationState};
use crate::scalar::Scalar;
use crate::types::EvaluatedSolution;

/// Mating switches; both on is the full algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatingFlags {
    /// Draw the second parent from the archive (otherwise from the population).
    pub use_archive: bool,
    /// Pick the archive slot by coverage deficit `v - u` (otherwise uniformly).
    pub use_probability_p: bool,
}

impl Default for MatingFlags {
    fn default() -> Self {
        Self {
            use_archive: true,
            use_probability_p: true,
        }
    }
}

/// `p = (v - u) / ||v - u||_1`, uniform when `v == u`.
pub fn selection_probabilities<T: Scalar>(v: &[T], u: &[T]) -> Vec<T> {
    let gaps: Vec<T> = v.iter().zip(u).map(|(&vi, &ui)| vi - ui).collect();
    let total = gaps.iter().fold(T::zero(), |acc, &g| acc + g);
    if total > T::zero() {
        gaps.into_iter().map(|g| g / total).collect()
    } else {
        let m = T::from_usize(v.len()).unwrap();
        vec![T::one() / m; v.len()]
    }
}

/// Samples an objective index from the coverage deficit `v - u` with a
/// single uniform draw; falls back to a uniform index when `v == u`.
pub fn sample_objective<T: Scalar, R: Rng + ?Sized>(v: &[T], u: &[T], rng: &mut R) -> usize {
    let total = v.iter().zip(u).fold(T::zero(), |acc, (&vi, &ui)| acc + (vi - ui));
    if !(total > T::zero()) {
        return rng.random_range(0..v.len());
    }
    let target = T::lit(rng.random::<f64>()) * total;
    let mut acc = T::zero();
    let mut last_positive = 0;
    for (i, (&vi, &ui)) in v.iter().zip(u).enumerate() {
        let gap = vi - ui;
        if gap > T::zero() {
            acc = acc + gap;
            last_positive = i;
            if target < acc {
                return i;
            }
        }
    }
    last_positive
}

/// Picks two parents. Draw order: first-parent index, then either the
/// objective index (archive mating) or the second population index.
pub fn mating_selection<T: Scalar, R: Rng + ?Sized>(
    pop: &PopulationState<T>,
    archive: &Archive<T>,
    flags: MatingFlags,
    rng: &mut R,
) -> (Arc<EvaluatedSolution<T>>, Arc<EvaluatedSolution<T>>) {
    let members = pop.members();
    let p1 = Arc::clone(&members[rng.random_range(0..members.len())]);
    let p2 = if flags.use_archive {
        let i = if flags.use_probability_p {
            sample_objective(pop.v(), archive.u(), rng)
        } else {
            rng.random_range(0..archive.m())
        };
        Arc::clone(archive.slot(i))
    } else {
        Arc::clone(&members[rng.random_range(0..members.len())])
    };
    (p1, p2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn probabilities_normalize_gap() {
        let p = selection_probabilities(&[1.2, 1.3, 1.5], &[1.0, 1.0, 1.0]);
        let expect: [f64; 3] = [0.2, 0.3, 0.5];
        for (a, b) in p.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_gap_is_uniform() {
        let p = selection_probabilities(&[1.0, 2.0, 3.0, 4.0], &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(p, vec![0.25; 4]);
    }

    #[test]
    fn sampling_frequency_matches_p() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let v = [0.2, 0.3, 0.5];
        let u = [0.0; 3];
        let mut counts = [0usize; 3];
        for _ in 0..10_000 {
            counts[sample_objective(&v, &u, &mut rng)] += 1;
        }
        let freq = counts[2] as f64 / 10_000.0;
        assert!((freq - 0.5).abs() <= 0.02, "{freq}");
        assert!((counts[0] as f64 / 10_000.0 - 0.2).abs() <= 0.02);
    }

    #[test]
    fn zero_gap_objectives_never_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5000 {
            let i = sample_objective(&[1.0, 0.0, 2.0, 3.0], &[1.0, 0.0, 1.0, 3.0], &mut rng);
            assert_eq!(i, 2);
        }
    }
}
