//! Choosing which member of `P ∪ {offspring}` to drop.
//!
//! Both routines return the member whose removal leaves the smallest
//! sum-of-minimum, with identical tie-breaking: the offspring is the default
//! choice and is displaced only by a strictly smaller value; among members
//! the first in scan order wins. When the offspring is no worse than `v` on
//! every objective, a uniformly random member is removed (one RNG draw).

use rand::Rng;

use super::PopulationState;
use crate::scalar::{ordered_sum, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Removed {
    Offspring,
    Member(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RemovalOutcome<T> {
    pub removed: Removed,
    /// Per-objective minima of the surviving set.
    pub new_v: Vec<T>,
}

/// Working buffers for [`fast_removal`], reusable across generations.
#[derive(Debug, Clone, Default)]
pub struct RemovalScratch<T> {
    /// Objectives on which the offspring is at least as good as `v`.
    pub improved: Vec<usize>,
    /// Objectives outside `improved`.
    pub rest: Vec<usize>,
    pub v_prime: Vec<T>,
    pub v_best: Vec<T>,
    pub g_min: T,
    pub chosen: Option<Removed>,
}

impl<T: Scalar> RemovalScratch<T> {
    pub fn new() -> Self {
        Self {
            improved: Vec::new(),
            rest: Vec::new(),
            v_prime: Vec::new(),
            v_best: Vec::new(),
            g_min: T::zero(),
            chosen: None,
        }
    }
}

/// Incremental removal. Only objectives where the scanned member holds the
/// current minimum trigger a rescan of the other members.
pub fn fast_removal<T: Scalar, R: Rng + ?Sized>(
    pop: &PopulationState<T>,
    offspring: &[T],
    rng: &mut R,
    scratch: &mut RemovalScratch<T>,
) -> RemovalOutcome<T> {
    let v = pop.v();
    let m = v.len();
    let members = pop.members();

    scratch.g_min = ordered_sum(v.iter().copied());
    scratch.chosen = Some(Removed::Offspring);
    scratch.improved.clear();
    scratch.rest.clear();
    scratch.v_prime.clear();
    scratch.v_prime.extend_from_slice(v);
    for i in 0..m {
        if offspring[i] <= v[i] {
            scratch.v_prime[i] = offspring[i];
            scratch.improved.push(i);
        } else {
            scratch.rest.push(i);
        }
    }

    if scratch.improved.len() == m {
        let victim = rng.random_range(0..members.len());
        scratch.chosen = Some(Removed::Member(victim));
        return RemovalOutcome {
            removed: Removed::Member(victim),
            new_v: offspring.to_vec(),
        };
    }

    scratch.v_best.clear();
    scratch.v_best.extend_from_slice(v);
    for (idx, x) in members.iter().enumerate() {
        let fx = &x.objectives;
        for &i in &scratch.rest {
            scratch.v_prime[i] = if fx[i] == v[i] {
                let mut best = offspring[i];
                for (j, other) in members.iter().enumerate() {
                    if j != idx && other.objectives[i] < best {
                        best = other.objectives[i];
                    }
                }
                best
            } else {
                v[i]
            };
        }
        let g = ordered_sum(scratch.v_prime.iter().copied());
        if g < scratch.g_min {
            scratch.g_min = g;
            scratch.chosen = Some(Removed::Member(idx));
            scratch.v_best.clone_from(&scratch.v_prime);
        }
    }

    let removed = scratch.chosen.unwrap_or(Removed::Offspring);
    let new_v = match removed {
        Removed::Offspring => v.to_vec(),
        Removed::Member(_) => scratch.v_best.clone(),
    };
    RemovalOutcome { removed, new_v }
}

/// Reference removal: recomputes the survivors' minima from scratch for
/// every candidate. Same contract and RNG use as [`fast_removal`].
pub fn naive_removal<T: Scalar, R: Rng + ?Sized>(
    pop: &PopulationState<T>,
    offspring: &[T],
    rng: &mut R,
) -> RemovalOutcome<T> {
    let members = pop.members();
    let m = offspring.len();
    let column_min = |skip: Option<usize>, include_offspring: bool| -> Vec<T> {
        (0..m)
            .map(|i| {
                let mut best = T::infinity();
                for (j, x) in members.iter().enumerate() {
                    if Some(j) != skip && x.objectives[i] < best {
                        best = x.objectives[i];
                    }
                }
                if include_offspring && offspring[i] < best {
                    best = offspring[i];
                }
                best
            })
            .collect()
    };

    let v = column_min(None, false);
    if (0..m).all(|i| offspring[i] <= v[i]) {
        let victim = rng.random_range(0..members.len());
        return RemovalOutcome {
            removed: Removed::Member(victim),
            new_v: column_min(Some(victim), true),
        };
    }

    let mut best = RemovalOutcome {
        removed: Removed::Offspring,
        new_v: v,
    };
    let mut g_min = ordered_sum(best.new_v.iter().copied());
    for idx in 0..members.len() {
        let survivors = column_min(Some(idx), true);
        let g = ordered_sum(survivors.iter().copied());
        if g < g_min {
            g_min = g;
            best = RemovalOutcome {
                removed: Removed::Member(idx),
                new_v: survivors,
            };
        }
    }
    best
}
