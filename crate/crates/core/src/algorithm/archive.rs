use std::sync::Arc;

use crate::error::{F4mError, Result};
use crate::scalar::Scalar;
use crate::types::EvaluatedSolution;

/// Best-so-far solution per objective. Slot `i` holds a solution attaining
/// `u[i]`; one solution may occupy several slots.
#[derive(Debug, Clone)]
pub struct Archive<T> {
    slots: Vec<Arc<EvaluatedSolution<T>>>,
    u: Vec<T>,
}

impl<T: Scalar> Archive<T> {
    /// Slot `i` takes the first sample member minimizing objective `i`.
    pub fn init(sample: &[Arc<EvaluatedSolution<T>>]) -> Result<Self> {
        let first = sample.first().ok_or(F4mError::EmptySet)?;
        let m = first.objectives.len();
        let mut slots = vec![Arc::clone(first); m];
        let mut u = first.objectives.to_vec();
        for s in &sample[1..] {
            if s.objectives.len() != m {
                return Err(F4mError::InconsistentDimension {
                    expected: m,
                    found: s.objectives.len(),
                });
            }
            for (i, &fi) in s.objectives.iter().enumerate() {
                if fi < u[i] {
                    u[i] = fi;
                    slots[i] = Arc::clone(s);
                }
            }
        }
        Ok(Self { slots, u })
    }

    /// Replaces slot `i` iff the offspring is strictly better on objective
    /// `i`; equal values keep the older holder. Returns the number of slots
    /// replaced.
    pub fn update(&mut self, offspring: &Arc<EvaluatedSolution<T>>) -> usize {
        let mut replaced = 0;
        for (i, &fi) in offspring.objectives.iter().enumerate() {
            if fi < self.u[i] {
                self.u[i] = fi;
                self.slots[i] = Arc::clone(offspring);
                replaced += 1;
            }
        }
        replaced
    }

    pub fn u(&self) -> &[T] {
        &self.u
    }

    pub fn slot(&self, i: usize) -> &Arc<EvaluatedSolution<T>> {
        &self.slots[i]
    }

    pub fn slots(&self) -> &[Arc<EvaluatedSolution<T>>] {
        &self.slots
    }

    pub fn m(&self) -> usize {
        self.u.len()
    }
}

/// Builds the archive from an evaluated sample (owned solutions).
pub fn archive_init<T: Scalar>(sample: &[EvaluatedSolution<T>]) -> Result<Archive<T>> {
    let shared: Vec<_> = sample.iter().cloned().map(Arc::new).collect();
    Archive::init(&shared)
}

/// Functional form of [`Archive::update`].
pub fn archive_update<T: Scalar>(mut archive: Archive<T>, offspring: &Arc<EvaluatedSolution<T>>) -> Archive<T> {
    archive.update(offspring);
    archive
}
