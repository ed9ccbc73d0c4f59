use std::sync::Arc;

use crate::error::{F4mError, Result};
use crate::metrics::set_objective_vector;
use crate::scalar::{ordered_sum, Scalar};
use crate::types::EvaluatedSolution;

/// The `k` current members and their per-objective minima `v`.
#[derive(Debug, Clone)]
pub struct PopulationState<T> {
    members: Vec<Arc<EvaluatedSolution<T>>>,
    v: Vec<T>,
}

impl<T: Scalar> PopulationState<T> {
    pub fn new(members: Vec<Arc<EvaluatedSolution<T>>>) -> Result<Self> {
        if members.is_empty() {
            return Err(F4mError::EmptySet);
        }
        let v = set_objective_vector(&members)?.into_inner();
        Ok(Self { members, v })
    }

    pub fn from_solutions(members: Vec<EvaluatedSolution<T>>) -> Result<Self> {
        Self::new(members.into_iter().map(Arc::new).collect())
    }

    pub fn members(&self) -> &[Arc<EvaluatedSolution<T>>] {
        &self.members
    }

    pub fn v(&self) -> &[T] {
        &self.v
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }

    pub fn m(&self) -> usize {
        self.v.len()
    }

    /// Sum of `v`, i.e. the population's sum-of-minimum value.
    pub fn gws(&self) -> T {
        ordered_sum(self.v.iter().copied())
    }

    /// Drops member `index`, appends the offspring and installs the minima
    /// computed by the removal step.
    pub(crate) fn replace(&mut self, index: usize, offspring: Arc<EvaluatedSolution<T>>, new_v: Vec<T>) {
        self.members.remove(index);
        self.members.push(offspring);
        self.v = new_v;
    }

    pub fn to_solutions(&self) -> Vec<EvaluatedSolution<T>> {
        self.members.iter().map(|s| (**s).clone()).collect()
    }
}
