//! Benchmark problems and the R2-based few-for-many transform.

mod dtlz;
mod f4m;
mod nmlr;
mod registry;
mod weights;
mod wfg;

pub use dtlz::Dtlz;
pub use f4m::{f4m_transform, r2_indicator, F4mProblem};
pub use nmlr::{NmlrInstance, NmlrParams};
pub use registry::{ProblemFactory, ProblemParams, ProblemRegistry};
pub use weights::{das_dennis, make_weights, WeightMethod, WeightSet};
pub use wfg::Wfg;

use std::fmt;

use crate::error::{F4mError, Result};
use crate::scalar::Scalar;
use crate::types::{DecisionVector, EvaluatedSolution, ObjectiveVector};

/// Name, dimensions and box bounds of a problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec<T> {
    pub name: String,
    pub m: usize,
    pub d: usize,
    pub bounds: Vec<(T, T)>,
}

impl<T: Scalar> ProblemSpec<T> {
    pub fn new(name: impl Into<String>, m: usize, bounds: Vec<(T, T)>) -> Result<Self> {
        let name = name.into();
        if m == 0 {
            return Err(F4mError::InvalidProblem(format!("{name}: m must be >= 1")));
        }
        if bounds.is_empty() {
            return Err(F4mError::InvalidProblem(format!("{name}: d must be >= 1")));
        }
        if let Some(j) = bounds.iter().position(|&(lo, hi)| !(lo < hi)) {
            return Err(F4mError::InvalidProblem(format!(
                "{name}: bound {j} has lo >= hi"
            )));
        }
        Ok(Self {
            d: bounds.len(),
            name,
            m,
            bounds,
        })
    }

    pub fn check_decision(&self, x: &[T]) -> Result<()> {
        if x.len() != self.d {
            return Err(F4mError::DimensionMismatch {
                what: "decision vector",
                expected: self.d,
                found: x.len(),
            });
        }
        for (index, (&v, &(lo, hi))) in x.iter().zip(&self.bounds).enumerate() {
            if !(v >= lo && v <= hi) {
                return Err(F4mError::OutOfBounds {
                    index,
                    value: v.to_f64_lossy(),
                    lo: lo.to_f64_lossy(),
                    hi: hi.to_f64_lossy(),
                });
            }
        }
        Ok(())
    }
}

/// A box-constrained minimization problem.
///
/// Implementors provide [`Problem::evaluate_unchecked`]; the checked entry
/// points validate length, bounds and finiteness around it. Evaluation must
/// be pure: equal inputs give bit-identical outputs.
pub trait Problem<T: Scalar>: Send + Sync {
    fn spec(&self) -> &ProblemSpec<T>;

    /// Objective values for an in-bounds decision vector of length `d`.
    fn evaluate_unchecked(&self, x: &[T]) -> Vec<T>;

    /// The weight set behind a transformed instance, if any.
    fn weights(&self) -> Option<&WeightSet<T>> {
        None
    }

    fn evaluate(&self, x: &[T]) -> Result<ObjectiveVector<T>> {
        self.spec().check_decision(x)?;
        let f = self.evaluate_unchecked(x);
        if f.len() != self.spec().m {
            return Err(F4mError::DimensionMismatch {
                what: "objective vector",
                expected: self.spec().m,
                found: f.len(),
            });
        }
        if let Some(i) = f.iter().position(|v| !v.is_finite()) {
            return Err(F4mError::NonFinite(i));
        }
        Ok(ObjectiveVector::new(f))
    }

    fn evaluate_solution(&self, x: DecisionVector<T>) -> Result<EvaluatedSolution<T>> {
        let objectives = self.evaluate(&x)?;
        Ok(EvaluatedSolution {
            decision: x,
            objectives,
        })
    }
}

/// A problem built from a closure, for plugging in instances that live
/// outside this crate.
pub struct FnProblem<T, F> {
    spec: ProblemSpec<T>,
    f: F,
}

impl<T: Scalar, F> FnProblem<T, F>
where
    F: Fn(&[T]) -> Vec<T> + Send + Sync,
{
    pub fn new(spec: ProblemSpec<T>, f: F) -> Self {
        Self { spec, f }
    }
}

impl<T: Scalar, F> Problem<T> for FnProblem<T, F>
where
    F: Fn(&[T]) -> Vec<T> + Send + Sync,
{
    fn spec(&self) -> &ProblemSpec<T> {
        &self.spec
    }

    fn evaluate_unchecked(&self, x: &[T]) -> Vec<T> {
        (self.f)(x)
    }
}

impl<T, F> fmt::Debug for FnProblem<T, F>
where
    T: fmt::Debug,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FnProblem").field("spec", &self.spec).finish()
    }
}
