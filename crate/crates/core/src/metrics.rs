//! Set-level scalarizations that define F4M quality.
//!
//! All functions are pure. Minima and sums are taken in index order with
//! exact comparisons, so results are reproducible bit for bit.

use crate::error::{F4mError, Result};
use crate::scalar::{ordered_sum, Scalar};
use crate::types::{ObjectiveVector, Objectives};

/// Per-objective minima of a solution set.
pub fn set_objective_vector<T, S>(set: &[S]) -> Result<ObjectiveVector<T>>
where
    T: Scalar,
    S: Objectives<T>,
{
    let (first, rest) = set.split_first().ok_or(F4mError::EmptySet)?;
    let mut minima = first.objectives().to_vec();
    for member in rest {
        let f = member.objectives();
        if f.len() != minima.len() {
            return Err(F4mError::InconsistentDimension {
                expected: minima.len(),
                found: f.len(),
            });
        }
        for (v, &fi) in minima.iter_mut().zip(f) {
            if fi < *v {
                *v = fi;
            }
        }
    }
    Ok(ObjectiveVector::new(minima))
}

/// Sum-of-minimum value `G_ws`: the sum of the set objective vector.
pub fn gws<T, S>(set: &[S]) -> Result<T>
where
    T: Scalar,
    S: Objectives<T>,
{
    Ok(ordered_sum(set_objective_vector(set)?.iter().copied()))
}

/// Weights and utopian point for the set-level Tchebycheff scalarization.
#[derive(Debug, Clone, PartialEq)]
pub struct GtchParams<T> {
    lambda: Vec<T>,
    z_star: ObjectiveVector<T>,
}

impl<T: Scalar> GtchParams<T> {
    pub fn new(lambda: Vec<T>, z_star: impl Into<ObjectiveVector<T>>) -> Result<Self> {
        let z_star = z_star.into();
        if lambda.len() != z_star.len() {
            return Err(F4mError::DimensionMismatch {
                what: "gtch lambda vs z*",
                expected: lambda.len(),
                found: z_star.len(),
            });
        }
        if let Some((index, &value)) = lambda.iter().enumerate().find(|(_, &l)| !(l > T::zero())) {
            return Err(F4mError::NonPositiveWeight {
                index,
                value: value.to_f64_lossy(),
            });
        }
        Ok(Self { lambda, z_star })
    }

    pub fn lambda(&self) -> &[T] {
        &self.lambda
    }

    pub fn z_star(&self) -> &[T] {
        &self.z_star
    }
}

/// Set-level Tchebycheff value `max_i lambda_i (min_j f_i(x_j) - z*_i)`.
///
/// The difference is signed: a set that beats `z*` on some objective
/// contributes a negative term there.
pub fn gtch_set<T, S>(set: &[S], params: &GtchParams<T>) -> Result<T>
where
    T: Scalar,
    S: Objectives<T>,
{
    let v = set_objective_vector(set)?;
    if v.len() != params.lambda.len() {
        return Err(F4mError::DimensionMismatch {
            what: "gtch params vs objectives",
            expected: params.lambda.len(),
            found: v.len(),
        });
    }
    Ok(v
        .iter()
        .zip(&params.lambda)
        .zip(params.z_star.iter())
        .map(|((&vi, &li), &zi)| li * (vi - zi))
        .fold(T::neg_infinity(), T::max))
}

/// Tchebycheff scalarization `max_i w_i |f_i - z*_i|` of one objective vector.
pub fn tch_scalarize<T: Scalar>(f: &[T], w: &[T], z_star: &[T]) -> Result<T> {
    if w.len() != f.len() {
        return Err(F4mError::DimensionMismatch {
            what: "tchebycheff weights vs objectives",
            expected: f.len(),
            found: w.len(),
        });
    }
    if z_star.len() != f.len() {
        return Err(F4mError::DimensionMismatch {
            what: "tchebycheff z* vs objectives",
            expected: f.len(),
            found: z_star.len(),
        });
    }
    if let Some((index, &value)) = w.iter().enumerate().find(|(_, &wi)| wi < T::zero()) {
        return Err(F4mError::NegativeWeight {
            index,
            value: value.to_f64_lossy(),
        });
    }
    Ok(tch_unchecked(f, w, z_star))
}

/// [`tch_scalarize`] without validation; callers guarantee equal lengths and
/// nonnegative weights.
#[inline]
pub(crate) fn tch_unchecked<T: Scalar>(f: &[T], w: &[T], z_star: &[T]) -> T {
    let mut best = T::zero();
    for ((&fi, &wi), &zi) in f.iter().zip(w).zip(z_star) {
        let term = wi * (fi - zi).abs();
        if term > best {
            best = term;
        }
    }
    best
}
