use std::fmt;
use std::sync::Arc;

use super::{Problem, ProblemSpec, WeightSet};
use crate::error::{F4mError, Result};
use crate::metrics::tch_unchecked;
use crate::scalar::{ordered_sum, Scalar};
use crate::types::Objectives;

/// A base `q`-objective problem turned into an `m`-objective coverage
/// instance: objective `i` is the Tchebycheff value of the base objectives
/// under weight row `i` and the utopian point `z*`.
pub struct F4mProblem<T: Scalar> {
    base: Arc<dyn Problem<T>>,
    weights: WeightSet<T>,
    z_star: Vec<T>,
    spec: ProblemSpec<T>,
}

impl<T: Scalar> F4mProblem<T> {
    pub fn base(&self) -> &Arc<dyn Problem<T>> {
        &self.base
    }

    pub fn weight_set(&self) -> &WeightSet<T> {
        &self.weights
    }

    pub fn z_star(&self) -> &[T] {
        &self.z_star
    }

    /// Maps base objective values to the transformed objectives.
    pub fn transform_objectives(&self, base: &[T]) -> Vec<T> {
        self.weights
            .rows()
            .iter()
            .map(|w| tch_unchecked(base, w, &self.z_star))
            .collect()
    }
}

impl<T: Scalar> fmt::Debug for F4mProblem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("F4mProblem")
            .field("spec", &self.spec)
            .field("base", &self.base.spec().name)
            .finish()
    }
}

/// Wraps `base` with the weight set and utopian point. The resulting
/// problem has `m = weights.len()` objectives and the base decision space.
pub fn f4m_transform<T: Scalar>(
    base: Arc<dyn Problem<T>>,
    weights: WeightSet<T>,
    z_star: Vec<T>,
) -> Result<F4mProblem<T>> {
    let q = base.spec().m;
    if z_star.len() != q {
        return Err(F4mError::DimensionMismatch {
            what: "utopian point",
            expected: q,
            found: z_star.len(),
        });
    }
    if weights.width() != q {
        return Err(F4mError::DimensionMismatch {
            what: "weight row width",
            expected: q,
            found: weights.width(),
        });
    }
    let spec = ProblemSpec::new(
        format!("f4m-{}", base.spec().name),
        weights.len(),
        base.spec().bounds.clone(),
    )?;
    Ok(F4mProblem {
        base,
        weights,
        z_star,
        spec,
    })
}

impl<T: Scalar> Problem<T> for F4mProblem<T> {
    fn spec(&self) -> &ProblemSpec<T> {
        &self.spec
    }

    fn evaluate_unchecked(&self, x: &[T]) -> Vec<T> {
        self.transform_objectives(&self.base.evaluate_unchecked(x))
    }

    fn weights(&self) -> Option<&WeightSet<T>> {
        Some(&self.weights)
    }
}

/// R2 indicator with Tchebycheff scalarization over a set of base-space
/// objective vectors: the mean over weights of the best member value.
pub fn r2_indicator<T, S>(set: &[S], weights: &WeightSet<T>, z_star: &[T]) -> Result<T>
where
    T: Scalar,
    S: Objectives<T>,
{
    if set.is_empty() {
        return Err(F4mError::EmptySet);
    }
    if weights.is_empty() {
        return Err(F4mError::InvalidWeights("weight set is empty".into()));
    }
    let q = weights.width();
    if z_star.len() != q {
        return Err(F4mError::DimensionMismatch {
            what: "utopian point",
            expected: q,
            found: z_star.len(),
        });
    }
    if let Some(bad) = set.iter().find(|s| s.objectives().len() != q) {
        return Err(F4mError::InconsistentDimension {
            expected: q,
            found: bad.objectives().len(),
        });
    }
    let total = ordered_sum(weights.rows().iter().map(|w| {
        set.iter()
            .map(|s| tch_unchecked(s.objectives(), w, z_star))
            .fold(T::infinity(), T::min)
    }));
    Ok(total / T::from_usize(weights.len()).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{gws, tch_scalarize};
    use crate::problems::{make_weights, Dtlz, WeightMethod};

    fn dtlz2(q: usize) -> Arc<dyn Problem<f64>> {
        Arc::new(Dtlz::<f64>::new(2, q).unwrap())
    }

    #[test]
    fn two_objective_midpoint() {
        let w = WeightSet::from_rows(vec![vec![0.5, 0.5]]).unwrap();
        let p = f4m_transform(dtlz2(2), w, vec![0.0, 0.0]).unwrap();
        let f = p.evaluate(&[0.5; 11]).unwrap();
        assert!((f[0] - 0.5 * std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((f[0] - 0.353553).abs() < 1e-6);
    }

    #[test]
    fn axis_weight_picks_first_objective() {
        let w = WeightSet::from_rows(vec![vec![1.0, 0.0, 0.0]]).unwrap();
        let z = vec![0.1, 0.0, 0.0];
        let base = dtlz2(3);
        let p = f4m_transform(base.clone(), w, z).unwrap();
        let x = [0.3, 0.8, 0.5, 0.4, 0.5, 0.5, 0.6, 0.5, 0.5, 0.5, 0.5, 0.5];
        let f = p.evaluate(&x).unwrap();
        let b = base.evaluate(&x).unwrap();
        assert_eq!(f[0], (b[0] - 0.1).abs());
    }

    #[test]
    fn matches_tch_scalarize_and_is_deterministic() {
        let w = make_weights::<f64>(WeightMethod::UniformSimplex, 25, 3, 4, None).unwrap();
        let base = dtlz2(3);
        let p = f4m_transform(base.clone(), w.clone(), vec![0.0; 3]).unwrap();
        let x = [0.1, 0.9, 0.2, 0.4, 0.5, 0.7, 0.6, 0.5, 0.1, 0.5, 0.5, 0.3];
        let f = p.evaluate(&x).unwrap();
        let b = base.evaluate(&x).unwrap();
        for (i, row) in w.rows().iter().enumerate() {
            assert_eq!(f[i], tch_scalarize(&b, row, &[0.0; 3]).unwrap());
        }
        assert_eq!(f, p.evaluate(&x).unwrap());
        assert_eq!(p.spec().m, 25);
        assert_eq!(p.spec().d, 12);
    }

    #[test]
    fn transform_dimension_errors() {
        let w = WeightSet::from_rows(vec![vec![0.5, 0.5]]).unwrap();
        assert!(f4m_transform(dtlz2(3), w.clone(), vec![0.0; 3]).is_err());
        assert!(f4m_transform(dtlz2(2), w, vec![0.0; 3]).is_err());
    }

    #[test]
    fn r2_cases() {
        let w1 = WeightSet::from_rows(vec![vec![0.3, 0.7]]).unwrap();
        let pts = vec![vec![1.0, 2.0], vec![2.0, 0.5], vec![0.2, 3.0]];
        let expect = pts
            .iter()
            .map(|p| tch_scalarize(p, &w1.rows()[0], &[0.0, 0.0]).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert_eq!(r2_indicator(&pts, &w1, &[0.0, 0.0]).unwrap(), expect);

        let w = make_weights::<f64>(WeightMethod::UniformSimplex, 7, 2, 1, None).unwrap();
        let mut with_ideal = pts.clone();
        with_ideal.push(vec![0.0, 0.0]);
        assert_eq!(r2_indicator(&with_ideal, &w, &[0.0, 0.0]).unwrap(), 0.0);

        let empty: Vec<Vec<f64>> = vec![];
        assert_eq!(r2_indicator(&empty, &w, &[0.0, 0.0]), Err(F4mError::EmptySet));
    }

    #[test]
    fn r2_equals_gws_over_m() {
        let w = make_weights::<f64>(WeightMethod::UniformSimplex, 30, 3, 2, None).unwrap();
        let base = dtlz2(3);
        let p = f4m_transform(base.clone(), w.clone(), vec![0.0; 3]).unwrap();
        let xs: Vec<Vec<f64>> = (0..5)
            .map(|i| (0..12).map(|j| ((i * 7 + j * 3) % 11) as f64 / 10.0).collect())
            .collect();
        let base_f: Vec<Vec<f64>> = xs.iter().map(|x| base.evaluate(x).unwrap().into_inner()).collect();
        let f4m_f: Vec<Vec<f64>> = xs.iter().map(|x| p.evaluate(x).unwrap().into_inner()).collect();
        let lhs = gws(&f4m_f).unwrap() / 30.0;
        let rhs = r2_indicator(&base_f, &w, &[0.0; 3]).unwrap();
        assert!((lhs - rhs).abs() < 1e-12);
    }
}
