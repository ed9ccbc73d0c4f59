use std::f64::consts::FRAC_PI_2;

use super::{Problem, ProblemSpec};
use crate::error::{F4mError, Result};
use crate::scalar::Scalar;

/// DTLZ1-4 with `q` objectives over `[0, 1]^d`.
///
/// `d = q - 1 + distance`; the default distance-variable count is 5 for
/// DTLZ1 and 10 for DTLZ2-4. DTLZ4 uses bias exponent 100.
#[derive(Debug, Clone)]
pub struct Dtlz<T> {
    variant: usize,
    spec: ProblemSpec<T>,
}

impl<T: Scalar> Dtlz<T> {
    pub const DTLZ4_ALPHA: f64 = 100.0;

    pub fn new(variant: usize, q: usize) -> Result<Self> {
        let distance = match variant {
            1 => 5,
            2..=4 => 10,
            _ => {
                return Err(F4mError::UnsupportedVariant {
                    family: "DTLZ",
                    variant,
                })
            }
        };
        Self::with_distance(variant, q, distance)
    }

    pub fn with_distance(variant: usize, q: usize, distance: usize) -> Result<Self> {
        if !(1..=4).contains(&variant) {
            return Err(F4mError::UnsupportedVariant {
                family: "DTLZ",
                variant,
            });
        }
        if q < 2 {
            return Err(F4mError::InvalidProblem(format!("DTLZ{variant}: q must be >= 2")));
        }
        let d = q - 1 + distance;
        let spec = ProblemSpec::new(
            format!("dtlz{variant}"),
            q,
            vec![(T::zero(), T::one()); d],
        )?;
        Ok(Self { variant, spec })
    }

    pub fn variant(&self) -> usize {
        self.variant
    }

    fn g_rastrigin(xm: &[T]) -> T {
        let half = T::lit(0.5);
        let twenty_pi = T::lit(20.0 * std::f64::consts::PI);
        let s = xm.iter().fold(T::zero(), |acc, &x| {
            let t = x - half;
            acc + t * t - (twenty_pi * t).cos()
        });
        T::lit(100.0) * (T::from_usize(xm.len()).unwrap() + s)
    }

    fn g_sphere(xm: &[T]) -> T {
        let half = T::lit(0.5);
        xm.iter().fold(T::zero(), |acc, &x| acc + (x - half) * (x - half))
    }

    fn linear_front(pos: &[T], g: T, q: usize) -> Vec<T> {
        let scale = T::lit(0.5) * (T::one() + g);
        (0..q)
            .map(|i| {
                let upto = q - 1 - i;
                let mut v = scale;
                for &x in &pos[..upto] {
                    v = v * x;
                }
                if i > 0 {
                    v = v * (T::one() - pos[upto]);
                }
                v
            })
            .collect()
    }

    fn spherical_front(pos: &[T], g: T, q: usize) -> Vec<T> {
        let half_pi = T::lit(FRAC_PI_2);
        let scale = T::one() + g;
        (0..q)
            .map(|i| {
                let upto = q - 1 - i;
                let mut v = scale;
                for &x in &pos[..upto] {
                    v = v * (x * half_pi).cos();
                }
                if i > 0 {
                    v = v * (pos[upto] * half_pi).sin();
                }
                v
            })
            .collect()
    }
}

impl<T: Scalar> Problem<T> for Dtlz<T> {
    fn spec(&self) -> &ProblemSpec<T> {
        &self.spec
    }

    fn evaluate_unchecked(&self, x: &[T]) -> Vec<T> {
        let q = self.spec.m;
        let (pos, dist) = x.split_at(q - 1);
        match self.variant {
            1 => Self::linear_front(pos, Self::g_rastrigin(dist), q),
            2 => Self::spherical_front(pos, Self::g_sphere(dist), q),
            3 => Self::spherical_front(pos, Self::g_rastrigin(dist), q),
            _ => {
                let alpha = T::lit(Self::DTLZ4_ALPHA);
                let biased: Vec<T> = pos.iter().map(|&p| p.powf(alpha)).collect();
                Self::spherical_front(&biased, Self::g_sphere(dist), q)
            }
        }
    }
}
