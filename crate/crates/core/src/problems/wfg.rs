use std::f64::consts::{FRAC_PI_2, PI};

use super::{Problem, ProblemSpec};
use crate::error::{F4mError, Result};
use crate::scalar::Scalar;

/// WFG1-4 with `q` objectives, `q - 1` position parameters and 10 distance
/// parameters by default. Variable `j` (1-based) lies in `[0, 2j]`.
///
/// Objectives are returned raw (scale `S_i = 2i`, distance scale `D = 1`).
#[derive(Debug, Clone)]
pub struct Wfg<T> {
    variant: usize,
    position: usize,
    spec: ProblemSpec<T>,
}

impl<T: Scalar> Wfg<T> {
    pub const DEFAULT_DISTANCE: usize = 10;

    pub fn new(variant: usize, q: usize) -> Result<Self> {
        Self::with_params(variant, q, q.saturating_sub(1), Self::DEFAULT_DISTANCE)
    }

    pub fn with_params(variant: usize, q: usize, position: usize, distance: usize) -> Result<Self> {
        if !(1..=4).contains(&variant) {
            return Err(F4mError::UnsupportedVariant {
                family: "WFG",
                variant,
            });
        }
        if q < 2 {
            return Err(F4mError::InvalidProblem(format!("WFG{variant}: q must be >= 2")));
        }
        if position == 0 || !position.is_multiple_of(q - 1) {
            return Err(F4mError::InvalidProblem(format!(
                "WFG{variant}: position count {position} must be a positive multiple of q - 1"
            )));
        }
        if distance == 0 || (matches!(variant, 2 | 3) && !distance.is_multiple_of(2)) {
            return Err(F4mError::InvalidProblem(format!(
                "WFG{variant}: invalid distance count {distance}"
            )));
        }
        let n = position + distance;
        let bounds = (1..=n).map(|j| (T::zero(), T::from_usize(2 * j).unwrap())).collect();
        let spec = ProblemSpec::new(format!("wfg{variant}"), q, bounds)?;
        Ok(Self {
            variant,
            position,
            spec,
        })
    }

    pub fn variant(&self) -> usize {
        self.variant
    }

    /// Decision vector on the Pareto set: the given position values in
    /// `[0, 1]` followed by distance parameters at their optimum 0.35, all
    /// scaled to the variable bounds.
    pub fn optimal_decision(&self, position: &[T]) -> Vec<T> {
        let opt = T::lit(0.35);
        (0..self.spec.d)
            .map(|j| {
                let z = if j < self.position { position[j] } else { opt };
                z * self.spec.bounds[j].1
            })
            .collect()
    }
}

fn correct_to_01<T: Scalar>(x: T) -> T {
    let eps = T::lit(1e-10);
    if x <= T::zero() && x >= -eps {
        T::zero()
    } else if x >= T::one() && x <= T::one() + eps {
        T::one()
    } else {
        x
    }
}

fn s_linear<T: Scalar>(y: T, a: T) -> T {
    correct_to_01((y - a).abs() / ((a - y).floor() + a).abs())
}

fn b_flat<T: Scalar>(y: T, a: T, b: T, c: T) -> T {
    let zero = T::zero();
    let one = T::one();
    let left = zero.min((y - b).floor()) * a * (b - y) / b;
    let right = zero.min((c - y).floor()) * (one - a) * (y - c) / (one - c);
    correct_to_01(a + left - right)
}

fn b_poly<T: Scalar>(y: T, alpha: T) -> T {
    correct_to_01(y.powf(alpha))
}

fn s_multi<T: Scalar>(y: T, a: T, b: T, c: T) -> T {
    let one = T::one();
    let two = T::lit(2.0);
    let tmp1 = (y - c).abs() / (two * ((c - y).floor() + c));
    let tmp2 = (T::lit(4.0) * a + two) * T::lit(PI) * (T::lit(0.5) - tmp1);
    correct_to_01((one + tmp2.cos() + T::lit(4.0) * b * tmp1 * tmp1) / (b + two))
}

fn r_sum<T: Scalar>(y: &[T], w: &[T]) -> T {
    let (num, den) = y
        .iter()
        .zip(w)
        .fold((T::zero(), T::zero()), |(n, d), (&yi, &wi)| (n + yi * wi, d + wi));
    correct_to_01(num / den)
}

fn r_nonsep<T: Scalar>(y: &[T], a: usize) -> T {
    let len = y.len();
    let mut num = T::zero();
    for j in 0..len {
        num = num + y[j];
        for k in 0..a.saturating_sub(1) {
            num = num + (y[j] - y[(j + k + 1) % len]).abs();
        }
    }
    let half_up = a.div_ceil(2);
    let den = T::from_usize(len).unwrap() / T::from_usize(a).unwrap()
        * T::from_usize(half_up).unwrap()
        * T::from_usize(1 + 2 * a - 2 * half_up).unwrap();
    correct_to_01(num / den)
}

enum Shape {
    ConvexMixed,
    ConvexDisc,
    Linear,
    Concave,
}

fn convex<T: Scalar>(x: &[T], m: usize, big_m: usize) -> T {
    let hp = T::lit(FRAC_PI_2);
    let one = T::one();
    let upto = big_m - m;
    let mut r = one;
    for &xi in &x[..upto] {
        r = r * (one - (xi * hp).cos());
    }
    if m > 1 {
        r = r * (one - (x[upto] * hp).sin());
    }
    r
}

fn concave<T: Scalar>(x: &[T], m: usize, big_m: usize) -> T {
    let hp = T::lit(FRAC_PI_2);
    let upto = big_m - m;
    let mut r = T::one();
    for &xi in &x[..upto] {
        r = r * (xi * hp).sin();
    }
    if m > 1 {
        r = r * (x[upto] * hp).cos();
    }
    r
}

fn linear<T: Scalar>(x: &[T], m: usize, big_m: usize) -> T {
    let upto = big_m - m;
    let mut r = T::one();
    for &xi in &x[..upto] {
        r = r * xi;
    }
    if m > 1 {
        r = r * (T::one() - x[upto]);
    }
    r
}

fn mixed<T: Scalar>(x1: T, alpha: T, a: T) -> T {
    let two_a_pi = T::lit(2.0) * a * T::lit(PI);
    (T::one() - x1 - (two_a_pi * x1 + T::lit(FRAC_PI_2)).cos() / two_a_pi).powf(alpha)
}

fn disc<T: Scalar>(x1: T, alpha: T, beta: T, a: T) -> T {
    let c = (a * x1.powf(beta) * T::lit(PI)).cos();
    T::one() - x1.powf(alpha) * c * c
}

impl<T: Scalar> Wfg<T> {
    /// Weighted reduction of position and distance groups shared by all
    /// variants: `weights(j)` gives the weight of 0-based variable `j`.
    fn reduce(&self, y: &[T], k: usize, weights: impl Fn(usize) -> T) -> Vec<T> {
        let q = self.spec.m;
        let group = k / (q - 1);
        let mut t = Vec::with_capacity(q);
        for g in 0..q - 1 {
            let range = g * group..(g + 1) * group;
            let w: Vec<T> = range.clone().map(&weights).collect();
            t.push(r_sum(&y[range], &w));
        }
        let w: Vec<T> = (k..y.len()).map(&weights).collect();
        t.push(r_sum(&y[k..], &w));
        t
    }

    fn transform(&self, x: &[T]) -> Vec<T> {
        let k = self.position;
        let n = self.spec.d;
        let mut y: Vec<T> = x
            .iter()
            .zip(&self.spec.bounds)
            .map(|(&xi, &(_, hi))| xi / hi)
            .collect();
        let ones = |_: usize| T::one();
        match self.variant {
            1 => {
                for yi in &mut y[k..] {
                    *yi = s_linear(*yi, T::lit(0.35));
                }
                for yi in &mut y[k..] {
                    *yi = b_flat(*yi, T::lit(0.8), T::lit(0.75), T::lit(0.85));
                }
                for yi in &mut y {
                    *yi = b_poly(*yi, T::lit(0.02));
                }
                self.reduce(&y, k, |j| T::from_usize(2 * (j + 1)).unwrap())
            }
            2 | 3 => {
                for yi in &mut y[k..] {
                    *yi = s_linear(*yi, T::lit(0.35));
                }
                let l = n - k;
                let mut y2: Vec<T> = y[..k].to_vec();
                for i in 0..l / 2 {
                    y2.push(r_nonsep(&y[k + 2 * i..k + 2 * i + 2], 2));
                }
                self.reduce(&y2, k, ones)
            }
            _ => {
                for yi in &mut y {
                    *yi = s_multi(*yi, T::lit(30.0), T::lit(10.0), T::lit(0.35));
                }
                self.reduce(&y, k, ones)
            }
        }
    }

    fn shape(&self) -> Shape {
        match self.variant {
            1 => Shape::ConvexMixed,
            2 => Shape::ConvexDisc,
            3 => Shape::Linear,
            _ => Shape::Concave,
        }
    }
}

impl<T: Scalar> Problem<T> for Wfg<T> {
    fn spec(&self) -> &ProblemSpec<T> {
        &self.spec
    }

    fn evaluate_unchecked(&self, x: &[T]) -> Vec<T> {
        let big_m = self.spec.m;
        let t = self.transform(x);
        let dist = t[big_m - 1];
        // WFG3 is degenerate: only the first position coordinate keeps A = 1.
        let pos: Vec<T> = (0..big_m - 1)
            .map(|i| {
                let a = if self.variant == 3 && i > 0 { T::zero() } else { T::one() };
                dist.max(a) * (t[i] - T::lit(0.5)) + T::lit(0.5)
            })
            .collect();
        let shape = self.shape();
        (1..=big_m)
            .map(|m| {
                let h = match shape {
                    Shape::ConvexMixed if m == big_m => mixed(pos[0], T::one(), T::lit(5.0)),
                    Shape::ConvexDisc if m == big_m => disc(pos[0], T::one(), T::one(), T::lit(5.0)),
                    Shape::ConvexMixed | Shape::ConvexDisc => convex(&pos, m, big_m),
                    Shape::Linear => linear(&pos, m, big_m),
                    Shape::Concave => concave(&pos, m, big_m),
                };
                dist + T::from_usize(2 * m).unwrap() * h
            })
            .collect()
    }
}
