use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};

use crate::error::{F4mError, Result};
use crate::scalar::Scalar;

const SUM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightMethod {
    /// Simplex-lattice (Das-Dennis) compositions `h / H`.
    DasDennis,
    /// Flat-Dirichlet samples from normalized exponential draws.
    UniformSimplex,
    /// `m` evenly spaced two-objective weights from `(0, 1)` to `(1, 0)`.
    Equispaced2d,
}

impl WeightMethod {
    pub fn name(self) -> &'static str {
        match self {
            WeightMethod::DasDennis => "das-dennis",
            WeightMethod::UniformSimplex => "uniform",
            WeightMethod::Equispaced2d => "equispaced-2d",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "das-dennis" | "das_dennis" => Ok(WeightMethod::DasDennis),
            "uniform" | "uniform_simplex" | "uniform-simplex" => Ok(WeightMethod::UniformSimplex),
            "equispaced-2d" | "equispaced_2d" => Ok(WeightMethod::Equispaced2d),
            other => Err(F4mError::InvalidWeights(format!("unknown weight method '{other}'"))),
        }
    }
}

/// `m` nonnegative weight rows of width `q`, each summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSet<T> {
    rows: Vec<Vec<T>>,
    method: Option<WeightMethod>,
    seed: Option<u64>,
}

impl<T: Scalar> WeightSet<T> {
    /// Validates rows: equal width, nonnegative entries, unit sum within 1e-12
    /// (or a few ulps of the scalar type, whichever is looser).
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let width = rows
            .first()
            .map(Vec::len)
            .ok_or_else(|| F4mError::InvalidWeights("weight set is empty".into()))?;
        if width == 0 {
            return Err(F4mError::InvalidWeights("weight rows are empty".into()));
        }
        let tol = SUM_TOLERANCE.max(T::epsilon().to_f64_lossy() * 4.0 * width as f64);
        for (row, w) in rows.iter().enumerate() {
            if w.len() != width {
                return Err(F4mError::DimensionMismatch {
                    what: "weight row",
                    expected: width,
                    found: w.len(),
                });
            }
            if let Some((index, &value)) = w.iter().enumerate().find(|(_, &x)| !(x >= T::zero())) {
                return Err(F4mError::NegativeWeight {
                    index,
                    value: value.to_f64_lossy(),
                });
            }
            let sum = w.iter().fold(0.0, |acc, x| acc + x.to_f64_lossy());
            if (sum - 1.0).abs() > tol {
                return Err(F4mError::WeightNotNormalized { row, sum });
            }
        }
        Ok(Self {
            rows,
            method: None,
            seed: None,
        })
    }

    fn tagged(mut self, method: WeightMethod, seed: Option<u64>) -> Self {
        self.method = Some(method);
        self.seed = seed;
        self
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row width (number of base objectives).
    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn method(&self) -> Option<WeightMethod> {
        self.method
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Plain-text matrix: one row per line, space separated, 17 significant
    /// digits so the file replays bit-exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let mut first = true;
            for v in row {
                if !first {
                    out.push(' ');
                }
                first = false;
                write!(out, "{:.16e}", v.to_f64_lossy()).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| {
                        tok.parse::<f64>()
                            .map(T::lit)
                            .map_err(|e| F4mError::InvalidWeights(format!("bad value '{tok}': {e}")))
                    })
                    .collect::<Result<Vec<T>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Full simplex lattice with `q` components and `h` divisions, in
/// lexicographically descending order of the leading components. Yields
/// `C(h + q - 1, q - 1)` distinct rows.
pub fn das_dennis<T: Scalar>(q: usize, h: usize) -> Result<WeightSet<T>> {
    if q < 2 {
        return Err(F4mError::InvalidWeights("q must be >= 2".into()));
    }
    if h == 0 {
        return Err(F4mError::InvalidWeights("lattice divisions H must be >= 1".into()));
    }
    fn rec(remaining: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in (0..=remaining).rev() {
            prefix.push(v);
            rec(remaining - v, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut parts = Vec::with_capacity(binomial(h + q - 1, q - 1));
    rec(h, q, &mut Vec::with_capacity(q), &mut parts);
    let hh = T::from_usize(h).unwrap();
    let rows = parts
        .into_iter()
        .map(|p| p.into_iter().map(|c| T::from_usize(c).unwrap() / hh).collect())
        .collect();
    Ok(WeightSet::from_rows(rows)?.tagged(WeightMethod::DasDennis, None))
}

/// Generates `m` weight rows of width `q`.
///
/// - `DasDennis`: uses `lattice_h` (or the smallest `H` whose lattice has at
///   least `m` points); when the lattice is larger than `m`, rows are taken at
///   evenly strided lattice indices.
/// - `UniformSimplex`: seeded flat-Dirichlet samples.
/// - `Equispaced2d`: `q = 2` only, row `i` is `(i/(m-1), 1 - i/(m-1))`.
pub fn make_weights<T: Scalar>(
    method: WeightMethod,
    m: usize,
    q: usize,
    seed: u64,
    lattice_h: Option<usize>,
) -> Result<WeightSet<T>> {
    if m == 0 {
        return Err(F4mError::InvalidWeights("m must be >= 1".into()));
    }
    if q < 2 {
        return Err(F4mError::InvalidWeights("q must be >= 2".into()));
    }
    match method {
        WeightMethod::DasDennis => {
            let h = match lattice_h {
                Some(h) => {
                    let count = binomial(h + q - 1, q - 1);
                    if count < m {
                        return Err(F4mError::InvalidWeights(format!(
                            "lattice H={h} yields {count} vectors for q={q}, fewer than m={m}"
                        )));
                    }
                    h
                }
                None => (1..).find(|&h| binomial(h + q - 1, q - 1) >= m).unwrap(),
            };
            let full = das_dennis::<T>(q, h)?;
            let count = full.len();
            let rows = if count == m {
                full.rows
            } else {
                (0..m).map(|i| full.rows[i * count / m].clone()).collect()
            };
            Ok(WeightSet::from_rows(rows)?.tagged(method, None))
        }
        WeightMethod::UniformSimplex => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rows = (0..m)
                .map(|_| {
                    let draws: Vec<f64> = (0..q).map(|_| Exp1.sample(&mut rng)).collect();
                    let total: f64 = draws.iter().sum();
                    draws.into_iter().map(|e| T::lit(e / total)).collect()
                })
                .collect();
            Ok(WeightSet::from_rows(rows)?.tagged(method, Some(seed)))
        }
        WeightMethod::Equispaced2d => {
            if q != 2 {
                return Err(F4mError::InvalidWeights(format!(
                    "equispaced-2d requires q = 2, got {q}"
                )));
            }
            if m < 2 {
                return Err(F4mError::InvalidWeights("equispaced-2d requires m >= 2".into()));
            }
            let denom = T::from_usize(m - 1).unwrap();
            let rows = (0..m)
                .map(|i| {
                    let a = T::from_usize(i).unwrap() / denom;
                    vec![a, T::one() - a]
                })
                .collect();
            Ok(WeightSet::from_rows(rows)?.tagged(method, None))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn das_dennis_q3_h2() {
        let w = das_dennis::<f64>(3, 2).unwrap();
        let mut rows = w.rows().to_vec();
        rows.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut expected = vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![0.5, 0.5, 0.0],
            vec![0.5, 0.0, 0.5],
            vec![0.0, 0.5, 0.5],
        ];
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(rows, expected);
    }

    #[test]
    fn das_dennis_counts_are_binomial() {
        for q in 2..=5 {
            for h in 1..=8 {
                let w = das_dennis::<f64>(q, h).unwrap();
                assert_eq!(w.len(), binomial(h + q - 1, q - 1));
                let mut rows = w.rows().to_vec();
                rows.sort_by(|a, b| a.partial_cmp(b).unwrap());
                rows.dedup();
                assert_eq!(rows.len(), w.len());
            }
        }
    }

    #[test]
    fn das_dennis_too_small_h() {
        let err = make_weights::<f64>(WeightMethod::DasDennis, 25, 3, 0, Some(2)).unwrap_err();
        assert!(matches!(err, F4mError::InvalidWeights(_)));
        let ok = make_weights::<f64>(WeightMethod::DasDennis, 25, 3, 0, None).unwrap();
        assert_eq!(ok.len(), 25);
    }

    #[test]
    fn equispaced_ten() {
        let w = make_weights::<f64>(WeightMethod::Equispaced2d, 10, 2, 0, None).unwrap();
        assert_eq!(w.rows()[0], vec![0.0, 1.0]);
        assert_eq!(w.rows()[9], vec![1.0, 0.0]);
        for i in 0..10 {
            assert!((w.rows()[i][0] - i as f64 / 9.0).abs() < 1e-15);
        }
        assert!(make_weights::<f64>(WeightMethod::Equispaced2d, 10, 3, 0, None).is_err());
    }

    #[test]
    fn uniform_is_seeded() {
        let a = make_weights::<f64>(WeightMethod::UniformSimplex, 25, 3, 9, None).unwrap();
        let b = make_weights::<f64>(WeightMethod::UniformSimplex, 25, 3, 9, None).unwrap();
        let c = make_weights::<f64>(WeightMethod::UniformSimplex, 25, 3, 10, None).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.rows(), c.rows());
        assert_eq!(a.seed(), Some(9));
    }

    #[test]
    fn text_round_trip_is_exact() {
        let a = make_weights::<f64>(WeightMethod::UniformSimplex, 50, 3, 1, None).unwrap();
        let b = WeightSet::<f64>::from_text(&a.to_text()).unwrap();
        assert_eq!(a.rows(), b.rows());
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(WeightSet::<f64>::from_rows(vec![vec![0.5, 0.6]]).is_err());
        assert!(WeightSet::<f64>::from_rows(vec![vec![1.5, -0.5]]).is_err());
        assert!(WeightSet::<f64>::from_rows(vec![vec![0.5, 0.5], vec![1.0]]).is_err());
        assert!(WeightSet::<f64>::from_rows(vec![]).is_err());
    }

    proptest! {
        #[test]
        fn uniform_rows_on_simplex(m in 1usize..60, q in 2usize..6, seed in any::<u64>()) {
            let w = make_weights::<f64>(WeightMethod::UniformSimplex, m, q, seed, None).unwrap();
            prop_assert_eq!(w.len(), m);
            for row in w.rows() {
                prop_assert!(row.iter().all(|&x| x >= 0.0));
                prop_assert!((row.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            }
        }
    }
}
