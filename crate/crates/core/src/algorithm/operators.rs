//! Real-coded variation: simulated binary crossover and polynomial mutation,
//! both clipped to the box bounds.
//!
//! RNG use is fixed per call so streams stay aligned across runs: SBX draws
//! one crossover-probability value, then three values per coordinate
//! (spread, sign, per-variable swap); mutation draws two per coordinate
//! (site, spread).

use rand::Rng;

use crate::scalar::Scalar;

fn clip<T: Scalar>(x: T, (lo, hi): (T, T)) -> T {
    x.max(lo).min(hi)
}

/// Both SBX children before bound repair. Per coordinate the children are
/// `mean ± beta * (p1 - p2) / 2`, so `c1 + c2 == p1 + p2` up to rounding.
pub fn sbx_children<T: Scalar, R: Rng + ?Sized>(
    p1: &[T],
    p2: &[T],
    eta_c: f64,
    p_c: f64,
    rng: &mut R,
) -> (Vec<T>, Vec<T>) {
    let cross = rng.random::<f64>() < p_c;
    let half = T::lit(0.5);
    let mut c1 = Vec::with_capacity(p1.len());
    let mut c2 = Vec::with_capacity(p1.len());
    let exponent = 1.0 / (eta_c + 1.0);
    for (&a, &b) in p1.iter().zip(p2) {
        let mu: f64 = rng.random();
        let negate: bool = rng.random();
        let skip = rng.random::<f64>() < 0.5;
        let mut beta = if mu <= 0.5 {
            (2.0 * mu).powf(exponent)
        } else {
            (2.0 - 2.0 * mu).powf(-exponent)
        };
        if negate {
            beta = -beta;
        }
        if skip || !cross {
            beta = 1.0;
        }
        let beta = T::lit(beta);
        let mean = (a + b) * half;
        let spread = beta * (a - b) * half;
        c1.push(mean + spread);
        c2.push(mean - spread);
    }
    (c1, c2)
}

/// SBX returning the first child, clipped to `bounds`.
pub fn sbx_crossover<T: Scalar, R: Rng + ?Sized>(
    p1: &[T],
    p2: &[T],
    eta_c: f64,
    p_c: f64,
    bounds: &[(T, T)],
    rng: &mut R,
) -> Vec<T> {
    let (mut child, _) = sbx_children(p1, p2, eta_c, p_c, rng);
    for (c, &b) in child.iter_mut().zip(bounds) {
        *c = clip(*c, b);
    }
    child
}

/// Polynomial mutation: each coordinate is perturbed with probability
/// `p_m`, with a spread controlled by `eta_m`. Input must lie within bounds.
pub fn poly_mutation<T: Scalar, R: Rng + ?Sized>(
    x: &[T],
    eta_m: f64,
    p_m: f64,
    bounds: &[(T, T)],
    rng: &mut R,
) -> Vec<T> {
    let exponent = 1.0 / (eta_m + 1.0);
    x.iter()
        .zip(bounds)
        .map(|(&xi, &(lo, hi))| {
            let site = rng.random::<f64>() < p_m;
            let mu: f64 = rng.random();
            if !site {
                return xi;
            }
            let one = T::one();
            let two = T::lit(2.0);
            let mu = T::lit(mu);
            let power = T::lit(eta_m + 1.0);
            let exponent = T::lit(exponent);
            let range = hi - lo;
            let delta = if mu <= T::lit(0.5) {
                let base = two * mu + (one - two * mu) * (one - (xi - lo) / range).powf(power);
                base.powf(exponent) - one
            } else {
                let base = two * (one - mu) + two * (mu - T::lit(0.5)) * (one - (hi - xi) / range).powf(power);
                one - base.powf(exponent)
            };
            clip(xi + range * delta, (lo, hi))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_point(rng: &mut ChaCha8Rng, bounds: &[(f64, f64)]) -> Vec<f64> {
        bounds.iter().map(|&(lo, hi)| rng.random_range(lo..=hi)).collect()
    }

    #[test]
    fn identical_parents_reproduce() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let bounds = vec![(0.0, 1.0); 8];
        for _ in 0..200 {
            let p = random_point(&mut rng, &bounds);
            assert_eq!(sbx_crossover(&p, &p, 20.0, 1.0, &bounds, &mut rng), p);
        }
    }

    #[test]
    fn children_preserve_parent_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let bounds: Vec<(f64, f64)> = (1..=12).map(|j| (0.0, 2.0 * j as f64)).collect();
        for _ in 0..1000 {
            let a = random_point(&mut rng, &bounds);
            let b = random_point(&mut rng, &bounds);
            let (c1, c2) = sbx_children(&a, &b, 20.0, 1.0, &mut rng);
            for j in 0..12 {
                let lhs = c1[j] + c2[j];
                let rhs = a[j] + b[j];
                assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()), "{lhs} vs {rhs}");
            }
        }
    }

    #[test]
    fn crossover_stays_in_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let bounds = vec![(-2.0, 2.0); 10];
        for _ in 0..2000 {
            let a = random_point(&mut rng, &bounds);
            let b = random_point(&mut rng, &bounds);
            let c = sbx_crossover(&a, &b, 2.0, 1.0, &bounds, &mut rng);
            assert!(c.iter().all(|v| (-2.0..=2.0).contains(v)));
        }
    }

    #[test]
    fn zero_crossover_probability_copies_first_parent() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let bounds = vec![(0.0, 1.0); 5];
        let a = random_point(&mut rng, &bounds);
        let b = random_point(&mut rng, &bounds);
        assert_eq!(sbx_crossover(&a, &b, 20.0, 0.0, &bounds, &mut rng), a);
    }

    #[test]
    fn mutation_noop_at_zero_probability() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let bounds = vec![(0.0, 1.0); 12];
        let x = random_point(&mut rng, &bounds);
        assert_eq!(poly_mutation(&x, 20.0, 0.0, &bounds, &mut rng), x);
    }

    #[test]
    fn mutation_stays_in_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let bounds: Vec<(f64, f64)> = (1..=12).map(|j| (0.0, 2.0 * j as f64)).collect();
        for _ in 0..10_000 {
            let x = random_point(&mut rng, &bounds);
            let y = poly_mutation(&x, 20.0, 1.0, &bounds, &mut rng);
            assert!(y.iter().zip(&bounds).all(|(v, &(lo, hi))| *v >= lo && *v <= hi));
        }
    }

    #[test]
    fn mutation_shrinks_with_eta() {
        let bounds = vec![(0.0, 1.0); 10];
        let mean_step = |eta: f64| {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let mut total = 0.0;
            for _ in 0..2000 {
                let x = random_point(&mut rng, &bounds);
                let y = poly_mutation(&x, eta, 1.0, &bounds, &mut rng);
                total += x.iter().zip(&y).map(|(a, b)| (a - b).abs()).sum::<f64>();
            }
            total / 20_000.0
        };
        let steps: Vec<f64> = [5.0, 20.0, 200.0, 2000.0, 20000.0].iter().map(|&e| mean_step(e)).collect();
        assert!(steps.windows(2).all(|w| w[1] < w[0]), "{steps:?}");
        assert!(steps[4] < 1e-3);
    }
}
