use std::collections::BTreeMap;
use std::sync::Arc;

use super::{f4m_transform, make_weights, Dtlz, NmlrInstance, NmlrParams, Problem, WeightMethod, Wfg};
use crate::error::{F4mError, Result};
use crate::scalar::Scalar;

/// Construction parameters shared by every registered problem. Each factory
/// reads the fields it needs and ignores the rest.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemParams {
    /// Objective count of the coverage instance (weight rows, NMLR tasks).
    pub m: usize,
    /// Base objective count for DTLZ/WFG.
    pub q: usize,
    /// Set size of the run; NMLR uses it as `k*` unless `nmlr_k_star` is set.
    pub k: usize,
    pub weights: WeightMethod,
    pub weight_seed: u64,
    pub lattice_h: Option<usize>,
    pub nmlr_d: usize,
    pub nmlr_sigma: f64,
    pub nmlr_k_star: Option<usize>,
    pub nmlr_seed: u64,
}

impl Default for ProblemParams {
    fn default() -> Self {
        Self {
            m: 25,
            q: 3,
            k: 5,
            weights: WeightMethod::UniformSimplex,
            weight_seed: 0,
            lattice_h: None,
            nmlr_d: NmlrParams::DEFAULT_D,
            nmlr_sigma: NmlrParams::DEFAULT_SIGMA,
            nmlr_k_star: None,
            nmlr_seed: 0,
        }
    }
}

pub type ProblemFactory<T> = Arc<dyn Fn(&ProblemParams) -> Result<Arc<dyn Problem<T>>> + Send + Sync>;

struct Entry<T: Scalar> {
    description: String,
    factory: ProblemFactory<T>,
}

/// Problems keyed by name. Plug-ins register a factory under a new name and
/// become available to the harness like the built-ins.
pub struct ProblemRegistry<T: Scalar> {
    entries: BTreeMap<String, Entry<T>>,
}

impl<T: Scalar> Default for ProblemRegistry<T> {
    fn default() -> Self {
        Self::with_builtins()
    }
}

impl<T: Scalar> ProblemRegistry<T> {
    pub fn empty() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    /// `dtlz1..4`, `wfg1..4`, their `f4m-` transforms (z* at the origin) and `nmlr`.
    pub fn with_builtins() -> Self {
        let mut reg = Self::empty();
        for v in 1..=4 {
            reg.register(format!("dtlz{v}"), format!("raw DTLZ{v} with q objectives"), move |p| {
                Ok(Arc::new(Dtlz::<T>::new(v, p.q)?) as Arc<dyn Problem<T>>)
            });
            reg.register(format!("wfg{v}"), format!("raw WFG{v} with q objectives"), move |p| {
                Ok(Arc::new(Wfg::<T>::new(v, p.q)?) as Arc<dyn Problem<T>>)
            });
            reg.register(
                format!("f4m-dtlz{v}"),
                format!("DTLZ{v} transformed to m Tchebycheff objectives"),
                move |p| wrap(Arc::new(Dtlz::<T>::new(v, p.q)?), p),
            );
            reg.register(
                format!("f4m-wfg{v}"),
                format!("WFG{v} transformed to m Tchebycheff objectives"),
                move |p| wrap(Arc::new(Wfg::<T>::new(v, p.q)?), p),
            );
        }
        reg.register("nmlr", "noisy mixed linear regression with m tasks", |p| {
            let inst = NmlrInstance::<T>::new(NmlrParams {
                m: p.m,
                d: p.nmlr_d,
                k_star: p.nmlr_k_star.unwrap_or(p.k),
                sigma: p.nmlr_sigma,
                seed: p.nmlr_seed,
            })?;
            Ok(Arc::new(inst) as Arc<dyn Problem<T>>)
        });
        reg
    }

    pub fn register<F>(&mut self, name: impl Into<String>, description: impl Into<String>, factory: F)
    where
        F: Fn(&ProblemParams) -> Result<Arc<dyn Problem<T>>> + Send + Sync + 'static,
    {
        self.entries.insert(
            name.into(),
            Entry {
                description: description.into(),
                factory: Arc::new(factory),
            },
        );
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    pub fn build(&self, name: &str, params: &ProblemParams) -> Result<Arc<dyn Problem<T>>> {
        let entry = self
            .entries
            .get(name)
            .ok_or_else(|| F4mError::UnknownProblem(name.to_string()))?;
        (entry.factory)(params)
    }

    /// `(name, description)` pairs in name order.
    pub fn list(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries
            .iter()
            .map(|(k, e)| (k.as_str(), e.description.as_str()))
    }
}

fn wrap<T: Scalar>(base: Arc<dyn Problem<T>>, p: &ProblemParams) -> Result<Arc<dyn Problem<T>>> {
    let q = base.spec().m;
    let weights = make_weights::<T>(p.weights, p.m, q, p.weight_seed, p.lattice_h)?;
    Ok(Arc::new(f4m_transform(base, weights, vec![T::zero(); q])?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{FnProblem, ProblemSpec};

    #[test]
    fn builtins_resolve() {
        let reg = ProblemRegistry::<f64>::with_builtins();
        let p = ProblemParams::default();
        for name in ["dtlz1", "wfg4", "f4m-dtlz2", "f4m-wfg3", "nmlr"] {
            assert!(reg.contains(name));
            reg.build(name, &p).unwrap();
        }
        let f4m = reg.build("f4m-dtlz1", &p).unwrap();
        assert_eq!(f4m.spec().m, 25);
        assert_eq!(f4m.spec().d, 7);
        assert_eq!(f4m.weights().unwrap().len(), 25);
        assert_eq!(reg.build("nmlr", &p).unwrap().spec().d, 10);
        assert!(matches!(reg.build("zdt1", &p), Err(F4mError::UnknownProblem(_))));
        assert_eq!(reg.list().count(), 17);
    }

    #[test]
    fn plug_in() {
        let mut reg = ProblemRegistry::<f64>::with_builtins();
        reg.register("dummy", "two shifted spheres", |p| {
            let spec = ProblemSpec::new("dummy", p.m, vec![(-1.0, 1.0); 2])?;
            let m = p.m;
            Ok(Arc::new(FnProblem::new(spec, move |x: &[f64]| {
                (0..m).map(|i| (x[0] - i as f64 / m as f64).powi(2) + x[1] * x[1]).collect()
            })) as Arc<dyn Problem<f64>>)
        });
        let p = reg.build("dummy", &ProblemParams { m: 4, ..Default::default() }).unwrap();
        assert_eq!(p.evaluate(&[0.0, 0.0]).unwrap().as_slice()[0], 0.0);
    }
}
