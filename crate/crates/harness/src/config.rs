use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use f4m_core::algorithm::RunConfig;
use f4m_core::problems::{ProblemParams, ProblemRegistry, WeightMethod};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgorithmName {
    SomEmoa,
    SomEmoaNoArchive,
    SomEmoaNoP,
    RandomSearch,
}

impl AlgorithmName {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.replace('-', "_").as_str() {
            "som_emoa" => Self::SomEmoa,
            "som_emoa_no_archive" => Self::SomEmoaNoArchive,
            "som_emoa_no_p" => Self::SomEmoaNoP,
            "random_search" => Self::RandomSearch,
            other => bail!("unknown algorithm '{other}'"),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ProblemSection {
    pub name: String,
    pub m: usize,
    pub q: usize,
    /// NMLR feature dimension.
    pub d: usize,
    pub weights: String,
    pub weight_seed: u64,
    /// Draw a fresh weight set per repetition, seeded with the run seed,
    /// instead of sharing one set seeded with `weight_seed`.
    pub weight_seed_per_run: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_h: Option<usize>,
    pub nmlr_sigma: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nmlr_k_star: Option<usize>,
    pub nmlr_seed: u64,
}

impl Default for ProblemSection {
    fn default() -> Self {
        let p = ProblemParams::default();
        Self {
            name: "f4m-dtlz2".into(),
            m: p.m,
            q: p.q,
            d: p.nmlr_d,
            weights: p.weights.name().into(),
            weight_seed: p.weight_seed,
            weight_seed_per_run: false,
            lattice_h: p.lattice_h,
            nmlr_sigma: p.nmlr_sigma,
            nmlr_k_star: p.nmlr_k_star,
            nmlr_seed: p.nmlr_seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AlgorithmSection {
    pub name: AlgorithmName,
    pub k: usize,
    pub evals: usize,
    pub init_size: usize,
    pub eta_c: f64,
    pub eta_m: f64,
    pub p_c: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_m: Option<f64>,
    pub log_every: usize,
    pub check_invariants: bool,
}

impl Default for AlgorithmSection {
    fn default() -> Self {
        let r = RunConfig::default();
        Self {
            name: AlgorithmName::SomEmoa,
            k: r.k,
            evals: r.eval_budget,
            init_size: r.init_sample_n,
            eta_c: r.eta_c,
            eta_m: r.eta_m,
            p_c: r.p_c,
            p_m: r.p_m,
            log_every: r.log_every,
            check_invariants: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentSection {
    pub repetitions: usize,
    pub seed_base: u64,
    pub out: PathBuf,
    /// Worker threads; `None` uses all cores.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
}

impl Default for ExperimentSection {
    fn default() -> Self {
        Self {
            repetitions: 1,
            seed_base: 0,
            out: PathBuf::from("results"),
            threads: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problem: ProblemSection,
    pub algorithm: AlgorithmSection,
    pub experiment: ExperimentSection,
}

impl ExperimentConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).context("parsing experiment config")
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::from_toml_str(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config is always representable as TOML")
    }

    pub fn weight_method(&self) -> Result<WeightMethod> {
        Ok(WeightMethod::parse(&self.problem.weights)?)
    }

    /// Checks ranges and name resolution, and canonicalizes the weight
    /// method spelling so equivalent configs share a fingerprint.
    pub fn validate(&mut self, registry: &ProblemRegistry<f64>) -> Result<()> {
        if self.experiment.repetitions == 0 {
            bail!("repetitions must be >= 1");
        }
        if !registry.contains(&self.problem.name) {
            bail!("unknown problem '{}'", self.problem.name);
        }
        self.problem.weights = self.weight_method()?.name().into();
        if self.experiment.threads == Some(0) {
            bail!("threads must be >= 1");
        }
        if self.algorithm.name != AlgorithmName::RandomSearch {
            self.run_config(self.experiment.seed_base).validate()?;
        } else if self.algorithm.evals < self.algorithm.k {
            bail!("evaluation budget {} smaller than k = {}", self.algorithm.evals, self.algorithm.k);
        }
        Ok(())
    }

    pub fn seeds(&self) -> impl Iterator<Item = u64> {
        let base = self.experiment.seed_base;
        (0..self.experiment.repetitions as u64).map(move |r| base + r)
    }

    pub fn weight_seed_for(&self, seed: u64) -> u64 {
        if self.problem.weight_seed_per_run {
            seed
        } else {
            self.problem.weight_seed
        }
    }

    pub fn problem_params(&self, seed: u64) -> Result<ProblemParams> {
        let p = &self.problem;
        Ok(ProblemParams {
            m: p.m,
            q: p.q,
            k: self.algorithm.k,
            weights: self.weight_method()?,
            weight_seed: self.weight_seed_for(seed),
            lattice_h: p.lattice_h,
            nmlr_d: p.d,
            nmlr_sigma: p.nmlr_sigma,
            nmlr_k_star: p.nmlr_k_star,
            nmlr_seed: p.nmlr_seed,
        })
    }

    pub fn run_config(&self, seed: u64) -> RunConfig {
        let a = &self.algorithm;
        RunConfig {
            k: a.k,
            eval_budget: a.evals,
            init_sample_n: a.init_size,
            eta_c: a.eta_c,
            eta_m: a.eta_m,
            p_c: a.p_c,
            p_m: a.p_m,
            seed,
            use_archive: a.name != AlgorithmName::SomEmoaNoArchive,
            use_probability_p: a.name != AlgorithmName::SomEmoaNoP,
            log_every: a.log_every,
            check_invariants: a.check_invariants,
        }
    }

    /// First 16 hex digits of the SHA-256 of the config as JSON, with the
    /// output directory and thread count blanked.
    pub fn fingerprint(&self) -> String {
        let mut c = self.clone();
        c.experiment.out = PathBuf::new();
        c.experiment.threads = None;
        let json = serde_json::to_vec(&c).expect("config serializes");
        hex::encode(Sha256::digest(&json))[..16].to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_default_and_override() {
        let c = ExperimentConfig::from_toml_str(
            "[problem]\nname = \"f4m-dtlz1\"\nm = 50\n[algorithm]\nname = \"som_emoa_no_p\"\n",
        )
        .unwrap();
        assert_eq!(c.problem.m, 50);
        assert_eq!(c.problem.q, 3);
        assert_eq!(c.algorithm.name, AlgorithmName::SomEmoaNoP);
        assert_eq!(c.algorithm.evals, 60_000);
        assert!(!c.run_config(0).use_probability_p);
        assert!(c.run_config(0).use_archive);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(ExperimentConfig::from_toml_str("[problem]\nmm = 3\n").is_err());
    }

    #[test]
    fn toml_round_trip() {
        let mut c = ExperimentConfig::default();
        c.problem.lattice_h = Some(7);
        c.algorithm.p_m = Some(0.2);
        c.experiment.threads = Some(2);
        assert_eq!(ExperimentConfig::from_toml_str(&c.to_toml()).unwrap(), c);
    }

    #[test]
    fn fingerprint_ignores_location_only() {
        let a = ExperimentConfig::default();
        let mut b = a.clone();
        b.experiment.out = "elsewhere".into();
        b.experiment.threads = Some(3);
        assert_eq!(a.fingerprint(), b.fingerprint());
        b.algorithm.k = 6;
        assert_ne!(a.fingerprint(), b.fingerprint());
        assert_eq!(a.fingerprint().len(), 16);
    }

    #[test]
    fn validation_resolves_names() {
        let reg = ProblemRegistry::with_builtins();
        let mut c = ExperimentConfig::default();
        c.problem.weights = "das_dennis".into();
        c.validate(&reg).unwrap();
        assert_eq!(c.problem.weights, "das-dennis");
        c.problem.name = "nope".into();
        assert!(c.validate(&reg).is_err());
        let mut c = ExperimentConfig::default();
        c.experiment.repetitions = 0;
        assert!(c.validate(&reg).is_err());
        let mut c = ExperimentConfig::default();
        c.algorithm.init_size = 2;
        assert!(c.validate(&reg).is_err());
    }

    #[test]
    fn per_run_weight_seed() {
        let mut c = ExperimentConfig::default();
        c.problem.weight_seed = 4;
        assert_eq!(c.problem_params(9).unwrap().weight_seed, 4);
        c.problem.weight_seed_per_run = true;
        assert_eq!(c.problem_params(9).unwrap().weight_seed, 9);
    }
}
