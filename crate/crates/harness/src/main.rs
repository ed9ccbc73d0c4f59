use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use f4m_core::problems::ProblemRegistry;
use f4m_core::selection::greedy_subset;
use f4m_core::gws;
use f4m_harness::io::{read_set, set_to_tsv};
use f4m_harness::{run_experiment, AlgorithmName, ExperimentConfig};

#[derive(Parser)]
#[command(name = "f4m", version, about = "Few-for-many optimization experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a single seeded repetition.
    Run {
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Run a full experiment from a config file.
    Bench {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
        #[arg(long)]
        reps: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Greedy subset selection over a population file (set.tsv format).
    Select {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List registered problems.
    ListProblems,
}

#[derive(Args)]
struct Overrides {
    #[arg(long)]
    problem: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    evals: Option<usize>,
    /// Seed of the run (`run`) or first seed (`bench`).
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    init_size: Option<usize>,
    /// uniform | das-dennis | equispaced-2d
    #[arg(long)]
    weights: Option<String>,
    #[arg(long)]
    weight_seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    log_every: Option<usize>,
    /// som_emoa | som_emoa_no_archive | som_emoa_no_p | random_search
    #[arg(long)]
    algorithm: Option<String>,
    #[arg(long, conflicts_with = "no_p")]
    no_archive: bool,
    #[arg(long)]
    no_p: bool,
}

impl Overrides {
    fn apply(self, c: &mut ExperimentConfig) -> Result<()> {
        macro_rules! set {
            ($src:expr => $dst:expr) => {
                if let Some(v) = $src {
                    $dst = v;
                }
            };
        }
        set!(self.problem => c.problem.name);
        set!(self.m => c.problem.m);
        set!(self.k => c.algorithm.k);
        set!(self.evals => c.algorithm.evals);
        set!(self.seed => c.experiment.seed_base);
        set!(self.init_size => c.algorithm.init_size);
        set!(self.weights => c.problem.weights);
        set!(self.out => c.experiment.out);
        set!(self.log_every => c.algorithm.log_every);
        if let Some(s) = self.weight_seed {
            c.problem.weight_seed = s;
            c.problem.weight_seed_per_run = false;
        }
        if let Some(a) = self.algorithm {
            c.algorithm.name = AlgorithmName::parse(&a)?;
        }
        if self.no_archive {
            c.algorithm.name = AlgorithmName::SomEmoaNoArchive;
        }
        if self.no_p {
            c.algorithm.name = AlgorithmName::SomEmoaNoP;
        }
        Ok(())
    }
}

fn experiment(config: ExperimentConfig) -> Result<()> {
    let registry = ProblemRegistry::with_builtins();
    let outcome = run_experiment(&config, &registry)?;
    for r in &outcome.records {
        println!("seed {:>4}  gws {:.6e}  {:.2}s", r.seed, r.final_gws, r.wall_clock_s);
    }
    let s = &outcome.summary.stats;
    println!(
        "mean {:.6e}  std {:.3e}  min {:.6e}  max {:.6e}  ({} runs)",
        s.mean, s.std, s.min, s.max, s.runs
    );
    println!("results in {}", outcome.dir.display());
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Run { config, overrides } => {
            let mut c = match config {
                Some(p) => ExperimentConfig::from_file(&p)?,
                None => ExperimentConfig::default(),
            };
            overrides.apply(&mut c)?;
            c.experiment.repetitions = 1;
            c.experiment.threads = Some(1);
            experiment(c)
        }
        Command::Bench {
            config,
            overrides,
            reps,
            threads,
        } => {
            let mut c = ExperimentConfig::from_file(&config)?;
            overrides.apply(&mut c)?;
            if let Some(r) = reps {
                c.experiment.repetitions = r;
            }
            if threads.is_some() {
                c.experiment.threads = threads;
            }
            experiment(c)
        }
        Command::Select { input, k, out } => {
            let pop = read_set(&input)?;
            let chosen = greedy_subset(&pop, k)?;
            eprintln!("gws {:.6e}", gws(&chosen)?);
            let text = set_to_tsv(&chosen);
            match out {
                Some(p) => std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::ListProblems => {
            for (name, description) in ProblemRegistry::<f64>::with_builtins().list() {
                println!("{name:<12} {description}");
            }
            Ok(())
        }
    }
}
