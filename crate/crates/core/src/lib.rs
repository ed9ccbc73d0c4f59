//! Few-for-many (F4M) optimization.
//!
//! A small set of `k` solutions is asked to cover `m >> k` objectives; each
//! objective is served by whichever member of the set does best on it. The
//! quality of a set is its sum-of-minimum value ([`gws`]).
//!
//! The crate provides:
//!
//! - set-level metrics ([`metrics`]),
//! - base benchmark problems, weight generation, the R2-based F4M transform
//!   and a noisy mixed linear regression instance ([`problems`]),
//! - the SoM-EMOA steady-state algorithm ([`algorithm`]),
//! - greedy subset selection ([`selection`]).
//!
//! All numeric code is generic over [`Scalar`]; the `f64` aliases at the
//! crate root are what the harness and most callers use.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algorithm;
pub mod error;
pub mod metrics;
pub mod problems;
pub mod scalar;
pub mod selection;
pub mod types;

pub use error::{F4mError, Result};
pub use metrics::{gtch_set, gws, set_objective_vector, tch_scalarize, GtchParams};
pub use scalar::Scalar;
pub use types::{DecisionVector, EvaluatedSolution, ObjectiveVector, Objectives};

/// `f64` decision vector.
pub type Decision = types::DecisionVector<f64>;
/// `f64` objective vector.
pub type Objective = types::ObjectiveVector<f64>;
/// `f64` evaluated solution.
pub type Solution = types::EvaluatedSolution<f64>;
/// Ordered `f64` solution set.
pub type SolutionSet = Vec<Solution>;
/// `f64` problem trait object.
pub type DynProblem = dyn problems::Problem<f64>;
/// `f64` weight set.
pub type Weights = problems::WeightSet<f64>;
/// `f64` archive.
pub type F64Archive = algorithm::Archive<f64>;
/// `f64` population.
pub type F64Population = algorithm::PopulationState<f64>;
