//! Exact and heuristic solvers for group-fair Max-Cut.
//!
//! A graph's edges or vertices are split into groups. Each group has a
//! utility for every cut, and the objectives ask for the best cut (or the
//! best lottery over cuts) for the worst-off group, next to the plain
//! Max-Cut optimum. Exact values are computed with rational arithmetic by
//! enumerating cuts and solving the resulting maximin linear program.

pub mod distribution;
pub mod error;
pub mod exact;
pub mod families;
pub mod format;
pub mod graph;
pub mod heuristics;
pub mod maximin;
pub mod objectives;
pub mod rational;
pub mod rng;
pub mod utility;
pub mod verify;

pub use distribution::{evaluate_distribution, CutDistribution, DistributionScore};
pub use error::{Error, Result};
pub use exact::{Enumerator, Mode, PayoffMatrix, StaticSolution};
pub use graph::{Cut, Graph, GroupPartition, PartitionKind};
pub use maximin::{solve_matrix_game, solve_maximin, GameSolution, MaximinSolution};
pub use objectives::{FairnessReport, Objective};
pub use rational::Rational;
pub use utility::UtilityModel;
