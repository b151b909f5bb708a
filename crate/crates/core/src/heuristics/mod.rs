//! Non-exact algorithms: separate-and-solve, the naive random cut, local
//! search, and hyperplane rounding.

pub mod gw;
pub mod local_search;
pub mod naive;
pub mod separate;

pub use crate::distribution::{evaluate_distribution, DistributionScore};
pub use gw::{
    gw_expected_proportions, gw_round, gw_sdp_solve, sdp_objective, GwRounding, SdpResult, UnitVectorEmbedding,
};
pub use local_search::{is_locally_optimal, local_search_cut, local_search_from_empty};
pub use naive::{naive_random_sample, naive_random_stats, EmpiricalStats, NaiveGroupStats};
pub use separate::{
    default_group_oracle, separate_solve, GroupOracle, LocalSearchOracle, OracleResult, SeparateSolveOutcome,
};
