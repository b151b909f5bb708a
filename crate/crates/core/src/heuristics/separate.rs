//! Separate-and-solve: solve each group on its own and play the per-group
//! solutions uniformly at random.
//!
//! If the oracle's cut xᵢ gives group i a proportion of at least α, then
//! under the uniform lottery over x₁…x_γ every group's expected proportion
//! is at least α/γ.

use crate::distribution::{evaluate_distribution, CutDistribution, DistributionScore};
use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, GroupPartition, PartitionKind};
use crate::rational::{from_usize, Rational};
use crate::rng::{trial_rng, uniform_cut};
use crate::utility::{group_proportion, UtilityModel};

use super::local_search::local_search_cut;

/// Finds a cut that serves one group well.
pub trait GroupOracle {
    fn cut_for_group(&self, g: &Graph, model: UtilityModel, partition: &GroupPartition, group: usize) -> Result<Cut>;
}

impl<F> GroupOracle for F
where
    F: Fn(&Graph, UtilityModel, &GroupPartition, usize) -> Result<Cut>,
{
    fn cut_for_group(&self, g: &Graph, model: UtilityModel, partition: &GroupPartition, group: usize) -> Result<Cut> {
        self(g, model, partition, group)
    }
}

/// Local search on the group's own subgraph: the edge subgraph of an edge
/// group, or the induced subgraph of a node group. Vertices outside that
/// subgraph stay outside S.
///
/// Without a seed the search starts from the empty cut; with a seed it starts
/// from a naive random cut drawn from stream `group` of that seed.
#[derive(Debug, Clone, Copy, Default)]
pub struct LocalSearchOracle {
    pub seed: Option<u64>,
}

impl GroupOracle for LocalSearchOracle {
    fn cut_for_group(&self, g: &Graph, _model: UtilityModel, partition: &GroupPartition, group: usize) -> Result<Cut> {
        let members =
            partition.groups().get(group).ok_or_else(|| Error::Oracle { group, reason: "no such group".into() })?;
        let (sub, map) = match partition.kind() {
            PartitionKind::Edge => (g.edge_subgraph(members)?, (0..g.vertex_count()).collect()),
            PartitionKind::Node => g.induced_subgraph(members)?,
        };
        let start = match self.seed {
            Some(seed) => uniform_cut(&mut trial_rng(seed, group as u64), sub.vertex_count()),
            None => Cut::empty(sub.vertex_count()),
        };
        let order: Vec<usize> = (0..sub.vertex_count()).collect();
        let local = local_search_cut(&sub, start, &order);
        Ok(Cut::from_members(g.vertex_count(), local.members().into_iter().map(|v| map[v])))
    }
}

/// The default per-group oracle, deterministic.
pub fn default_group_oracle(g: &Graph, model: UtilityModel, partition: &GroupPartition, group: usize) -> Result<Cut> {
    LocalSearchOracle::default().cut_for_group(g, model, partition, group)
}

/// Per-group oracle cuts and the α they achieve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub per_group_cuts: Vec<Cut>,
    /// minᵢ f_{xᵢ}(Uᵢ)/|Uᵢ|.
    pub alpha: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparateSolveOutcome {
    pub distribution: CutDistribution,
    pub oracle: OracleResult,
    /// α/γ.
    pub guarantee: Rational,
    /// Exact expected group proportions under `distribution`.
    pub score: DistributionScore,
}

pub fn separate_solve(
    g: &Graph,
    model: UtilityModel,
    partition: &GroupPartition,
    oracle: &dyn GroupOracle,
) -> Result<SeparateSolveOutcome> {
    model.check_partition(partition)?;
    model.check_graph(g)?;
    let mut cuts = Vec::with_capacity(partition.len());
    let mut alpha: Option<Rational> = None;
    for (i, group) in partition.groups().iter().enumerate() {
        let cut = oracle.cut_for_group(g, model, partition, i)?;
        if cut.vertex_count() != g.vertex_count() {
            return Err(Error::Oracle {
                group: i,
                reason: format!("returned a cut over {} vertices", cut.vertex_count()),
            });
        }
        let proportion = group_proportion(g, model, &cut, group)?;
        alpha = Some(match alpha {
            Some(a) if a <= proportion => a,
            _ => proportion,
        });
        cuts.push(cut);
    }
    let alpha = alpha.expect("partitions have at least one group");
    let distribution = CutDistribution::uniform(cuts.iter().cloned())?;
    let score = evaluate_distribution(g, model, partition, &distribution)?;
    Ok(SeparateSolveOutcome {
        guarantee: &alpha / from_usize(partition.len()),
        oracle: OracleResult { per_group_cuts: cuts, alpha },
        distribution,
        score,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cut_value;
    use crate::heuristics::local_search::is_locally_optimal;
    use crate::rational::{int, rat};

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn single_group_is_a_point_mass() {
        let g = cycle(5);
        let p = GroupPartition::whole(&g, PartitionKind::Edge).unwrap();
        let out = separate_solve(&g, UtilityModel::Edge, &p, &LocalSearchOracle::default()).unwrap();
        assert_eq!(out.distribution.support_size(), 1);
        assert_eq!(out.guarantee, out.oracle.alpha);
        assert_eq!(out.score.minimum, out.oracle.alpha);
    }

    #[test]
    fn bipartite_oracle_gives_full_value() {
        let g = cycle(6);
        let p = GroupPartition::for_graph(&g, PartitionKind::Edge, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let bip = g.bipartition().unwrap();
        let oracle = |_: &Graph, _: UtilityModel, _: &GroupPartition, _: usize| Ok(bip.clone());
        let out = separate_solve(&g, UtilityModel::Edge, &p, &oracle).unwrap();
        assert_eq!(out.oracle.alpha, int(1));
        assert_eq!(out.guarantee, rat(1, 3));
        assert_eq!(out.score.minimum, int(1));
    }

    #[test]
    fn five_cycle_single_edges() {
        let g = cycle(5);
        let p = GroupPartition::singletons(&g, PartitionKind::Edge).unwrap();
        let out = separate_solve(&g, UtilityModel::Edge, &p, &LocalSearchOracle::default()).unwrap();
        assert_eq!(out.oracle.alpha, int(1));
        assert_eq!(out.guarantee, rat(1, 5));
        // each oracle cut is a single endpoint {u}: edge i is cut by its own
        // cut and by the cut of each neighbouring edge sharing that endpoint
        assert!(out.score.minimum >= out.guarantee);
        for (i, cut) in out.oracle.per_group_cuts.iter().enumerate() {
            assert!(cut.crosses(g.edge(i)));
        }
    }

    #[test]
    fn oracle_examples() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let p = GroupPartition::singletons(&k2, PartitionKind::Edge).unwrap();
        let cut = default_group_oracle(&k2, UtilityModel::Edge, &p, 0).unwrap();
        assert!(cut.crosses((0, 1)));

        let c7 = cycle(7);
        let whole = GroupPartition::whole(&c7, PartitionKind::Edge).unwrap();
        let cut = default_group_oracle(&c7, UtilityModel::Edge, &whole, 0).unwrap();
        assert!(is_locally_optimal(&c7, &cut));
        assert!(cut_value(&c7, &cut) >= 4);

        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let whole = GroupPartition::whole(&k4, PartitionKind::Edge).unwrap();
        assert_eq!(cut_value(&k4, &default_group_oracle(&k4, UtilityModel::Edge, &whole, 0).unwrap()), 4);
    }

    #[test]
    fn node_groups_map_back_to_the_full_graph() {
        let g = cycle(6);
        let p = GroupPartition::for_graph(&g, PartitionKind::Node, vec![vec![3, 4, 5], vec![0, 1, 2]]).unwrap();
        let cut = default_group_oracle(&g, UtilityModel::NodeMaxDeg, &p, 0).unwrap();
        assert!(cut.members().iter().all(|v| [3, 4, 5].contains(v)));
        let seeded = LocalSearchOracle { seed: Some(4) };
        let out = separate_solve(&g, UtilityModel::NodeMaxDeg, &p, &seeded).unwrap();
        assert!(out.score.minimum >= out.guarantee);
    }
}
