//! The naive random cut: every vertex joins S independently with
//! probability 1/2.
//!
//! Crossing indicators of distinct edges are pairwise independent Bernoulli(1/2)
//! variables (two edges sharing a vertex cross together with probability 1/4),
//! so a group utility Σ w_e X_e has mean Σ w_e / 2 and variance Σ w_e² / 4.

use num_traits::Zero;

use crate::error::Result;
use crate::graph::{Graph, GroupPartition};
use crate::rational::{from_usize, rat, Rational};
use crate::rng::{trial_rng, uniform_cut};
use crate::utility::{PartitionForms, UtilityModel};

/// Exact moments of f_S(Uᵢ)/|Uᵢ| under the naive random cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveGroupStats {
    pub mean: Rational,
    pub variance: Rational,
    /// Induced-subgraph lower bound on the mean (max-degree node model only).
    pub lower_bound: Option<Rational>,
    /// Full-degree upper bound on the mean (max-degree node model only).
    pub upper_bound: Option<Rational>,
}

pub fn naive_random_stats(g: &Graph, model: UtilityModel, partition: &GroupPartition) -> Result<Vec<NaiveGroupStats>> {
    let forms = PartitionForms::new(g, model, partition)?;
    let mut stats = Vec::with_capacity(forms.len());
    for (form, group) in forms.groups().iter().zip(partition.groups()) {
        let size = from_usize(form.size());
        let (sum, sum_sq) =
            form.terms().iter().fold((Rational::zero(), Rational::zero()), |(s, q), (_, _, w)| (s + w, q + w * w));
        let mean = sum / (from_usize(2) * &size);
        let variance = sum_sq / (from_usize(4) * &size * &size);
        let (lower_bound, upper_bound) = if model == UtilityModel::NodeMaxDeg {
            let scale = from_usize(2 * g.max_degree()) * &size;
            let mut inside = vec![false; g.vertex_count()];
            for &v in group {
                inside[v] = true;
            }
            let induced: usize = group.iter().map(|&v| g.neighbors(v).iter().filter(|&&u| inside[u]).count()).sum();
            let full: usize = group.iter().map(|&v| g.degree(v)).sum();
            (Some(from_usize(induced) / &scale), Some(from_usize(full) / &scale))
        } else {
            (None, None)
        };
        stats.push(NaiveGroupStats { mean, variance, lower_bound, upper_bound });
    }
    Ok(stats)
}

/// 1/(4|Eᵢ|), the variance of an edge group of the given size.
pub fn edge_group_variance(size: usize) -> Rational {
    rat(1, 4 * size as i64)
}

/// Sample statistics of f_S(Uᵢ)/|Uᵢ| over independent naive random cuts.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalStats {
    pub trials: u64,
    pub mean: f64,
    /// Population variance (divides by the trial count).
    pub variance: f64,
}

pub fn naive_random_sample(
    g: &Graph,
    model: UtilityModel,
    partition: &GroupPartition,
    seed: u64,
    trials: u64,
) -> Result<Vec<EmpiricalStats>> {
    if trials == 0 {
        return Err(crate::Error::InvalidParameter("trials must be at least 1".into()));
    }
    let forms = PartitionForms::new(g, model, partition)?;
    let proportions: Vec<Vec<(usize, usize, f64)>> = forms
        .groups()
        .iter()
        .map(|form| {
            let size = form.size() as f64;
            form.terms().iter().map(|(u, v, w)| (*u, *v, crate::rational::to_f64(w) / size)).collect()
        })
        .collect();
    let mut sums = vec![0.0f64; forms.len()];
    let mut squares = vec![0.0f64; forms.len()];
    for trial in 0..trials {
        let cut = uniform_cut(&mut trial_rng(seed, trial), g.vertex_count());
        for (i, terms) in proportions.iter().enumerate() {
            let x: f64 =
                terms.iter().filter(|(u, v, _)| cut.contains(*u) != cut.contains(*v)).map(|(_, _, w)| *w).sum();
            sums[i] += x;
            squares[i] += x * x;
        }
    }
    let t = trials as f64;
    Ok(sums
        .iter()
        .zip(&squares)
        .map(|(s, q)| {
            let mean = s / t;
            EmpiricalStats { trials, mean, variance: (q / t - mean * mean).max(0.0) }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Cut, PartitionKind};
    use crate::rational::int;
    use crate::utility::group_proportion;

    /// Mean and variance by enumerating all 2ⁿ equally likely cuts.
    fn brute_moments(g: &Graph, model: UtilityModel, group: &[usize]) -> (Rational, Rational) {
        let n = g.vertex_count();
        let total = from_usize(1 << n);
        let values: Vec<Rational> =
            (0..(1u64 << n)).map(|m| group_proportion(g, model, &Cut::from_mask(n, m), group).unwrap()).collect();
        let mean: Rational = values.iter().sum::<Rational>() / &total;
        let var: Rational = values.iter().map(|x| (x - &mean) * (x - &mean)).sum::<Rational>() / &total;
        (mean, var)
    }

    fn sample_graph() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap()
    }

    #[test]
    fn exact_moments_match_enumeration() {
        let g = sample_graph();
        let edge_p = GroupPartition::for_graph(&g, PartitionKind::Edge, vec![vec![0, 1, 2, 6], vec![3, 4, 5]]).unwrap();
        let node_p =
            GroupPartition::for_graph(&g, PartitionKind::Node, vec![vec![0, 1, 2], vec![3], vec![4, 5]]).unwrap();
        for (model, p) in
            [(UtilityModel::Edge, &edge_p), (UtilityModel::NodeMaxDeg, &node_p), (UtilityModel::NodeOwnDeg, &node_p)]
        {
            let stats = naive_random_stats(&g, model, p).unwrap();
            for (s, group) in stats.iter().zip(p.groups()) {
                let (mean, var) = brute_moments(&g, model, group);
                assert_eq!(s.mean, mean, "{model} {group:?}");
                assert_eq!(s.variance, var, "{model} {group:?}");
            }
        }
    }

    #[test]
    fn edge_groups_have_mean_half_and_variance_quarter_over_size() {
        let g = sample_graph();
        let p = GroupPartition::for_graph(&g, PartitionKind::Edge, vec![vec![0, 1, 2, 6], vec![3, 4, 5]]).unwrap();
        let stats = naive_random_stats(&g, UtilityModel::Edge, &p).unwrap();
        assert_eq!(stats[0].mean, rat(1, 2));
        assert_eq!(stats[0].variance, rat(1, 16));
        assert_eq!(stats[0].variance, edge_group_variance(4));
        assert_eq!(stats[1].variance, rat(1, 12));
    }

    #[test]
    fn regular_graph_node_mean_is_half() {
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let p = GroupPartition::for_graph(&c6, PartitionKind::Node, vec![vec![0, 3], vec![1, 2, 4, 5]]).unwrap();
        for s in naive_random_stats(&c6, UtilityModel::NodeMaxDeg, &p).unwrap() {
            assert_eq!(s.mean, rat(1, 2));
            assert!(s.lower_bound.unwrap() <= s.mean && s.mean <= s.upper_bound.unwrap());
        }
    }

    #[test]
    fn node_bounds_sandwich_the_mean() {
        let g = sample_graph();
        let p = GroupPartition::for_graph(&g, PartitionKind::Node, vec![vec![0, 5], vec![1, 2, 3, 4]]).unwrap();
        for s in naive_random_stats(&g, UtilityModel::NodeMaxDeg, &p).unwrap() {
            assert!(s.lower_bound.clone().unwrap() <= s.mean);
            assert_eq!(s.mean, s.upper_bound.unwrap());
        }
    }

    #[test]
    fn single_trial_is_that_cut() {
        let g = sample_graph();
        let p = GroupPartition::singletons(&g, PartitionKind::Edge).unwrap();
        let stats = naive_random_sample(&g, UtilityModel::Edge, &p, 11, 1).unwrap();
        let cut = uniform_cut(&mut trial_rng(11, 0), 6);
        for (s, group) in stats.iter().zip(p.groups()) {
            let exact = group_proportion(&g, UtilityModel::Edge, &cut, group).unwrap();
            assert_eq!(s.mean, crate::rational::to_f64(&exact));
            assert_eq!(s.variance, 0.0);
        }
        assert!(naive_random_sample(&g, UtilityModel::Edge, &p, 11, 0).is_err());
    }

    #[test]
    fn single_edge_mean_approaches_half() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let p = GroupPartition::singletons(&k2, PartitionKind::Edge).unwrap();
        let s = &naive_random_sample(&k2, UtilityModel::Edge, &p, 3, 20_000).unwrap()[0];
        // 4σ with σ = 1/(2√20000)
        assert!((s.mean - 0.5).abs() < 4.0 * 0.5 / (20_000f64).sqrt());
        assert_eq!(naive_random_stats(&k2, UtilityModel::Edge, &p).unwrap()[0].variance, int(1) / from_usize(4));
    }
}
