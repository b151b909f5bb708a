//! Group utilities under the edge model and the two node models.
//!
//! Every model in scope is linear in the crossing indicators: for a group U
//! there are weights w_e(U) with f_S(U) = Σ_e w_e(U)·X_e(S). Edge utilities
//! put weight 1 on the group's own edges; max-degree node utilities put
//! |e ∩ U|/Δ(G) on each edge; own-degree node utilities put Σ_{v ∈ e ∩ U}
//! 1/deg(v). Everything here is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, GroupPartition, PartitionKind};
use crate::rational::{from_usize, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UtilityModel {
    /// Each edge is an individual; it gains 1 when it crosses the cut.
    Edge,
    /// Each vertex gains its crossing degree divided by Δ(G).
    NodeMaxDeg,
    /// Each vertex gains its crossing degree divided by its own degree.
    NodeOwnDeg,
}

impl UtilityModel {
    pub const ALL: [UtilityModel; 3] = [UtilityModel::Edge, UtilityModel::NodeMaxDeg, UtilityModel::NodeOwnDeg];

    pub fn name(self) -> &'static str {
        match self {
            UtilityModel::Edge => "edge",
            UtilityModel::NodeMaxDeg => "node-maxdeg",
            UtilityModel::NodeOwnDeg => "node-owndeg",
        }
    }

    /// The partition kind this model's individuals live in.
    pub fn partition_kind(self) -> PartitionKind {
        match self {
            UtilityModel::Edge => PartitionKind::Edge,
            UtilityModel::NodeMaxDeg | UtilityModel::NodeOwnDeg => PartitionKind::Node,
        }
    }

    pub fn check_partition(self, partition: &GroupPartition) -> Result<()> {
        if partition.kind() != self.partition_kind() {
            return Err(Error::ModelMismatch { model: self, expected: self.partition_kind(), got: partition.kind() });
        }
        Ok(())
    }

    /// Node models divide by degrees and are undefined when Δ(G) = 0.
    pub fn check_graph(self, g: &Graph) -> Result<()> {
        if self != UtilityModel::Edge && g.max_degree() == 0 {
            return Err(Error::DegreeZero { model: self });
        }
        Ok(())
    }
}

impl fmt::Display for UtilityModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UtilityModel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        UtilityModel::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown utility model `{s}` (expected edge, node-maxdeg or node-owndeg)"))
    }
}

/// A group's utility as a linear form in the crossing indicators.
#[derive(Debug, Clone)]
pub struct GroupForm {
    size: usize,
    terms: Vec<(usize, usize, Rational)>,
    scaled: Option<Scaled>,
}

/// The same form over a common integer denominator, for the enumeration
/// hot loop.
#[derive(Debug, Clone)]
struct Scaled {
    denom: i64,
    terms: Vec<(u32, u32, i64)>,
}

impl GroupForm {
    fn new(g: &Graph, model: UtilityModel, group: &[usize]) -> Result<Self> {
        let mut weights: Vec<Rational> = vec![Rational::zero(); g.edge_count()];
        let mut touched = vec![false; g.edge_count()];
        match model {
            UtilityModel::Edge => {
                for &e in group {
                    if e >= g.edge_count() {
                        return Err(Error::InvalidPartition(format!("edge index {e} out of range")));
                    }
                    weights[e] += from_usize(1);
                    touched[e] = true;
                }
            }
            UtilityModel::NodeMaxDeg | UtilityModel::NodeOwnDeg => {
                let max_degree = g.max_degree();
                for &v in group {
                    if v >= g.vertex_count() {
                        return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                    }
                    let denom = if model == UtilityModel::NodeMaxDeg { max_degree } else { g.degree(v) };
                    for &e in g.incident_edges(v) {
                        weights[e] += Rational::new(1.into(), BigInt::from(denom));
                        touched[e] = true;
                    }
                }
            }
        }
        let terms: Vec<(usize, usize, Rational)> = weights
            .into_iter()
            .enumerate()
            .filter(|(e, _)| touched[*e])
            .map(|(e, w)| {
                let (u, v) = g.edge(e);
                (u, v, w)
            })
            .collect();
        let scaled = Scaled::from_terms(&terms);
        Ok(GroupForm { size: group.len(), terms, scaled })
    }

    /// |U|.
    pub fn size(&self) -> usize {
        self.size
    }

    /// (u, v, w_e) for every edge with non-zero weight.
    pub fn terms(&self) -> &[(usize, usize, Rational)] {
        &self.terms
    }

    pub fn value(&self, cut: &Cut) -> Rational {
        self.terms.iter().filter(|(u, v, _)| cut.contains(*u) != cut.contains(*v)).map(|(_, _, w)| w).sum()
    }

    /// Value on the cut whose members are the set bits of `mask`.
    pub fn value_on_mask(&self, mask: u64) -> Rational {
        match &self.scaled {
            Some(scaled) => {
                let total: i64 = scaled
                    .terms
                    .iter()
                    .filter(|(u, v, _)| ((mask >> u) ^ (mask >> v)) & 1 == 1)
                    .map(|(_, _, a)| *a)
                    .sum();
                Rational::new(total.into(), scaled.denom.into())
            }
            None => self.terms.iter().filter(|(u, v, _)| ((mask >> u) ^ (mask >> v)) & 1 == 1).map(|(_, _, w)| w).sum(),
        }
    }
}

impl Scaled {
    fn from_terms(terms: &[(usize, usize, Rational)]) -> Option<Scaled> {
        let mut denom = BigInt::from(1);
        for (_, _, w) in terms {
            denom = denom.lcm(w.denom());
        }
        let denom_i64 = denom.to_i64()?;
        let mut budget: i64 = 0;
        let mut scaled = Vec::with_capacity(terms.len());
        for (u, v, w) in terms {
            let a = (w.numer() * (&denom / w.denom())).to_i64()?;
            budget = budget.checked_add(a.checked_abs()?)?;
            if *u >= 64 || *v >= 64 {
                return None;
            }
            scaled.push((*u as u32, *v as u32, a));
        }
        Some(Scaled { denom: denom_i64, terms: scaled })
    }
}

/// All group forms of a partition, checked against the model.
#[derive(Debug, Clone)]
pub struct PartitionForms {
    groups: Vec<GroupForm>,
}

impl PartitionForms {
    pub fn new(g: &Graph, model: UtilityModel, partition: &GroupPartition) -> Result<Self> {
        model.check_partition(partition)?;
        model.check_graph(g)?;
        let groups =
            partition.groups().iter().map(|group| GroupForm::new(g, model, group)).collect::<Result<Vec<_>>>()?;
        Ok(PartitionForms { groups })
    }

    pub fn groups(&self) -> &[GroupForm] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

/// The ground-set form: all edges, or all vertices.
pub fn ground_form(g: &Graph, model: UtilityModel) -> Result<GroupForm> {
    model.check_graph(g)?;
    let everything: Vec<usize> = match model.partition_kind() {
        PartitionKind::Edge => (0..g.edge_count()).collect(),
        PartitionKind::Node => (0..g.vertex_count()).collect(),
    };
    GroupForm::new(g, model, &everything)
}

fn check_group(g: &Graph, model: UtilityModel, group: &[usize]) -> Result<()> {
    model.check_graph(g)?;
    let bound = match model.partition_kind() {
        PartitionKind::Edge => g.edge_count(),
        PartitionKind::Node => g.vertex_count(),
    };
    if let Some(&bad) = group.iter().find(|&&x| x >= bound) {
        return Err(Error::InvalidPartition(format!(
            "group names {} {bad}, but only {bound} exist",
            model.partition_kind()
        )));
    }
    Ok(())
}

/// f_S(U): total utility of `group` under `cut`.
pub fn group_utility(g: &Graph, model: UtilityModel, cut: &Cut, group: &[usize]) -> Result<Rational> {
    check_group(g, model, group)?;
    Ok(GroupForm::new(g, model, group)?.value(cut))
}

/// f_S(U)/|U|.
pub fn group_proportion(g: &Graph, model: UtilityModel, cut: &Cut, group: &[usize]) -> Result<Rational> {
    if group.is_empty() {
        return Err(Error::InvalidPartition("empty group".into()));
    }
    Ok(group_utility(g, model, cut, group)? / from_usize(group.len()))
}

/// min over groups of f_S(Uᵢ)/|Uᵢ|.
pub fn min_group_proportion(g: &Graph, model: UtilityModel, cut: &Cut, partition: &GroupPartition) -> Result<Rational> {
    let forms = PartitionForms::new(g, model, partition)?;
    Ok(forms
        .groups()
        .iter()
        .map(|form| form.value(cut) / from_usize(form.size()))
        .min()
        .expect("partitions have at least one group"))
}

/// f_S(U) for the whole ground set.
pub fn ground_utility(g: &Graph, model: UtilityModel, cut: &Cut) -> Result<Rational> {
    Ok(ground_form(g, model)?.value(cut))
}

/// Vertices of degree 0; their own-degree utility is taken to be 0.
pub fn isolated_vertices(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).collect()
}
