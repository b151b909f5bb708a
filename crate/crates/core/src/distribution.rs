//! Finite lotteries over cuts and their exact per-group expectations.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, GroupPartition};
use crate::rational::{from_usize, Rational};
use crate::utility::{PartitionForms, UtilityModel};

/// A probability distribution with finite support over cuts of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutDistribution {
    entries: BTreeMap<Cut, Rational>,
}

impl CutDistribution {
    /// Merges repeated cuts and drops zero-probability entries. Probabilities
    /// must be non-negative and sum to exactly 1.
    pub fn new<I: IntoIterator<Item = (Cut, Rational)>>(entries: I) -> Result<Self> {
        let mut map: BTreeMap<Cut, Rational> = BTreeMap::new();
        let mut vertex_count = None;
        for (cut, p) in entries {
            if p.is_negative() {
                return Err(Error::InvalidParameter(format!("negative probability {p} on cut {cut}")));
            }
            match vertex_count {
                None => vertex_count = Some(cut.vertex_count()),
                Some(n) if n != cut.vertex_count() => {
                    return Err(Error::InvalidParameter("distribution mixes cuts of different graphs".into()))
                }
                Some(_) => {}
            }
            *map.entry(cut).or_insert_with(Rational::zero) += p;
        }
        map.retain(|_, p| !p.is_zero());
        let total: Rational = map.values().sum();
        if !total.is_one() {
            return Err(Error::InvalidParameter(format!("probabilities sum to {total}, not 1")));
        }
        Ok(CutDistribution { entries: map })
    }

    pub fn point(cut: Cut) -> Self {
        CutDistribution { entries: BTreeMap::from([(cut, Rational::one())]) }
    }

    /// Equal weight on every listed cut; repeats accumulate weight.
    pub fn uniform<I: IntoIterator<Item = Cut>>(cuts: I) -> Result<Self> {
        let cuts: Vec<Cut> = cuts.into_iter().collect();
        if cuts.is_empty() {
            return Err(Error::InvalidParameter("uniform distribution over no cuts".into()));
        }
        let p = Rational::new(1.into(), cuts.len().into());
        CutDistribution::new(cuts.into_iter().map(|c| (c, p.clone())))
    }

    /// Support in cut order.
    pub fn entries(&self) -> impl Iterator<Item = (&Cut, &Rational)> {
        self.entries.iter()
    }

    pub fn probability(&self, cut: &Cut) -> Rational {
        self.entries.get(cut).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    /// The same lottery with every cut replaced by its vertex-0-free
    /// representative.
    pub fn canonicalized(&self) -> CutDistribution {
        CutDistribution::new(self.entries.iter().map(|(c, p)| (c.canonical(), p.clone())))
            .expect("canonicalizing preserves total mass")
    }
}

/// Expected group proportions E_{S∼D}[f_S(Uᵢ)/|Uᵢ|] and their minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionScore {
    pub per_group: Vec<Rational>,
    pub minimum: Rational,
}

pub fn evaluate_distribution(
    g: &Graph,
    model: UtilityModel,
    partition: &GroupPartition,
    dist: &CutDistribution,
) -> Result<DistributionScore> {
    let forms = PartitionForms::new(g, model, partition)?;
    for (cut, _) in dist.entries() {
        if cut.vertex_count() != g.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "cut over {} vertices evaluated on a graph with {}",
                cut.vertex_count(),
                g.vertex_count()
            )));
        }
    }
    let per_group: Vec<Rational> = forms
        .groups()
        .iter()
        .map(|form| {
            let expected: Rational = dist.entries().map(|(cut, p)| p * form.value(cut)).sum();
            expected / from_usize(form.size())
        })
        .collect();
    let minimum = per_group.iter().min().cloned().expect("at least one group");
    Ok(DistributionScore { per_group, minimum })
}
