//! Exhaustive enumeration of canonical cuts.
//!
//! Every utility in scope is invariant under complementing the cut, so only
//! the 2^{n−1} cuts that leave vertex 0 outside S are enumerated. Cut masks
//! are visited in increasing numeric order and ties are always resolved in
//! favour of the earliest mask.

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, GroupPartition, PartitionKind};
use crate::rational::{from_usize, Rational};
use crate::utility::{ground_form, PartitionForms, UtilityModel};

/// Default cap on the vertex count for exact solvers (2²³ canonical cuts).
pub const DEFAULT_LIMIT: usize = 24;

/// Hard ceiling imposed by the 64-bit cut masks of the enumeration loop.
pub const MAX_LIMIT: usize = 63;

/// Whether objectives are per-capita (proportion) or totals (value).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Value,
    Proportion,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Value => "value",
            Mode::Proportion => "proportion",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "value" => Ok(Mode::Value),
            "proportion" => Ok(Mode::Proportion),
            _ => Err(format!("unknown mode `{s}` (expected value or proportion)")),
        }
    }
}

/// Groups × canonical cuts table of group utilities (value mode) or
/// proportions (proportion mode).
#[derive(Debug, Clone)]
pub struct PayoffMatrix {
    pub mode: Mode,
    /// `rows[i][k]` is the entry for group i under `col_cuts[k]`.
    pub rows: Vec<Vec<Rational>>,
    pub col_cuts: Vec<Cut>,
    pub group_sizes: Vec<usize>,
}

impl PayoffMatrix {
    pub fn group_count(&self) -> usize {
        self.rows.len()
    }

    pub fn cut_count(&self) -> usize {
        self.col_cuts.len()
    }

    pub fn column(&self, k: usize) -> Vec<Rational> {
        self.rows.iter().map(|row| row[k].clone()).collect()
    }
}

/// Best single cut for the worst-off group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticSolution {
    pub objective: Rational,
    pub witness_cut: Cut,
}

/// Exact solvers with a vertex-count limit.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    limit: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { limit: DEFAULT_LIMIT }
    }
}

impl Enumerator {
    /// The limit is clamped to [`MAX_LIMIT`].
    pub fn with_limit(limit: usize) -> Self {
        Enumerator { limit: limit.min(MAX_LIMIT) }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() > self.limit {
            return Err(Error::TooLarge { vertices: g.vertex_count(), limit: self.limit });
        }
        Ok(())
    }

    /// Canonical cut masks: every subset of {1, …, n−1}, shifted so bit v is
    /// vertex v.
    fn masks(&self, g: &Graph) -> Result<impl Iterator<Item = u64>> {
        self.check(g)?;
        let free = g.vertex_count().saturating_sub(1);
        Ok((0..(1u64 << free)).map(|m| m << 1))
    }

    /// The 2^{n−1} canonical cuts in increasing mask order (one empty cut for
    /// n = 0).
    pub fn canonical_cuts(&self, g: &Graph) -> Result<Vec<Cut>> {
        let n = g.vertex_count();
        Ok(self.masks(g)?.map(|mask| Cut::from_mask(n, mask)).collect())
    }

    /// MV with a maximizing cut.
    pub fn max_value(&self, g: &Graph, model: UtilityModel) -> Result<(Rational, Cut)> {
        let form = ground_form(g, model)?;
        let mut best: Option<(Rational, u64)> = None;
        for mask in self.masks(g)? {
            let value = form.value_on_mask(mask);
            if best.as_ref().is_none_or(|(b, _)| value > *b) {
                best = Some((value, mask));
            }
        }
        let (value, mask) = best.expect("at least one canonical cut");
        Ok((value, Cut::from_mask(g.vertex_count(), mask)))
    }

    /// MP = MV/|ground set| with the same witness; 0 on an empty ground set.
    pub fn max_proportion(&self, g: &Graph, model: UtilityModel) -> Result<(Rational, Cut)> {
        let (value, cut) = self.max_value(g, model)?;
        let size = match model.partition_kind() {
            PartitionKind::Edge => g.edge_count(),
            PartitionKind::Node => g.vertex_count(),
        };
        if size == 0 {
            return Ok((value, cut));
        }
        Ok((value / from_usize(size), cut))
    }

    /// SF-MV or SF-MP.
    pub fn static_fair(
        &self,
        g: &Graph,
        model: UtilityModel,
        partition: &GroupPartition,
        mode: Mode,
    ) -> Result<StaticSolution> {
        let forms = PartitionForms::new(g, model, partition)?;
        let mut best: Option<(Rational, u64)> = None;
        for mask in self.masks(g)? {
            let worst = forms
                .groups()
                .iter()
                .map(|form| {
                    let v = form.value_on_mask(mask);
                    match mode {
                        Mode::Value => v,
                        Mode::Proportion => v / from_usize(form.size()),
                    }
                })
                .min()
                .expect("partitions have at least one group");
            if best.as_ref().is_none_or(|(b, _)| worst > *b) {
                best = Some((worst, mask));
            }
        }
        let (objective, mask) = best.expect("at least one canonical cut");
        Ok(StaticSolution { objective, witness_cut: Cut::from_mask(g.vertex_count(), mask) })
    }

    /// The γ × 2^{n−1} payoff matrix; rows follow the partition's group order
    /// and columns the canonical cut order.
    pub fn payoff_matrix(
        &self,
        g: &Graph,
        model: UtilityModel,
        partition: &GroupPartition,
        mode: Mode,
    ) -> Result<PayoffMatrix> {
        let forms = PartitionForms::new(g, model, partition)?;
        let masks: Vec<u64> = self.masks(g)?.collect();
        let rows = forms
            .groups()
            .iter()
            .map(|form| {
                let size = from_usize(form.size());
                masks
                    .iter()
                    .map(|&mask| {
                        let v = form.value_on_mask(mask);
                        match mode {
                            Mode::Value => v,
                            Mode::Proportion => v / &size,
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(PayoffMatrix {
            mode,
            rows,
            col_cuts: masks.iter().map(|&mask| Cut::from_mask(g.vertex_count(), mask)).collect(),
            group_sizes: forms.groups().iter().map(|f| f.size()).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cut_value;
    use crate::rational::{int, rat};
    use crate::utility::group_proportion;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn knn(n: usize) -> Graph {
        Graph::new(2 * n, (0..n).flat_map(|a| (n..2 * n).map(move |b| (a, b)))).unwrap()
    }

    /// 0-indexed paw: triangle 0-1-2 with pendant edge (0,3).
    fn paw() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    fn diamond() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn canonical_cut_lists() {
        let e = Enumerator::default();
        let one = Graph::new(1, []).unwrap();
        assert_eq!(e.canonical_cuts(&one).unwrap(), vec![Cut::empty(1)]);
        let zero = Graph::new(0, []).unwrap();
        assert_eq!(e.canonical_cuts(&zero).unwrap().len(), 1);
        let three = Graph::new(3, []).unwrap();
        let cuts: Vec<Vec<usize>> = e.canonical_cuts(&three).unwrap().iter().map(Cut::members).collect();
        assert_eq!(cuts, vec![vec![], vec![1], vec![2], vec![1, 2]]);
        let cuts = e.canonical_cuts(&diamond()).unwrap();
        assert_eq!(cuts.len(), 8);
        assert!(cuts.iter().all(|c| !c.contains(0)));
    }

    #[test]
    fn refuses_beyond_limit() {
        let e = Enumerator::with_limit(4);
        assert!(matches!(e.max_value(&cycle(5), UtilityModel::Edge), Err(Error::TooLarge { vertices: 5, limit: 4 })));
    }

    #[test]
    fn max_value_examples() {
        let e = Enumerator::default();
        assert_eq!(e.max_value(&knn(3), UtilityModel::Edge).unwrap().0, int(9));
        assert_eq!(e.max_value(&paw(), UtilityModel::Edge).unwrap().0, int(3));
        assert_eq!(e.max_proportion(&paw(), UtilityModel::Edge).unwrap().0, rat(3, 4));
        assert_eq!(e.max_value(&cycle(5), UtilityModel::NodeMaxDeg).unwrap().0, int(4));
        assert_eq!(e.max_proportion(&knn(2), UtilityModel::Edge).unwrap().0, int(1));
        let edgeless = Graph::new(3, []).unwrap();
        assert_eq!(e.max_proportion(&edgeless, UtilityModel::Edge).unwrap().0, int(0));
        assert!(e.max_value(&edgeless, UtilityModel::NodeMaxDeg).is_err());
    }

    #[test]
    fn max_value_matches_brute_force_cut_value() {
        let e = Enumerator::default();
        for g in [cycle(5), cycle(6), paw(), diamond(), knn(3)] {
            let n = g.vertex_count();
            let brute = (0..(1u64 << n)).map(|m| cut_value(&g, &Cut::from_mask(n, m))).max().unwrap();
            let (mv, witness) = e.max_value(&g, UtilityModel::Edge).unwrap();
            assert_eq!(mv, from_usize(brute));
            assert_eq!(cut_value(&g, &witness), brute);
        }
    }

    #[test]
    fn static_fair_examples() {
        let e = Enumerator::default();
        let c5 = cycle(5);
        let edges = GroupPartition::singletons(&c5, PartitionKind::Edge).unwrap();
        let nodes = GroupPartition::singletons(&c5, PartitionKind::Node).unwrap();
        assert_eq!(e.static_fair(&c5, UtilityModel::Edge, &edges, Mode::Proportion).unwrap().objective, int(0));
        let sf = e.static_fair(&c5, UtilityModel::NodeMaxDeg, &nodes, Mode::Proportion).unwrap();
        assert_eq!(sf.objective, rat(1, 2));
        let k = knn(3);
        let p =
            GroupPartition::for_graph(&k, PartitionKind::Edge, vec![vec![0, 4, 8], vec![1, 2, 3, 5, 6, 7]]).unwrap();
        assert_eq!(e.static_fair(&k, UtilityModel::Edge, &p, Mode::Proportion).unwrap().objective, int(1));
    }

    #[test]
    fn paw_payoff_column() {
        let g = paw();
        let p = GroupPartition::singletons(&g, PartitionKind::Edge).unwrap();
        let m = Enumerator::default().payoff_matrix(&g, UtilityModel::Edge, &p, Mode::Proportion).unwrap();
        assert_eq!(m.group_count(), 4);
        assert_eq!(m.cut_count(), 8);
        // the cut {0} in canonical form is {1,2,3}
        let k = m.col_cuts.iter().position(|c| c.members() == vec![1, 2, 3]).unwrap();
        assert_eq!(m.column(k), vec![int(1), int(0), int(1), int(1)]);
    }

    #[test]
    fn diamond_payoff_rows() {
        let g = diamond();
        let p = GroupPartition::for_graph(&g, PartitionKind::Edge, vec![vec![0, 1, 2, 3], vec![4]]).unwrap();
        let m = Enumerator::default().payoff_matrix(&g, UtilityModel::Edge, &p, Mode::Proportion).unwrap();
        // the seven non-empty cuts, written with the vertex-0-free representative
        let expect = [
            (vec![1, 2, 3], rat(1, 2), int(1)),
            (vec![1], rat(1, 2), int(0)),
            (vec![2], rat(1, 2), int(0)),
            (vec![3], rat(1, 2), int(1)),
            (vec![2, 3], rat(1, 2), int(1)),
            (vec![1, 3], rat(1, 2), int(1)),
            (vec![1, 2], int(1), int(0)),
        ];
        for (members, e1, e2) in expect {
            let k = m.col_cuts.iter().position(|c| c.members() == members).unwrap();
            assert_eq!(m.rows[0][k], e1, "{members:?}");
            assert_eq!(m.rows[1][k], e2, "{members:?}");
        }
    }

    #[test]
    fn single_group_row_is_ground_proportion() {
        let g = cycle(5);
        let p = GroupPartition::whole(&g, PartitionKind::Edge).unwrap();
        let m = Enumerator::default().payoff_matrix(&g, UtilityModel::Edge, &p, Mode::Proportion).unwrap();
        for (k, cut) in m.col_cuts.iter().enumerate() {
            assert_eq!(m.rows[0][k], rat(cut_value(&g, cut) as i64, 5));
        }
    }

    #[test]
    fn columns_reproduce_group_proportions() {
        let g = diamond();
        let p = GroupPartition::for_graph(&g, PartitionKind::Node, vec![vec![0, 3], vec![1], vec![2]]).unwrap();
        for model in [UtilityModel::NodeMaxDeg, UtilityModel::NodeOwnDeg] {
            let m = Enumerator::default().payoff_matrix(&g, model, &p, Mode::Proportion).unwrap();
            for (k, cut) in m.col_cuts.iter().enumerate() {
                for (i, group) in p.groups().iter().enumerate() {
                    assert_eq!(m.rows[i][k], group_proportion(&g, model, cut, group).unwrap());
                }
            }
        }
    }
}
