//! Deterministic generators for the graph families and small worked
//! instances used throughout the test suites.
//!
//! All generators emit 0-indexed vertices. Where an instance is usually
//! drawn with vertices 1..n, vertex i here is vertex i+1 there.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{ground_size, Graph, GroupPartition, PartitionKind};
use crate::heuristics::UnitVectorEmbedding;
use crate::objectives::Objective;
use crate::rational::{int, rat, Rational};
use crate::rng::trial_rng;
use crate::utility::UtilityModel;

/// A closed-form value an instance is known to have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub objective: Objective,
    pub value: Rational,
    /// Where the value comes from.
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedInstance {
    pub label: String,
    pub graph: Graph,
    pub partition: GroupPartition,
    pub model: UtilityModel,
    pub expected: Vec<Expected>,
}

impl NamedInstance {
    pub fn expected(&self, objective: Objective) -> Option<&Rational> {
        self.expected.iter().find(|e| e.objective == objective).map(|e| &e.value)
    }

    fn expect(mut self, objective: Objective, value: Rational, note: &str) -> Self {
        self.expected.push(Expected { objective, value, note: note.to_string() });
        self
    }
}

/// C_n: 0–1–…–(n−1)–0.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// K_{a,b} with sides 0..a and a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!("K_{{{a},{b}}} needs both sides non-empty")));
    }
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// K_n.
pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn singleton_partition(g: &Graph, kind: PartitionKind) -> Result<GroupPartition> {
    GroupPartition::singletons(g, kind)
}

/// K_{2k} on 0..2k−1 with a path 2k−1 → 2k → … → n−1 hanging off it.
///
/// Groups: the clique edges, then the tail edges (omitted when n = 2k).
/// Max-Cut gives the clique k² of its C(2k,2) edges and cuts the whole tail,
/// while no lottery can give the clique group more than its own best
/// proportion k/(2k−1).
pub fn clique_with_tail(k: usize, n: usize) -> Result<NamedInstance> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameter(format!("clique-with-tail needs n ≥ 2k ≥ 2, got k={k}, n={n}")));
    }
    let clique = 2 * k;
    let mut edges: Vec<(usize, usize)> = (0..clique).flat_map(|u| (u + 1..clique).map(move |v| (u, v))).collect();
    let clique_edges = edges.len();
    edges.extend((clique - 1..n - 1).map(|v| (v, v + 1)));
    let graph = Graph::new(n, edges)?;
    let mut groups = vec![(0..clique_edges).collect::<Vec<_>>()];
    if n > clique {
        groups.push((clique_edges..graph.edge_count()).collect());
    }
    let partition = GroupPartition::for_graph(&graph, PartitionKind::Edge, groups)?;
    let (mp, df_mp) = clique_tail_values(k, n);
    Ok(NamedInstance {
        label: format!("clique-tail k={k} n={n}"),
        graph,
        partition,
        model: UtilityModel::Edge,
        expected: Vec::new(),
    }
    .expect(Objective::DfMp, df_mp, "clique group capped at k/(2k-1)")
    .expect(Objective::Mp, mp, "(k^2+n-2k)/(C(2k,2)+n-2k)"))
}

/// Closed-form (MP, DF-MP) of [`clique_with_tail`], usable far beyond the
/// enumeration limit.
pub fn clique_tail_values(k: usize, n: usize) -> (Rational, Rational) {
    let (k, n) = (k as i64, n as i64);
    let tail = n - 2 * k;
    (rat(k * k + tail, k * (2 * k - 1) + tail), rat(k, 2 * k - 1))
}

/// A 2k-cycle on 0..2k−1 joined by one bridge edge to K_{r,r} on
/// 2k..2k+2r−1 (left side 2k..2k+r−1), with node groups {cycle, biclique}
/// under max-degree node utilities.
///
/// The bridge runs from cycle vertex 2k−1 to the second left biclique vertex
/// (the first when r = 1); for k = 2, r = 3 that is the edge (3, 5).
pub fn cycle_plus_biclique(k: usize, r: usize) -> Result<NamedInstance> {
    if k < 2 || r == 0 {
        return Err(Error::InvalidParameter(format!("cycle-biclique needs k ≥ 2 and r ≥ 1, got k={k}, r={r}")));
    }
    let cyc = 2 * k;
    let left = cyc;
    let right = cyc + r;
    let n = cyc + 2 * r;
    let mut edges: Vec<(usize, usize)> = (0..cyc).map(|i| (i, (i + 1) % cyc)).collect();
    edges.push((cyc - 1, left + 1.min(r - 1)));
    edges.extend((left..right).flat_map(|u| (right..n).map(move |v| (u, v))));
    let graph = Graph::new(n, edges)?;
    let partition =
        GroupPartition::for_graph(&graph, PartitionKind::Node, vec![(0..cyc).collect(), (cyc..n).collect()])?;
    let mut instance = NamedInstance {
        label: format!("cycle-biclique k={k} r={r}"),
        graph,
        partition,
        model: UtilityModel::NodeMaxDeg,
        expected: Vec::new(),
    };
    if r >= 2 {
        // bipartite, so every edge is cut; Δ = r + 1 at the bridged vertex
        let (k, r) = (k as i64, r as i64);
        instance = instance.expect(
            Objective::Mp,
            rat(2 * (r * r + 2 * k + 1), (2 * r + 2 * k) * (r + 1)),
            "2(r^2+2k+1)/((2r+2k)(r+1))",
        );
    }
    Ok(instance)
}

/// K₄ minus one edge: the 4-cycle 0–1–3–2–0 plus the chord (0,3), with
/// groups {cycle edges, chord}.
pub fn diamond() -> NamedInstance {
    let graph = Graph::new(4, [(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]).expect("valid graph");
    let partition = GroupPartition::for_graph(&graph, PartitionKind::Edge, vec![vec![0, 1, 2, 3], vec![4]])
        .expect("valid partition");
    NamedInstance { label: "diamond".into(), graph, partition, model: UtilityModel::Edge, expected: Vec::new() }.expect(
        Objective::DfMp,
        rat(2, 3),
        "2/3 on {3} and 1/3 on {0,3}",
    )
}

/// The unit vectors that put 0 and 3 at +e₄ and 1 and 2 at −e₄: a Max-Cut
/// SDP optimum for the diamond under which the chord is never cut.
pub fn diamond_embedding() -> UnitVectorEmbedding {
    let up = vec![0.0, 0.0, 0.0, 1.0];
    let down = vec![0.0, 0.0, 0.0, -1.0];
    UnitVectorEmbedding::new(vec![up.clone(), down.clone(), down, up]).expect("unit vectors")
}

/// The paw: triangle 0–1–2 with the pendant edge (0,3), one group per edge.
pub fn paw() -> NamedInstance {
    let graph = Graph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).expect("valid graph");
    let partition = GroupPartition::singletons(&graph, PartitionKind::Edge).expect("edges exist");
    NamedInstance { label: "paw".into(), graph, partition, model: UtilityModel::Edge, expected: Vec::new() }
        .expect(Objective::DfMp, rat(2, 3), "maximin LP over all cuts")
        .expect(Objective::Mp, rat(3, 4), "max cut 3 of 4 edges")
}

/// C_{2n+1} with one group per edge.
pub fn odd_cycle_edges(n: usize) -> Result<NamedInstance> {
    let graph = cycle(2 * n + 1)?;
    let partition = GroupPartition::singletons(&graph, PartitionKind::Edge)?;
    let m = 2 * n as i64 + 1;
    Ok(NamedInstance {
        label: format!("odd-cycle C{m} edges"),
        graph,
        partition,
        model: UtilityModel::Edge,
        expected: Vec::new(),
    }
    .expect(Objective::SfMp, int(0), "every cut misses an edge of an odd cycle"))
}

/// C_{2n+1} with one group per vertex, max-degree node utilities.
pub fn odd_cycle_nodes(n: usize) -> Result<NamedInstance> {
    let graph = cycle(2 * n + 1)?;
    let partition = GroupPartition::singletons(&graph, PartitionKind::Node)?;
    let m = 2 * n as i64 + 1;
    Ok(NamedInstance {
        label: format!("odd-cycle C{m} nodes"),
        graph,
        partition,
        model: UtilityModel::NodeMaxDeg,
        expected: Vec::new(),
    }
    .expect(Objective::SfMp, rat(1, 2), "some vertex keeps a neighbour on its side"))
}

/// K_{n,n} with a seeded random partition of its edges or vertices into at
/// most `groups` non-empty groups; every objective is 1.
pub fn balanced_biclique(n: usize, kind: PartitionKind, groups: usize, seed: u64) -> Result<NamedInstance> {
    let graph = complete_bipartite(n, n)?;
    let partition = random_partition(&graph, kind, groups, seed)?;
    let model = match kind {
        PartitionKind::Edge => UtilityModel::Edge,
        PartitionKind::Node => UtilityModel::NodeMaxDeg,
    };
    let mut instance = NamedInstance {
        label: format!("K{n},{n} {kind} groups={} seed={seed}", partition.len()),
        graph,
        partition,
        model,
        expected: Vec::new(),
    };
    for objective in [Objective::SfMp, Objective::DfMp, Objective::Mp] {
        instance = instance.expect(objective, int(1), "the bipartition cuts every edge");
    }
    Ok(instance)
}

/// A uniformly random partition of the edges or vertices into exactly `groups`
/// non-empty groups (rejection sampling over seeded draws).
pub fn random_partition(g: &Graph, kind: PartitionKind, groups: usize, seed: u64) -> Result<GroupPartition> {
    let size = ground_size(g, kind);
    if groups == 0 || groups > size {
        return Err(Error::InvalidParameter(format!(
            "cannot split {size} {}s into {groups} non-empty groups",
            kind.name()
        )));
    }
    for attempt in 0..1000u64 {
        let mut rng = trial_rng(seed, attempt);
        let mut lists = vec![Vec::new(); groups];
        for x in 0..size {
            lists[rng.random_range(0..groups)].push(x);
        }
        if lists.iter().all(|l| !l.is_empty()) {
            return GroupPartition::new(kind, size, lists);
        }
    }
    Err(Error::InvalidParameter(format!("no partition into {groups} non-empty groups found after 1000 draws")))
}

/// An Erdős–Rényi graph G(n, p) with a uniformly random partition into
/// exactly `groups` non-empty groups. Edge partitions use edge utilities and
/// node partitions use max-degree node utilities.
///
/// Graphs are redrawn until the ground set has at least `groups` elements
/// (and, for node partitions, at least one edge).
pub fn random_instance(
    n: usize,
    edge_prob: f64,
    groups: usize,
    kind: PartitionKind,
    seed: u64,
) -> Result<NamedInstance> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidParameter(format!("edge probability {edge_prob} outside [0, 1]")));
    }
    if groups == 0 {
        return Err(Error::InvalidParameter("need at least one group".into()));
    }
    let model = match kind {
        PartitionKind::Edge => UtilityModel::Edge,
        PartitionKind::Node => UtilityModel::NodeMaxDeg,
    };
    for attempt in 0..1000u64 {
        let mut rng = trial_rng(seed, attempt);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(edge_prob)).collect();
        let graph = Graph::new(n, edges)?;
        if ground_size(&graph, kind) < groups || (kind == PartitionKind::Node && graph.max_degree() == 0) {
            continue;
        }
        let partition_seed = rng.random::<u64>();
        let partition = random_partition(&graph, kind, groups, partition_seed)?;
        return Ok(NamedInstance {
            label: format!("random n={n} p={edge_prob} groups={groups} {kind} seed={seed}"),
            graph,
            partition,
            model,
            expected: Vec::new(),
        });
    }
    Err(Error::InvalidParameter(format!(
        "G({n}, {edge_prob}) never produced enough {}s for {groups} groups",
        kind.name()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles() {
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count(), c5.max_degree()), (5, 5, 2));
        assert!(c5.is_regular());
        assert!(cycle(4).unwrap().is_bipartite());
        assert!(!cycle(7).unwrap().is_bipartite());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn bicliques() {
        assert_eq!(complete_bipartite(2, 2).unwrap().edge_count(), 4);
        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert!(k33.is_regular() && k33.max_degree() == 3);
        assert_eq!(complete_bipartite(1, 1).unwrap().edges(), &[(0, 1)]);
        assert!(complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn clique_tail_shape() {
        let inst = clique_with_tail(2, 10).unwrap();
        assert_eq!(inst.graph.vertex_count(), 10);
        assert_eq!(inst.graph.edge_count(), 12);
        assert_eq!(inst.graph.max_degree(), 4);
        assert_eq!(inst.partition.len(), 2);
        assert_eq!(inst.expected(Objective::Mp), Some(&rat(5, 6)));
        assert_eq!(inst.expected(Objective::DfMp), Some(&rat(2, 3)));
        let k6 = clique_with_tail(3, 6).unwrap();
        assert_eq!(k6.partition.len(), 1);
        assert_eq!(k6.expected(Objective::Mp), Some(&rat(3, 5)));
        let single = clique_with_tail(1, 2).unwrap();
        assert_eq!(single.graph.edge_count(), 1);
        assert_eq!(single.expected(Objective::Mp), Some(&int(1)));
        assert!(clique_with_tail(2, 3).is_err());
        assert!(clique_with_tail(0, 3).is_err());
        for (k, n) in [(1, 5), (2, 7), (3, 9)] {
            let inst = clique_with_tail(k, n).unwrap();
            assert_eq!(inst.graph.edge_count(), k * (2 * k - 1) + n - 2 * k);
        }
    }

    #[test]
    fn cycle_biclique_shape() {
        let inst = cycle_plus_biclique(2, 3).unwrap();
        assert_eq!(inst.graph.vertex_count(), 10);
        assert_eq!(inst.graph.edge_count(), 14);
        assert_eq!(inst.graph.max_degree(), 4);
        assert_eq!(inst.partition.group(0), &[0, 1, 2, 3]);
        assert!(inst.graph.edges().contains(&(3, 5)));
        assert_eq!(inst.expected(Objective::Mp), Some(&rat(7, 10)));
        assert!(cycle_plus_biclique(1, 3).is_err());
        assert!(cycle_plus_biclique(2, 0).is_err());
        assert!(cycle_plus_biclique(2, 1).unwrap().expected(Objective::Mp).is_none());
    }

    #[test]
    fn worked_instances() {
        let d = diamond();
        assert_eq!(d.graph.edge_count(), 5);
        assert!(!d.graph.is_bipartite());
        let p = paw();
        assert_eq!(p.partition.len(), 4);
        assert_eq!(diamond_embedding().dimension(), 4);
    }

    #[test]
    fn random_instances_are_deterministic() {
        let a = random_instance(8, 0.5, 3, PartitionKind::Edge, 42).unwrap();
        let b = random_instance(8, 0.5, 3, PartitionKind::Edge, 42).unwrap();
        assert_eq!(a, b);
        let c = random_instance(8, 0.5, 3, PartitionKind::Edge, 43).unwrap();
        assert_ne!(a.graph, c.graph);
        let nodes = random_instance(6, 0.4, 6, PartitionKind::Node, 1).unwrap();
        assert_eq!(nodes.partition.len(), 6);
        assert!(random_instance(3, 0.0, 1, PartitionKind::Edge, 0).is_err());
        assert!(random_instance(3, 1.5, 1, PartitionKind::Edge, 0).is_err());
    }
}
