//! Simple undirected graphs, cuts, and group partitions.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..vertex_count`.
///
/// Edges keep their insertion order; an edge is identified by its index in
/// that order, so edge groups are sets of edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        let mut neighbors = vec![Vec::new(); vertex_count];
        let mut incident = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) has an endpoint outside 0..{vertex_count}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if neighbors[u].contains(&v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            let index = list.len();
            list.push((u, v));
            neighbors[u].push(v);
            neighbors[v].push(u);
            incident[u].push(index);
            incident[v].push(index);
        }
        Ok(Graph { vertex_count, edges: list, neighbors, incident })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// N(v).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Indices of the edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Δ(G); zero for edgeless (or empty) graphs.
    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let mut degrees = self.neighbors.iter().map(Vec::len);
        match degrees.next() {
            Some(first) => degrees.all(|d| d == first),
            None => true,
        }
    }

    /// Returns a two-coloring as a cut when the graph has no odd cycle.
    ///
    /// Every component is BFS-colored from its smallest vertex, which is
    /// placed outside the cut.
    pub fn bipartition(&self) -> Option<Cut> {
        let mut color: Vec<Option<bool>> = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let side = color[u].expect("queued vertices are colored");
                for &w in &self.neighbors[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!side);
                            queue.push_back(w);
                        }
                        Some(c) if c == side => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let members: Vec<usize> = (0..self.vertex_count).filter(|&v| color[v] == Some(true)).collect();
        Some(Cut::from_members(self.vertex_count, members))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The spanning subgraph (same vertex set) keeping only the listed edges,
    /// in the listed order.
    pub fn edge_subgraph(&self, edge_indices: &[usize]) -> Result<Graph> {
        let mut kept = Vec::with_capacity(edge_indices.len());
        for &e in edge_indices {
            if e >= self.edges.len() {
                return Err(Error::InvalidPartition(format!("edge index {e} out of range")));
            }
            kept.push(self.edges[e]);
        }
        Graph::new(self.vertex_count, kept)
    }

    /// The subgraph induced by `vertices`, relabelled to `0..vertices.len()`
    /// in the given order. The returned map sends new ids to old ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut relabel = vec![usize::MAX; self.vertex_count];
        for (new, &old) in vertices.iter().enumerate() {
            if old >= self.vertex_count {
                return Err(Error::InvalidPartition(format!("vertex {old} out of range")));
            }
            if relabel[old] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {old} listed twice")));
            }
            relabel[old] = new;
        }
        let kept = self
            .edges
            .iter()
            .filter(|&&(u, v)| relabel[u] != usize::MAX && relabel[v] != usize::MAX)
            .map(|&(u, v)| (relabel[u], relabel[v]));
        Ok((Graph::new(vertices.len(), kept)?, vertices.to_vec()))
    }
}

/// A cut (S, V∖S) stored as the vertex subset S.
///
/// Membership is a little-endian bitset. Cuts order by vertex count first and
/// then by the numeric value of the bitset, so canonical enumeration order is
/// preserved by `BTreeMap<Cut, _>`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    len: usize,
    words: Vec<u64>,
}

impl Cut {
    pub fn empty(vertex_count: usize) -> Self {
        Cut { len: vertex_count, words: vec![0; vertex_count.div_ceil(64)] }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(vertex_count: usize, members: I) -> Self {
        let mut cut = Cut::empty(vertex_count);
        for v in members {
            cut.insert(v);
        }
        cut
    }

    /// Builds a cut from the low `vertex_count` bits of `mask`.
    pub fn from_mask(vertex_count: usize, mask: u64) -> Self {
        let mut cut = Cut::empty(vertex_count);
        if vertex_count > 0 {
            let keep = if vertex_count >= 64 { u64::MAX } else { (1u64 << vertex_count) - 1 };
            cut.words[0] = mask & keep;
        }
        cut
    }

    pub fn from_sides(sides: &[bool]) -> Self {
        Cut::from_members(sides.len(), sides.iter().enumerate().filter(|(_, &s)| s).map(|(v, _)| v))
    }

    /// Number of vertices of the graph this cut refers to.
    pub fn vertex_count(&self) -> usize {
        self.len
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.len && (self.words[v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.len, "vertex {v} outside cut of {} vertices", self.len);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.len {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn flip(&mut self, v: usize) {
        assert!(v < self.len, "vertex {v} outside cut of {} vertices", self.len);
        self.words[v / 64] ^= 1 << (v % 64);
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.len).filter(|&v| self.contains(v)).collect()
    }

    pub fn size(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// V∖S.
    pub fn complement(&self) -> Cut {
        let mut out = Cut::empty(self.len);
        for v in 0..self.len {
            if !self.contains(v) {
                out.insert(v);
            }
        }
        out
    }

    /// The representative of {S, V∖S} that excludes vertex 0.
    pub fn canonical(&self) -> Cut {
        if self.contains(0) {
            self.complement()
        } else {
            self.clone()
        }
    }

    /// X_e: whether exactly one endpoint of `edge` lies in S.
    pub fn crosses(&self, edge: (usize, usize)) -> bool {
        self.contains(edge.0) != self.contains(edge.1)
    }
}

impl Ord for Cut {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Cut {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cut{}", self)
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// 1 iff `edge` crosses `cut`.
pub fn edge_crosses(cut: &Cut, edge: (usize, usize)) -> u8 {
    u8::from(cut.crosses(edge))
}

/// Number of edges of `g` crossing `cut`.
pub fn cut_value(g: &Graph, cut: &Cut) -> usize {
    g.edges().iter().filter(|&&e| cut.crosses(e)).count()
}

/// Number of edges at `v` that cross `cut`.
pub fn crossing_degree(g: &Graph, cut: &Cut, v: usize) -> usize {
    let side = cut.contains(v);
    g.neighbors(v).iter().filter(|&&u| cut.contains(u) != side).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartitionKind {
    Edge,
    Node,
}

impl PartitionKind {
    pub fn name(self) -> &'static str {
        match self {
            PartitionKind::Edge => "edge",
            PartitionKind::Node => "node",
        }
    }
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A partition Γ = {U₁, …, U_γ} of the edge set or vertex set into non-empty
/// groups. Edge groups hold edge indices, node groups hold vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPartition {
    kind: PartitionKind,
    groups: Vec<Vec<usize>>,
}

impl GroupPartition {
    /// Validates the groups against a ground set of `ground_size` elements.
    /// Each group is sorted; the group order is kept.
    pub fn new(kind: PartitionKind, ground_size: usize, groups: Vec<Vec<usize>>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::InvalidPartition("partition has no groups".into()));
        }
        let mut owner = vec![usize::MAX; ground_size];
        let mut sorted = Vec::with_capacity(groups.len());
        for (i, mut group) in groups.into_iter().enumerate() {
            if group.is_empty() {
                return Err(Error::InvalidPartition(format!("group {i} is empty")));
            }
            for &x in &group {
                if x >= ground_size {
                    return Err(Error::InvalidPartition(format!(
                        "group {i} names {} {x}, but the ground set has {ground_size} elements",
                        kind.name()
                    )));
                }
                if owner[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "{} {x} appears in group {} and group {i}",
                        kind.name(),
                        owner[x]
                    )));
                }
                owner[x] = i;
            }
            group.sort_unstable();
            sorted.push(group);
        }
        if let Some(missing) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidPartition(format!("{} {missing} is not covered by any group", kind.name())));
        }
        Ok(GroupPartition { kind, groups: sorted })
    }

    /// Validates against the matching ground set of `g`.
    pub fn for_graph(g: &Graph, kind: PartitionKind, groups: Vec<Vec<usize>>) -> Result<Self> {
        GroupPartition::new(kind, ground_size(g, kind), groups)
    }

    /// One group per edge (or per vertex).
    pub fn singletons(g: &Graph, kind: PartitionKind) -> Result<Self> {
        let size = ground_size(g, kind);
        if size == 0 {
            return Err(Error::InvalidPartition(format!("graph has no {}s to partition", kind.name())));
        }
        GroupPartition::new(kind, size, (0..size).map(|x| vec![x]).collect())
    }

    /// The single group holding the whole ground set.
    pub fn whole(g: &Graph, kind: PartitionKind) -> Result<Self> {
        let size = ground_size(g, kind);
        GroupPartition::new(kind, size, vec![(0..size).collect()])
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn group(&self, i: usize) -> &[usize] {
        &self.groups[i]
    }

    /// γ.
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }
}

/// |E| for edge partitions, |V| for node partitions.
pub fn ground_size(g: &Graph, kind: PartitionKind) -> usize {
    match kind {
        PartitionKind::Edge => g.edge_count(),
        PartitionKind::Node => g.vertex_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(cycle(5).max_degree(), 2);
        assert_eq!(Graph::new(3, []).unwrap().max_degree(), 0);
        // K4 on 0..4 with a tail 3-4-...-9
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend((3..9).map(|v| (v, v + 1)));
        let g = Graph::new(10, edges).unwrap();
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.degree(3), 4);
    }

    #[test]
    fn adjacency_matches_edges() {
        let g = cycle(6);
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            assert!(g.neighbors(u).contains(&v));
            assert!(g.neighbors(v).contains(&u));
            assert!(g.incident_edges(u).contains(&i));
        }
        let total: usize = (0..6).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn crossing_indicator() {
        let s = Cut::from_members(2, [0]);
        assert_eq!(edge_crosses(&s, (0, 1)), 1);
        assert_eq!(edge_crosses(&Cut::empty(2), (0, 1)), 0);
        assert_eq!(edge_crosses(&Cut::from_members(2, [0, 1]), (0, 1)), 0);
    }

    #[test]
    fn cut_values() {
        let k22 = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(cut_value(&k22, &Cut::from_members(4, [0, 1])), 4);
        assert_eq!(cut_value(&cycle(5), &Cut::from_members(5, [0, 2])), 4);
        assert_eq!(cut_value(&cycle(5), &Cut::empty(5)), 0);
    }

    #[test]
    fn bipartiteness() {
        assert!(!cycle(5).is_bipartite());
        let witness = k33().bipartition().unwrap();
        assert_eq!(witness.size(), 3);
        assert_eq!(cut_value(&k33(), &witness), 9);
        // 4-cycle 0-1-3-2-0 plus the chord (0,3)
        let diamond = Graph::new(4, [(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]).unwrap();
        assert!(!diamond.is_bipartite());
    }

    #[test]
    fn partition_validation() {
        let g = cycle(4);
        assert!(GroupPartition::for_graph(&g, PartitionKind::Edge, vec![vec![0, 1], vec![2, 3]]).is_ok());
        assert!(GroupPartition::for_graph(&g, PartitionKind::Edge, vec![vec![0, 1], vec![]]).is_err());
        assert!(GroupPartition::for_graph(&g, PartitionKind::Edge, vec![vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(GroupPartition::for_graph(&g, PartitionKind::Edge, vec![vec![0, 1], vec![2]]).is_err());
        assert!(GroupPartition::for_graph(&g, PartitionKind::Node, vec![vec![0, 1, 2, 4]]).is_err());
        assert!(GroupPartition::for_graph(&g, PartitionKind::Node, vec![]).is_err());
        assert_eq!(GroupPartition::singletons(&cycle(5), PartitionKind::Edge).unwrap().len(), 5);
        assert_eq!(GroupPartition::singletons(&cycle(5), PartitionKind::Node).unwrap().len(), 5);
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(GroupPartition::singletons(&k2, PartitionKind::Edge).unwrap().len(), 1);
        assert!(GroupPartition::singletons(&Graph::new(2, []).unwrap(), PartitionKind::Edge).is_err());
    }

    #[test]
    fn cut_ordering_follows_masks() {
        let cuts: Vec<Cut> = (0..8).map(|m| Cut::from_mask(3, m)).collect();
        let mut sorted = cuts.clone();
        sorted.sort();
        assert_eq!(cuts, sorted);
        assert_eq!(Cut::from_mask(3, 5).complement(), Cut::from_mask(3, 2));
        assert_eq!(Cut::from_mask(3, 5).canonical(), Cut::from_mask(3, 2));
        assert_eq!(format!("{}", Cut::from_mask(4, 0b1010)), "{1,3}");
    }

    #[test]
    fn induced_and_edge_subgraphs() {
        let g = cycle(5);
        let (h, map) = g.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(map, vec![1, 2, 3]);
        let e = g.edge_subgraph(&[0, 2]).unwrap();
        assert_eq!(e.vertex_count(), 5);
        assert_eq!(e.edges(), &[(0, 1), (2, 3)]);
    }
}
