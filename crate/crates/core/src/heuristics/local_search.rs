//! Single-flip local search for Max-Cut.

use crate::graph::{crossing_degree, Cut, Graph};

/// Sweeps `order` repeatedly, flipping any vertex with fewer than half of
/// its edges crossing, until a full sweep makes no flip.
///
/// Each flip raises the cut value by at least one, so the search stops after
/// at most |E| flips. On return every vertex v has crossing degree at least
/// deg(v)/2. `order` must list every vertex exactly once.
pub fn local_search_cut(g: &Graph, initial: Cut, order: &[usize]) -> Cut {
    assert_eq!(initial.vertex_count(), g.vertex_count(), "initial cut does not match the graph");
    let mut seen = vec![false; g.vertex_count()];
    for &v in order {
        assert!(v < g.vertex_count() && !seen[v], "order must be a permutation of the vertices");
        seen[v] = true;
    }
    assert!(seen.iter().all(|&s| s), "order must be a permutation of the vertices");

    let mut cut = initial;
    loop {
        let mut flipped = false;
        for &v in order {
            if 2 * crossing_degree(g, &cut, v) < g.degree(v) {
                cut.flip(v);
                flipped = true;
            }
        }
        if !flipped {
            return cut;
        }
    }
}

/// Local search from the empty cut in natural vertex order.
pub fn local_search_from_empty(g: &Graph) -> Cut {
    let order: Vec<usize> = (0..g.vertex_count()).collect();
    local_search_cut(g, Cut::empty(g.vertex_count()), &order)
}

/// Whether every vertex has at least half of its edges crossing.
pub fn is_locally_optimal(g: &Graph, cut: &Cut) -> bool {
    (0..g.vertex_count()).all(|v| 2 * crossing_degree(g, cut, v) >= g.degree(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cut_value;

    #[test]
    fn bipartition_is_kept() {
        let k33 = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let b = k33.bipartition().unwrap();
        let order: Vec<usize> = (0..6).collect();
        assert_eq!(local_search_cut(&k33, b.clone(), &order), b);
    }

    #[test]
    fn five_cycle_trace() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let cut = local_search_from_empty(&c5);
        // vertex 0 flips, 1 is satisfied, 2 flips, 3 and 4 are satisfied
        assert_eq!(cut.members(), vec![0, 2]);
        assert_eq!(cut_value(&c5, &cut), 4);
        assert!(is_locally_optimal(&c5, &cut));
    }

    #[test]
    fn clique_reaches_balanced_split() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cut = local_search_from_empty(&k4);
        assert_eq!(cut_value(&k4, &cut), 4);
    }

    #[test]
    #[should_panic(expected = "permutation")]
    fn rejects_partial_order() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        local_search_cut(&g, Cut::empty(3), &[0, 1]);
    }
}
