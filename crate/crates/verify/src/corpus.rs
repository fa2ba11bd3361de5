//! Graph collections the harnesses run over.

use std::collections::HashSet;

use eil_core::SimpleGraph;

/// All trees on `1..=max_n` vertices up to isomorphism, grown by attaching
/// leaves; ordered by vertex count, then discovery order.
pub fn trees_up_to(max_n: usize) -> Vec<SimpleGraph> {
    let label = |i: usize| format!("x{}", i + 1);
    let mut level = vec![SimpleGraph::from_index_edges(vec![label(0)], &[])];
    let mut out = Vec::new();
    for n in 1..=max_n {
        if n > 1 {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for t in &level {
                for v in 0..t.vertex_count() {
                    let mut labels = t.labels().to_vec();
                    labels.push(label(n - 1));
                    let mut edges = t.edges();
                    edges.push((v, n - 1));
                    let g = SimpleGraph::from_index_edges(labels, &edges);
                    if seen.insert(g.canonical_key()) {
                        next.push(g);
                    }
                }
            }
            level = next;
        }
        out.extend(level.iter().cloned());
    }
    out
}
