#![allow(dead_code)]

use eil_core::SimpleGraph;
use proptest::prelude::*;
use rand::Rng;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> SimpleGraph {
    let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, &on)| on).map(|(e, _)| e).collect();
    SimpleGraph::from_index_edges(labels, &edges)
}

/// Graphs on `lo..=hi` vertices, each pair an edge with probability about 1/2.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = SimpleGraph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let bits: Vec<bool> = (0..n * n.saturating_sub(1) / 2).map(|_| rng.gen_bool(p)).collect();
    graph_from_bits(n, &bits)
}

/// Independent sets of `g` restricted to `w`, as bitmasks, found by testing
/// every subset.
pub fn independent_subsets(g: &SimpleGraph, w: u32) -> Vec<u32> {
    let edges = g.edges();
    let mut out = Vec::new();
    let mut sub = w;
    loop {
        if edges.iter().all(|&(a, b)| sub >> a & 1 == 0 || sub >> b & 1 == 0) {
            out.push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & w;
    }
    out
}

pub fn f_vector(g: &SimpleGraph) -> Vec<i64> {
    let n = g.vertex_count();
    let mut f = vec![0i64; n + 1];
    for s in independent_subsets(g, ((1u64 << n) - 1) as u32) {
        f[s.count_ones() as usize] += 1;
    }
    trim(f)
}

pub fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Σ f_k λ^k (1-λ)^(d-k)
pub fn numerator_over(f: &[i64], d: usize) -> Vec<i64> {
    let mut acc = vec![0i64; d + 1];
    for (k, &fk) in f.iter().enumerate() {
        let mut term = vec![0i64; d + 1];
        term[k] = fk;
        for _ in k..d {
            for i in (1..=d).rev() {
                term[i] -= term[i - 1];
            }
        }
        for (a, t) in acc.iter_mut().zip(term) {
            *a += t;
        }
    }
    trim(acc)
}

pub fn coeffs_i64(p: &eil_core::IntPolynomial) -> Vec<i64> {
    use num_traits::ToPrimitive;
    trim(p.coeffs().iter().map(|c| c.to_i64().expect("small coefficient")).collect())
}
