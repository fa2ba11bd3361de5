//! Exact combinatorial invariants: matching number, induced matching number,
//! independence number and independence-domination number.
//!
//! All four are exhaustive branch-and-bound searches over vertex bitmasks.
//! The value is computed first; the witness is then fixed greedily in index
//! order, re-solving the constrained problem at each step, which yields the
//! lexicographically least optimal vertex (or edge) set.

use std::collections::HashMap;

use serde::Serialize;

use crate::bits::{members, VertexSet};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Vertices(VertexSet),
    Edges(Vec<(usize, usize)>),
}

/// An optimal value together with a set that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessedValue {
    pub value: usize,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessLabels {
    Vertices(Vec<String>),
    Edges(Vec<[String; 2]>),
}

impl WitnessedValue {
    pub fn witness_labels(&self, g: &SimpleGraph) -> WitnessLabels {
        match &self.witness {
            Witness::Vertices(s) => WitnessLabels::Vertices(g.set_labels(*s)),
            Witness::Edges(es) => WitnessLabels::Edges(es.iter().map(|&(a, b)| [g.label(a).to_string(), g.label(b).to_string()]).collect()),
        }
    }

    pub fn vertices(&self) -> Option<VertexSet> {
        match &self.witness {
            Witness::Vertices(s) => Some(*s),
            Witness::Edges(_) => None,
        }
    }

    pub fn edges(&self) -> Option<&[(usize, usize)]> {
        match &self.witness {
            Witness::Edges(e) => Some(e),
            Witness::Vertices(_) => None,
        }
    }
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

// ---------------------------------------------------------------------------
// predicates used to re-check witnesses

pub fn is_matching(g: &SimpleGraph, edges: &[(usize, usize)]) -> bool {
    let mut used = 0u64;
    for &(a, b) in edges {
        if a == b || !g.has_edge(a, b) || used & (bit(a) | bit(b)) != 0 {
            return false;
        }
        used |= bit(a) | bit(b);
    }
    true
}

/// A matching whose covered vertices induce exactly the matching edges.
pub fn is_induced_matching(g: &SimpleGraph, edges: &[(usize, usize)]) -> bool {
    if !is_matching(g, edges) {
        return false;
    }
    let covered = edges.iter().fold(0u64, |m, &(a, b)| m | bit(a) | bit(b));
    edges.iter().all(|&(a, b)| g.adjacency()[a] & covered == bit(b) && g.adjacency()[b] & covered == bit(a))
}

pub fn is_independent_dominating(g: &SimpleGraph, set: VertexSet) -> bool {
    if !g.is_independent(set) {
        return false;
    }
    let covered = set.iter().fold(set.bits(), |m, v| m | g.adjacency()[v]);
    covered == g.all_vertices().bits()
}

impl WitnessedValue {
    /// Re-checks that the witness satisfies the defining predicate of `kind`
    /// and has exactly `value` elements.
    pub fn certifies(&self, g: &SimpleGraph, kind: InvariantKind) -> bool {
        match (kind, &self.witness) {
            (InvariantKind::Matching, Witness::Edges(e)) => e.len() == self.value && is_matching(g, e),
            (InvariantKind::InducedMatching, Witness::Edges(e)) => e.len() == self.value && is_induced_matching(g, e),
            (InvariantKind::Independence, Witness::Vertices(s)) => s.len() == self.value && g.is_independent(*s),
            (InvariantKind::IndependenceDomination, Witness::Vertices(s)) => s.len() == self.value && is_independent_dominating(g, *s),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    Matching,
    InducedMatching,
    Independence,
    IndependenceDomination,
}

// ---------------------------------------------------------------------------
// independence number

/// Size of a maximum independent set inside `avail`.
pub(crate) fn max_independent(adj: &[u64], mut avail: u64) -> usize {
    let mut taken = 0;
    'reduce: loop {
        if avail == 0 {
            return taken;
        }
        for v in members(avail) {
            // a vertex of degree <= 1 lies in some maximum independent set
            if (adj[v] & avail).count_ones() <= 1 {
                taken += 1;
                avail &= !(adj[v] | bit(v));
                continue 'reduce;
            }
        }
        break;
    }
    let v = members(avail).max_by_key(|&v| ((adj[v] & avail).count_ones(), std::cmp::Reverse(v))).expect("nonempty");
    let without = max_independent(adj, avail & !bit(v));
    let with = 1 + max_independent(adj, avail & !(adj[v] | bit(v)));
    taken + without.max(with)
}

pub fn independence_number(g: &SimpleGraph) -> WitnessedValue {
    let adj = g.adjacency();
    let value = max_independent(adj, g.all_vertices().bits());
    let mut avail = g.all_vertices().bits();
    let mut chosen = VertexSet::EMPTY;
    for v in 0..g.vertex_count() {
        if avail & bit(v) == 0 {
            continue;
        }
        let rest = avail & !(adj[v] | bit(v));
        if chosen.len() + 1 + max_independent(adj, rest) == value {
            chosen.insert(v);
            avail = rest;
        } else {
            avail &= !bit(v);
        }
    }
    debug_assert_eq!(chosen.len(), value);
    WitnessedValue { value, witness: Witness::Vertices(chosen) }
}

// ---------------------------------------------------------------------------
// independence domination

struct DominationSearch<'a> {
    adj: &'a [u64],
    all: u64,
    best: usize,
}

impl DominationSearch<'_> {
    fn closed(&self, v: usize) -> u64 {
        self.adj[v] | bit(v)
    }

    /// `dominated` is `A ∪ N(A)`; a vertex may join `A` only if it is not yet
    /// dominated and not in `forbidden`.
    fn run(&mut self, dominated: u64, forbidden: u64, count: usize) {
        if dominated == self.all {
            self.best = self.best.min(count);
            return;
        }
        let undominated = self.all & !dominated;
        let max_reach = members(undominated).map(|v| (self.closed(v) & undominated).count_ones()).max().unwrap_or(1) as usize;
        let lower = undominated.count_ones() as usize;
        if count + lower.div_ceil(max_reach) >= self.best {
            return;
        }
        let mut pick = None;
        let mut fewest = u32::MAX;
        for u in members(undominated) {
            let cand = self.closed(u) & undominated & !forbidden;
            let c = cand.count_ones();
            if c < fewest {
                fewest = c;
                pick = Some(cand);
                if c <= 1 {
                    break;
                }
            }
        }
        let Some(cand) = pick else { return };
        let mut forbidden = forbidden;
        for x in members(cand) {
            self.run(dominated | self.closed(x), forbidden, count + 1);
            forbidden |= bit(x);
        }
    }
}

/// Minimum size of an independent dominating set containing `forced` and
/// avoiding `forbidden`, if one exists.
fn min_independent_dominating(adj: &[u64], all: u64, forced: u64, forbidden: u64) -> Option<usize> {
    let dominated = members(forced).fold(forced, |m, v| m | adj[v]);
    if members(forced).any(|v| adj[v] & forced != 0) {
        return None;
    }
    let mut s = DominationSearch { adj, all, best: usize::MAX };
    s.run(dominated, forbidden, forced.count_ones() as usize);
    (s.best != usize::MAX).then_some(s.best)
}

/// Minimum cardinality of an independent set `A` with `A ∪ N(A) = V`.
/// Isolated vertices necessarily belong to `A`.
pub fn independence_domination(g: &SimpleGraph) -> WitnessedValue {
    let adj = g.adjacency();
    let all = g.all_vertices().bits();
    let value = min_independent_dominating(adj, all, 0, 0).expect("a maximal independent set always exists");
    let mut forced = 0u64;
    let mut forbidden = 0u64;
    for v in 0..g.vertex_count() {
        let blocked = members(forced).any(|u| adj[u] & bit(v) != 0);
        if blocked {
            continue;
        }
        if min_independent_dominating(adj, all, forced | bit(v), forbidden) == Some(value) {
            forced |= bit(v);
        } else {
            forbidden |= bit(v);
        }
    }
    WitnessedValue { value, witness: Witness::Vertices(VertexSet(forced)) }
}

// ---------------------------------------------------------------------------
// matchings

/// Shared search for ordinary and induced matchings. `allowed[v]` lists the
/// partners `v` may still be matched with; `adj` is the true adjacency used
/// for the induced condition.
struct MatchingSearch<'a> {
    adj: &'a [u64],
    allowed: Vec<u64>,
    induced: bool,
    memo: HashMap<u64, usize>,
}

impl<'a> MatchingSearch<'a> {
    fn new(adj: &'a [u64], induced: bool) -> Self {
        MatchingSearch { adj, allowed: adj.to_vec(), induced, memo: HashMap::new() }
    }

    fn forbid(&mut self, a: usize, b: usize) {
        self.allowed[a] &= !bit(b);
        self.allowed[b] &= !bit(a);
        self.memo.clear();
    }

    fn after_matching(&self, avail: u64, a: usize, b: usize) -> u64 {
        if self.induced {
            avail & !(self.adj[a] | self.adj[b] | bit(a) | bit(b))
        } else {
            avail & !(bit(a) | bit(b))
        }
    }

    fn best(&mut self, avail: u64) -> usize {
        let Some(v) = members(avail).find(|&v| self.allowed[v] & avail != 0) else {
            return 0;
        };
        if let Some(&m) = self.memo.get(&avail) {
            return m;
        }
        let mut best = self.best(avail & !bit(v));
        for u in members(self.allowed[v] & avail) {
            let live = avail & !bit(v) & !bit(u);
            let live_nonisolated = members(live).filter(|&w| self.allowed[w] & live != 0).count();
            if live_nonisolated / 2 < best {
                continue;
            }
            let next = self.after_matching(avail, v, u);
            best = best.max(1 + self.best(next));
        }
        self.memo.insert(avail, best);
        best
    }

    fn solve(adj: &'a [u64], n: usize, induced: bool) -> WitnessedValue {
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut search = MatchingSearch::new(adj, induced);
        let value = search.best(all);
        let mut avail = all;
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        for a in 0..n {
            for b in members(adj[a] & !((bit(a) << 1) - 1)) {
                if avail & bit(a) == 0 || avail & bit(b) == 0 || search.allowed[a] & bit(b) == 0 {
                    continue;
                }
                let next = search.after_matching(avail, a, b);
                if chosen.len() + 1 + search.best(next) == value {
                    chosen.push((a, b));
                    avail = next;
                } else {
                    search.forbid(a, b);
                }
            }
        }
        debug_assert_eq!(chosen.len(), value);
        WitnessedValue { value, witness: Witness::Edges(chosen) }
    }
}

pub fn matching_number(g: &SimpleGraph) -> WitnessedValue {
    MatchingSearch::solve(g.adjacency(), g.vertex_count(), false)
}

pub fn induced_matching_number(g: &SimpleGraph) -> WitnessedValue {
    MatchingSearch::solve(g.adjacency(), g.vertex_count(), true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_index_edges(labels, &edges)
    }

    fn star(s: usize) -> SimpleGraph {
        let mut labels = vec!["xv".to_string()];
        labels.extend((1..=s).map(|i| format!("x{i}")));
        let edges: Vec<_> = (1..=s).map(|i| (0, i)).collect();
        SimpleGraph::from_index_edges(labels, &edges)
    }

    /// Brute force over all edge subsets.
    fn brute_matchings(g: &SimpleGraph) -> (usize, usize) {
        let edges = g.edges();
        let mut best = (0, 0);
        for mask in 0u32..1 << edges.len() {
            let chosen: Vec<_> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            if is_matching(g, &chosen) {
                best.0 = best.0.max(chosen.len());
                if is_induced_matching(g, &chosen) {
                    best.1 = best.1.max(chosen.len());
                }
            }
        }
        best
    }

    #[test]
    fn edgeless_matching_is_empty() {
        let g = SimpleGraph::parse("vertices: a b c\nedges:").unwrap();
        let m = matching_number(&g);
        assert_eq!(m.value, 0);
        assert_eq!(m.witness, Witness::Edges(vec![]));
    }

    #[test]
    fn c5_matchings_against_brute_force() {
        let g = cycle(5);
        assert_eq!(brute_matchings(&g), (2, 1));
        assert_eq!(matching_number(&g).value, 2);
        assert_eq!(induced_matching_number(&g).value, 1);
    }

    #[test]
    fn star_matching_is_one() {
        for s in 1..6 {
            let m = matching_number(&star(s));
            assert_eq!(m.value, 1);
            assert!(m.certifies(&star(s), InvariantKind::Matching));
        }
    }

    #[test]
    fn two_disjoint_edges_induced_matching() {
        let g = SimpleGraph::parse("vertices: a b c d\nedges: a b c d").unwrap();
        assert_eq!(induced_matching_number(&g).value, 2);
    }

    #[test]
    fn independence_of_paths_cycles_triangle() {
        for n in 2..12 {
            assert_eq!(independence_number(&SimpleGraph::path(n, "x")).value, n.div_ceil(2));
        }
        for n in 3..12 {
            assert_eq!(independence_number(&cycle(n)).value, (n - 1).div_ceil(2));
        }
        assert_eq!(independence_number(&cycle(3)).value, 1);
    }

    #[test]
    fn star_domination_is_center() {
        let g = star(4);
        let w = independence_domination(&g);
        assert_eq!(w.value, 1);
        assert_eq!(w.witness, Witness::Vertices(VertexSet::singleton(0)));
    }

    #[test]
    fn isolated_vertices_are_forced() {
        let g = SimpleGraph::parse("vertices: a b c d\nedges: a b").unwrap();
        let w = independence_domination(&g);
        assert_eq!(w.value, 3);
        assert_eq!(g.set_labels(w.vertices().unwrap()), vec!["a", "c", "d"]);
    }

    #[test]
    fn witnesses_are_lexicographically_least() {
        // P4 a-b-c-d: maximum independent sets {a,c},{a,d},{b,d}
        let g = SimpleGraph::path(4, "x");
        let w = independence_number(&g);
        assert_eq!(g.set_labels(w.vertices().unwrap()), vec!["x1", "x3"]);
        let m = matching_number(&g);
        assert_eq!(m.edges().unwrap(), &[(0, 1), (2, 3)]);
        let d = independence_domination(&g);
        // {x1,x3} and {x1,x4} and {x2,x4} all dominate; least is {x1,x3}
        assert_eq!(g.set_labels(d.vertices().unwrap()), vec!["x1", "x3"]);
    }
}
