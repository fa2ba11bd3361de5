//! Graded Betti numbers of `S/I(G)` through Hochster's formula
//!
//! ```text
//! β_{i,j} = Σ_{|W| = j} dim H̃_{j-i-1}(Ind(G_W); K)
//! ```
//!
//! and the homological invariants read off the table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bits::{self, members, VertexSet};
use crate::graph::SimpleGraph;
use crate::hilbert::{hilbert_data, HilbertError};
use crate::homology::{Field, IndependenceHomology};
use crate::invariants::{induced_matching_number, is_induced_matching};
use crate::poly::IntPolynomial;

pub const DEFAULT_CUTOFF: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("graph has {n} vertices, above the Betti cutoff {cutoff}; raise the cutoff or use a closed formula")]
    CutoffExceeded { n: usize, cutoff: usize },
    #[error("(*) evaluated two ways disagrees: degree arithmetic says {arithmetic}, beta_(p,p+r) != 0 says {betti}")]
    StarEqualityDisagreement { arithmetic: bool, betti: bool },
    #[error("deg h - reg = {lhs} exceeds dim - depth = {rhs}")]
    InequalityViolated { lhs: i64, rhs: i64 },
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiOptions {
    pub cutoff: usize,
    /// Delete dominated vertices before computing homology. Turning this off
    /// forces every complex through the boundary matrices.
    pub fold_reduction: bool,
    pub parallel: bool,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions { cutoff: DEFAULT_CUTOFF, fold_reduction: true, parallel: true }
    }
}

/// Nonzero graded Betti numbers `β_{i,j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field: Field,
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn from_entries(field: Field, n: usize, entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let entries = entries.into_iter().filter(|&(_, b)| b != 0).collect();
        BettiTable { field, n, entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn projdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Table corners: no other entry lies weakly to the right and weakly below.
    pub fn extremal_positions(&self) -> Vec<(usize, usize)> {
        self.entries
            .keys()
            .filter(|&&(i, j)| !self.entries.keys().any(|&(a, b)| (a, b) != (i, j) && a >= i && b - a >= j - i))
            .copied()
            .collect()
    }

    /// `Σ (-1)^i β_{i,j} λ^j`, the numerator of the Hilbert series over `(1-λ)^n`.
    pub fn alternating_numerator(&self) -> IntPolynomial {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut c = vec![num_bigint::BigInt::from(0); top + 1];
        for (&(i, j), &b) in &self.entries {
            if i % 2 == 0 {
                c[j] += b;
            } else {
                c[j] -= b;
            }
        }
        IntPolynomial::new(c)
    }

    /// Macaulay2-style display: columns are `i`, rows are `j - i`.
    pub fn render(&self) -> String {
        let p = self.projdim();
        let r = self.regularity();
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let totals: Vec<u64> = (0..=p).map(|i| self.entries().filter(|e| e.0 == i).map(|e| e.2).sum()).collect();
        let mut rows = vec![("".to_string(), (0..=p).map(|i| i.to_string()).collect::<Vec<_>>())];
        rows.push(("total:".to_string(), totals.iter().map(|&t| cell(t)).collect()));
        for k in 0..=r {
            rows.push((format!("{k}:"), (0..=p).map(|i| cell(self.get(i, i + k))).collect()));
        }
        let lw = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        let cw: Vec<usize> = (0..=p).map(|c| rows.iter().map(|r| r.1[c].len()).max().unwrap_or(1)).collect();
        let mut out = String::new();
        for (label, cells) in &rows {
            let _ = write!(out, "{label:>lw$}");
            for (c, s) in cells.iter().enumerate() {
                let _ = write!(out, " {s:>w$}", w = cw[c]);
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("field", self.field.tag())?;
        if let Field::Prime(p) = self.field {
            m.serialize_entry("characteristic", &p)?;
        }
        let entries: Vec<[u64; 3]> = self.entries().map(|(i, j, b)| [i as u64, j as u64, b]).collect();
        m.serialize_entry("entries", &entries)?;
        m.end()
    }
}

pub fn betti_table(g: &SimpleGraph, field: Field) -> Result<BettiTable, ResolutionError> {
    betti_table_with(g, field, BettiOptions::default())
}

pub fn betti_table_with(g: &SimpleGraph, field: Field, opts: BettiOptions) -> Result<BettiTable, ResolutionError> {
    let n = g.vertex_count();
    if n > opts.cutoff {
        return Err(ResolutionError::CutoffExceeded { n, cutoff: opts.cutoff });
    }
    let adj = g.adjacency();
    let total: u64 = 1 << n;
    let accumulate = |range: std::ops::Range<u64>| {
        let mut engine = IndependenceHomology::new(adj, field, opts.fold_reduction);
        let mut acc: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for w in range {
            if w != 0 && bits::has_isolated(adj, w) {
                continue;
            }
            let j = w.count_ones() as usize;
            for (idx, &d) in engine.of_mask(w).iter().enumerate() {
                if d != 0 {
                    *acc.entry((j - idx, j)).or_default() += d;
                }
            }
        }
        acc
    };
    let merge = |mut a: BTreeMap<(usize, usize), u64>, b: BTreeMap<(usize, usize), u64>| {
        for (k, v) in b {
            *a.entry(k).or_default() += v;
        }
        a
    };
    let entries = if opts.parallel && n > 10 {
        let chunk = 1u64 << (n - 6);
        (0..total / chunk).into_par_iter().map(|c| accumulate(c * chunk..(c + 1) * chunk)).reduce(BTreeMap::new, merge)
    } else {
        accumulate(0..total)
    };
    Ok(BettiTable::from_entries(field, n, entries))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologicalReport {
    pub field: Field,
    pub n: usize,
    pub projdim: usize,
    pub depth: usize,
    pub reg: usize,
    pub dim: usize,
    pub deg_h: usize,
    pub a_invariant: i64,
    pub star_equality: bool,
    pub extremal_betti_positions: Vec<(usize, usize)>,
    pub unique_extremal: bool,
}

impl HomologicalReport {
    /// `deg h - reg`.
    pub fn lhs(&self) -> i64 {
        self.deg_h as i64 - self.reg as i64
    }

    /// `dim - depth`.
    pub fn rhs(&self) -> i64 {
        self.dim as i64 - self.depth as i64
    }
}

pub fn homological_report(g: &SimpleGraph, field: Field) -> Result<HomologicalReport, ResolutionError> {
    homological_report_with(g, field, BettiOptions::default())
}

pub fn homological_report_with(g: &SimpleGraph, field: Field, opts: BettiOptions) -> Result<HomologicalReport, ResolutionError> {
    let table = betti_table_with(g, field, opts)?;
    report_from_table(g, &table)
}

/// Combines a Betti table of `g` with its Hilbert data.
pub fn report_from_table(g: &SimpleGraph, table: &BettiTable) -> Result<HomologicalReport, ResolutionError> {
    let h = hilbert_data(g)?;
    let n = g.vertex_count();
    let projdim = table.projdim();
    let reg = table.regularity();
    let depth = n - projdim;
    let lhs = h.deg_h() as i64 - reg as i64;
    let rhs = h.dim as i64 - depth as i64;
    if lhs > rhs {
        return Err(ResolutionError::InequalityViolated { lhs, rhs });
    }
    let arithmetic = lhs == rhs;
    let betti = table.get(projdim, projdim + reg) != 0;
    if arithmetic != betti {
        return Err(ResolutionError::StarEqualityDisagreement { arithmetic, betti });
    }
    let extremal = table.extremal_positions();
    let unique_extremal = extremal == [(projdim, projdim + reg)];
    Ok(HomologicalReport {
        field: table.field(),
        n,
        projdim,
        depth,
        reg,
        dim: h.dim,
        deg_h: h.deg_h(),
        a_invariant: h.a_invariant(),
        star_equality: arithmetic,
        extremal_betti_positions: extremal,
        unique_extremal,
    })
}

// ---------------------------------------------------------------------------
// star-packing witnesses

/// One star: its center, its leaves, and the edge of the induced matching it
/// carries (center first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarPiece {
    pub center: usize,
    pub leaves: VertexSet,
    pub edge: (usize, usize),
}

/// Vertex-disjoint stars whose chosen edges form an induced matching. Such a
/// configuration with `i` edges in total and `ℓ` stars forces
/// `β_{i,i+ℓ} ≠ 0` over every field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarPackingWitness {
    pub stars: Vec<StarPiece>,
}

impl StarPackingWitness {
    pub fn edge_count(&self) -> usize {
        self.stars.iter().map(|s| s.leaves.len()).sum()
    }

    pub fn is_valid(&self, g: &SimpleGraph, i: usize, ell: usize) -> bool {
        if self.stars.len() != ell || self.edge_count() != i {
            return false;
        }
        let mut used = VertexSet::EMPTY;
        for s in &self.stars {
            let star = s.leaves.union(VertexSet::singleton(s.center));
            if !used.intersection(star).is_empty()
                || s.leaves.iter().any(|l| !g.has_edge(s.center, l))
                || s.edge.0 != s.center
                || !s.leaves.contains(s.edge.1)
            {
                return false;
            }
            used = used.union(star);
        }
        let edges: Vec<(usize, usize)> = self.stars.iter().map(|s| s.edge).collect();
        is_induced_matching(g, &edges)
    }

    pub fn describe(&self, g: &SimpleGraph) -> Vec<String> {
        self.stars
            .iter()
            .map(|s| {
                let leaves: Vec<&str> = s.leaves.iter().map(|v| g.label(v)).collect();
                format!("center {} leaves {{{}}} edge {}-{}", g.label(s.center), leaves.join(","), g.label(s.edge.0), g.label(s.edge.1))
            })
            .collect()
    }
}

/// Searches induced matchings of size `ell` in lexicographic order of their
/// edge lists, and for each the orientations choosing star centers; extra
/// leaves are free neighbors of the centers, assigned in vertex order.
pub fn star_packing_witness(g: &SimpleGraph, i: usize, ell: usize) -> Option<StarPackingWitness> {
    if ell == 0 || i < ell || ell > induced_matching_number(g).value {
        return None;
    }
    let edges = g.edges();
    let adj = g.adjacency();
    let mut chosen = Vec::with_capacity(ell);
    search_matchings(adj, &edges, 0, 0, ell, i, &mut chosen)
}

fn search_matchings(
    adj: &[u64],
    edges: &[(usize, usize)],
    start: usize,
    blocked: u64,
    ell: usize,
    i: usize,
    chosen: &mut Vec<(usize, usize)>,
) -> Option<StarPackingWitness> {
    if chosen.len() == ell {
        return orient(adj, chosen, i);
    }
    for k in start..edges.len() {
        let (a, b) = edges[k];
        let ends = 1u64 << a | 1u64 << b;
        if blocked & ends != 0 {
            continue;
        }
        // induced: nothing adjacent to an earlier matched edge
        chosen.push((a, b));
        let next = blocked | ends | adj[a] | adj[b];
        if let Some(w) = search_matchings(adj, edges, k + 1, next, ell, i, chosen) {
            return Some(w);
        }
        chosen.pop();
    }
    None
}

fn orient(adj: &[u64], matching: &[(usize, usize)], i: usize) -> Option<StarPackingWitness> {
    let ell = matching.len();
    let used: u64 = matching.iter().fold(0, |m, &(a, b)| m | 1u64 << a | 1u64 << b);
    for flips in 0u64..1 << ell {
        let pairs: Vec<(usize, usize)> =
            matching.iter().enumerate().map(|(k, &(a, b))| if flips >> k & 1 == 0 { (a, b) } else { (b, a) }).collect();
        let free = pairs.iter().fold(0u64, |m, &(c, _)| m | adj[c]) & !used;
        let extra_needed = i - ell;
        if free.count_ones() as usize >= extra_needed {
            let mut leaves: Vec<u64> = pairs.iter().map(|&(_, u)| 1u64 << u).collect();
            for x in members(free).take(extra_needed) {
                let k = pairs.iter().position(|&(c, _)| adj[c] >> x & 1 == 1).expect("free vertex has a center");
                leaves[k] |= 1u64 << x;
            }
            let stars = pairs.iter().zip(leaves).map(|(&(c, u), l)| StarPiece { center: c, leaves: VertexSet(l), edge: (c, u) }).collect();
            return Some(StarPackingWitness { stars });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> SimpleGraph {
        SimpleGraph::parse(text).unwrap()
    }

    #[test]
    fn single_edge_and_triangle() {
        let e = g("vertices: a b\nedges: a b");
        let t = betti_table(&e, Field::Rationals).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 1)]);

        let k3 = g("vertices: a b c\nedges: a b b c a c");
        let t = betti_table(&k3, Field::Rationals).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        let r = report_from_table(&k3, &t).unwrap();
        assert_eq!((r.projdim, r.depth, r.reg, r.dim, r.deg_h), (2, 1, 1, 1, 1));
        assert!(r.star_equality);
    }

    #[test]
    fn p3_table() {
        let p3 = SimpleGraph::path(3, "x");
        let t = betti_table(&p3, Field::Prime(2)).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 2), (2, 3, 1)]);
        assert_eq!((t.projdim(), t.regularity()), (2, 1));
        assert_eq!(t.extremal_positions(), vec![(2, 3)]);
    }

    #[test]
    fn p4_report() {
        let r = homological_report(&SimpleGraph::path(4, "x"), Field::Rationals).unwrap();
        assert_eq!((r.projdim, r.depth, r.reg, r.dim, r.deg_h), (2, 2, 1, 2, 1));
        assert!(r.star_equality);
    }

    #[test]
    fn cutoff_is_enforced() {
        let p = SimpleGraph::path(5, "x");
        let opts = BettiOptions { cutoff: 4, ..BettiOptions::default() };
        assert_eq!(betti_table_with(&p, Field::Rationals, opts), Err(ResolutionError::CutoffExceeded { n: 5, cutoff: 4 }));
    }

    #[test]
    fn json_and_text() {
        let k3 = g("vertices: a b c\nedges: a b b c a c");
        let t = betti_table(&k3, Field::Rationals).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"field":"Q","entries":[[0,0,1],[1,2,3],[2,3,2]]}"#);
        let t2 = betti_table(&k3, Field::Prime(2)).unwrap();
        assert!(serde_json::to_string(&t2).unwrap().starts_with(r#"{"field":"Fp","characteristic":2,"#));
        let text = t.render();
        assert_eq!(text, "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
    }

    #[test]
    fn alternating_sum_matches_numerator() {
        let c5 = g("vertices: a b c d e\nedges: a b b c c d d e e a");
        let t = betti_table(&c5, Field::Rationals).unwrap();
        assert_eq!(t.alternating_numerator(), crate::hilbert::k_polynomial(&c5).numerator);
    }

    #[test]
    fn star_packing_on_p3() {
        let p3 = SimpleGraph::path(3, "x");
        let w = star_packing_witness(&p3, 2, 1).unwrap();
        assert!(w.is_valid(&p3, 2, 1));
        assert_eq!(w.stars[0].center, 1);
        assert_eq!(w.stars[0].leaves, VertexSet(0b101));
        assert!(star_packing_witness(&p3, 3, 1).is_none());
        assert!(star_packing_witness(&p3, 2, 2).is_none());
    }
}
