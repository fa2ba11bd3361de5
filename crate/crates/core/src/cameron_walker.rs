//! Cameron–Walker graphs in normal form.
//!
//! A spec describes a connected bipartite core on `v_1..v_m` and `w_1..w_n`,
//! `s_i ≥ 1` leaves hanging at each `v_i` and `t_j ≥ 0` pendant triangles at
//! each `w_j`. Indices in a spec are 1-based, matching the vertex labels
//! `x{i}_{k}`, `v{i}`, `w{j}`, `y{j}_{l}_1`, `y{j}_{l}_2`.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{members, VertexSet};
use crate::graph::{GraphError, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CwError {
    #[error("m and n must be positive")]
    EmptyPart,
    #[error("expected {expected} entries in {which}, got {got}")]
    LengthMismatch { which: &'static str, expected: usize, got: usize },
    #[error("s_{0} must be at least 1")]
    NoLeaves(usize),
    #[error("bipartite edge ({0},{1}) is out of range")]
    EdgeOutOfRange(usize, usize),
    #[error("bipartite edge ({0},{1}) is listed twice")]
    DuplicateEdge(usize, usize),
    #[error("bipartite part is disconnected")]
    Disconnected,
    #[error("spec describes a star graph (m = 1, all t_j = 0); enable the star convention to allow it")]
    Star,
    #[error("need d >= e >= 2, got d = {d}, e = {e}")]
    BadDe { d: usize, e: usize },
    #[error("need d >= r >= e >= 2, got d = {d}, r = {r}, e = {e}")]
    BadDre { d: usize, r: usize, e: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CwSpec {
    pub m: usize,
    pub n: usize,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub bip: Vec<(usize, usize)>,
}

impl CwSpec {
    /// Validated spec with the bipartite edges sorted.
    pub fn new(m: usize, n: usize, s: Vec<usize>, t: Vec<usize>, mut bip: Vec<(usize, usize)>) -> Result<Self, CwError> {
        bip.sort_unstable();
        let spec = CwSpec { m, n, s, t, bip };
        spec.validate(false)?;
        Ok(spec)
    }

    pub fn validate(&self, allow_star: bool) -> Result<(), CwError> {
        if self.m == 0 || self.n == 0 {
            return Err(CwError::EmptyPart);
        }
        for (which, expected, got) in [("s", self.m, self.s.len()), ("t", self.n, self.t.len())] {
            if expected != got {
                return Err(CwError::LengthMismatch { which, expected, got });
            }
        }
        if let Some(i) = self.s.iter().position(|&x| x == 0) {
            return Err(CwError::NoLeaves(i + 1));
        }
        let mut seen = HashSet::new();
        for &(i, j) in &self.bip {
            if i == 0 || i > self.m || j == 0 || j > self.n {
                return Err(CwError::EdgeOutOfRange(i, j));
            }
            if !seen.insert((i, j)) {
                return Err(CwError::DuplicateEdge(i, j));
            }
        }
        if !self.bipartite_connected() {
            return Err(CwError::Disconnected);
        }
        if self.is_star() && !allow_star {
            return Err(CwError::Star);
        }
        Ok(())
    }

    fn bipartite_connected(&self) -> bool {
        // vertices 0..m are v's, m..m+n are w's
        let total = self.m + self.n;
        let mut adj = vec![Vec::new(); total];
        for &(i, j) in &self.bip {
            adj[i - 1].push(self.m + j - 1);
            adj[self.m + j - 1].push(i - 1);
        }
        let mut seen = vec![false; total];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&b| b)
    }

    /// With `m = 1` and no triangles the graph is a star.
    pub fn is_star(&self) -> bool {
        self.m == 1 && self.t.iter().all(|&t| t == 0)
    }

    pub fn vertex_count(&self) -> usize {
        self.s.iter().sum::<usize>() + self.m + self.n + 2 * self.t.iter().sum::<usize>()
    }

    /// `N(w_j)` in the bipartite part as a bitmask over `0..m`.
    pub fn w_neighborhood(&self, j: usize) -> u64 {
        self.bip.iter().filter(|e| e.1 == j).fold(0, |acc, e| acc | 1u64 << (e.0 - 1))
    }

    pub fn is_complete_bipartite(&self) -> bool {
        self.bip.len() == self.m * self.n
    }

    /// Re-reads every `w_j` with `t_j = 0` and a single bipartite neighbor
    /// `v_i` as an extra leaf of `v_i`, then sorts the edge list. This is the
    /// form recognition produces.
    pub fn normalized(&self) -> CwSpec {
        let absorbed: Vec<usize> = (1..=self.n).filter(|&j| self.t[j - 1] == 0 && self.w_neighborhood(j).count_ones() == 1).collect();
        if absorbed.len() == self.n {
            // only possible for a star: keep one w so the core stays K_{1,1}
            return self.absorb(&absorbed[1..]);
        }
        self.absorb(&absorbed)
    }

    fn absorb(&self, absorbed: &[usize]) -> CwSpec {
        let mut s = self.s.clone();
        for &j in absorbed {
            let i = self.w_neighborhood(j).trailing_zeros() as usize;
            s[i] += 1;
        }
        let kept: Vec<usize> = (1..=self.n).filter(|j| !absorbed.contains(j)).collect();
        let t = kept.iter().map(|&j| self.t[j - 1]).collect();
        let mut bip: Vec<(usize, usize)> =
            self.bip.iter().filter_map(|&(i, j)| kept.iter().position(|&k| k == j).map(|p| (i, p + 1))).collect();
        bip.sort_unstable();
        CwSpec { m: self.m, n: kept.len(), s, t, bip }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn from_json(text: &str) -> Result<CwSpec, String> {
        let mut spec: CwSpec = serde_json::from_str(text).map_err(|e| e.to_string())?;
        spec.bip.sort_unstable();
        Ok(spec)
    }
}

/// Positions of each kind of vertex in a built graph.
struct Layout<'a> {
    spec: &'a CwSpec,
    v0: usize,
    w0: usize,
    y0: usize,
}

impl<'a> Layout<'a> {
    fn new(spec: &'a CwSpec) -> Self {
        let v0 = spec.s.iter().sum();
        let w0 = v0 + spec.m;
        Layout { spec, v0, w0, y0: w0 + spec.n }
    }

    fn labels(&self) -> Vec<String> {
        let sp = self.spec;
        let mut out = Vec::with_capacity(sp.vertex_count());
        for (i, &s) in sp.s.iter().enumerate() {
            out.extend((1..=s).map(|k| format!("x{}_{}", i + 1, k)));
        }
        out.extend((1..=sp.m).map(|i| format!("v{i}")));
        out.extend((1..=sp.n).map(|j| format!("w{j}")));
        for (j, &t) in sp.t.iter().enumerate() {
            for l in 1..=t {
                out.push(format!("y{}_{}_1", j + 1, l));
                out.push(format!("y{}_{}_2", j + 1, l));
            }
        }
        out
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let sp = self.spec;
        let mut edges = Vec::new();
        let mut x = 0;
        for (i, &s) in sp.s.iter().enumerate() {
            for _ in 0..s {
                edges.push((x, self.v0 + i));
                x += 1;
            }
        }
        for &(i, j) in &sp.bip {
            edges.push((self.v0 + i - 1, self.w0 + j - 1));
        }
        let mut y = self.y0;
        for (j, &t) in sp.t.iter().enumerate() {
            for _ in 0..t {
                let w = self.w0 + j;
                edges.extend([(w, y), (w, y + 1), (y, y + 1)]);
                y += 2;
            }
        }
        edges
    }
}

pub fn build_cw(spec: &CwSpec) -> Result<SimpleGraph, CwError> {
    spec.validate(false)?;
    build_unchecked(spec)
}

/// As [`build_cw`], but also accepts star specs (a star read as a
/// Cameron–Walker graph over `K_{1,1}`).
pub fn build_cw_star_convention(spec: &CwSpec) -> Result<SimpleGraph, CwError> {
    spec.validate(true)?;
    build_unchecked(spec)
}

fn build_unchecked(spec: &CwSpec) -> Result<SimpleGraph, CwError> {
    let layout = Layout::new(spec);
    let labels = layout.labels();
    if labels.len() > crate::bits::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(labels.len()).into());
    }
    Ok(SimpleGraph::from_index_edges(labels, &layout.edges()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recognition {
    NotCameronWalker,
    Star {
        leaves: usize,
    },
    StarTriangle {
        triangles: usize,
    },
    /// `vertex_map[k]` is the vertex of the input matching vertex `k` of
    /// `build_cw(spec)`.
    CameronWalker {
        spec: CwSpec,
        vertex_map: Vec<usize>,
    },
}

/// Decomposes `g` into leaves, pendant triangles and a bipartite core.
///
/// Degree-one vertices are always read as leaves, so the spec comes out
/// normalized. With `include_star`, a star on at least three vertices is
/// returned as the spec `m = n = 1`, `t = (0)` instead of the `Star` tag.
pub fn recognize_cw(g: &SimpleGraph, include_star: bool) -> Recognition {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return Recognition::NotCameronWalker;
    }
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if let Some(c) = (0..n).find(|&c| deg[c] == n - 1) {
        let others = (0..n).filter(|&v| v != c);
        if n == 2 || others.clone().all(|v| deg[v] == 1) {
            if include_star && n >= 3 {
                let leaves: Vec<usize> = (0..n).filter(|&v| v != c).collect();
                let spec = CwSpec { m: 1, n: 1, s: vec![n - 2], t: vec![0], bip: vec![(1, 1)] };
                let mut map = leaves[1..].to_vec();
                map.extend([c, leaves[0]]);
                return Recognition::CameronWalker { spec, vertex_map: map };
            }
            return Recognition::Star { leaves: n - 1 };
        }
        let rest = g.all_vertices().difference(VertexSet::singleton(c));
        if n % 2 == 1 && others.clone().all(|v| deg[v] == 2 && (g.neighbors(v).bits() & rest.bits()).count_ones() == 1) {
            return Recognition::StarTriangle { triangles: (n - 1) / 2 };
        }
    }
    decompose(g, &deg).unwrap_or(Recognition::NotCameronWalker)
}

fn decompose(g: &SimpleGraph, deg: &[usize]) -> Option<Recognition> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let first = |v: usize| adj[v].trailing_zeros() as usize;
    let leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    if leaves.is_empty() || leaves.iter().any(|&x| deg[first(x)] == 1) {
        return None;
    }
    let owners: u64 = leaves.iter().fold(0, |m, &x| m | 1u64 << first(x));
    // pendant triangles {w, y, y'}: y, y' of degree 2, adjacent, sharing w
    let mut tri_vertices = 0u64;
    let mut triangles: Vec<(usize, usize, usize)> = Vec::new();
    for y in 0..n {
        if deg[y] != 2 || tri_vertices >> y & 1 == 1 || owners >> y & 1 == 1 {
            continue;
        }
        let nb: Vec<usize> = members(adj[y]).collect();
        let (a, b) = (nb[0], nb[1]);
        if !g.has_edge(a, b) {
            continue;
        }
        let (partner, w) = match (deg[a] == 2, deg[b] == 2) {
            (true, false) => (a, b),
            (false, true) => (b, a),
            _ => return None,
        };
        tri_vertices |= 1u64 << y | 1u64 << partner;
        triangles.push((w, y.min(partner), y.max(partner)));
    }
    let leaf_mask: u64 = leaves.iter().fold(0, |m, &x| m | 1u64 << x);
    let core = g.all_vertices().bits() & !leaf_mask & !tri_vertices;

    // two-colour the core starting from a leaf owner
    let start = owners.trailing_zeros() as usize;
    let mut color = vec![u8::MAX; n];
    color[start] = 0;
    let mut stack = vec![start];
    let mut reached = 1u64 << start;
    while let Some(u) = stack.pop() {
        for x in members(adj[u] & core) {
            if color[x] == u8::MAX {
                color[x] = 1 - color[u];
                reached |= 1u64 << x;
                stack.push(x);
            } else if color[x] == color[u] {
                return None;
            }
        }
    }
    if reached != core {
        return None;
    }
    let v_side: Vec<usize> = members(core).filter(|&u| color[u] == 0).collect();
    let w_side: Vec<usize> = members(core).filter(|&u| color[u] == 1).collect();
    if w_side.is_empty() || v_side.iter().any(|&v| owners >> v & 1 == 0) || owners & !core != 0 {
        return None;
    }
    if triangles.iter().any(|&(w, _, _)| color[w] != 1 || core >> w & 1 == 0) {
        return None;
    }

    let s: Vec<usize> = v_side.iter().map(|&v| leaves.iter().filter(|&&x| first(x) == v).count()).collect();
    let t: Vec<usize> = w_side.iter().map(|&w| triangles.iter().filter(|tr| tr.0 == w).count()).collect();
    let mut bip = Vec::new();
    for (i, &v) in v_side.iter().enumerate() {
        for (j, &w) in w_side.iter().enumerate() {
            if g.has_edge(v, w) {
                bip.push((i + 1, j + 1));
            }
        }
    }
    let spec = CwSpec { m: v_side.len(), n: w_side.len(), s, t, bip };
    spec.validate(false).ok()?;

    let mut map = Vec::with_capacity(n);
    for &v in &v_side {
        map.extend(leaves.iter().copied().filter(|&x| first(x) == v));
    }
    map.extend(&v_side);
    map.extend(&w_side);
    for &w in &w_side {
        for &(_, y1, y2) in triangles.iter().filter(|tr| tr.0 == w) {
            map.extend([y1, y2]);
        }
    }
    // rebuild and compare edge sets
    let built = build_unchecked(&spec).ok()?;
    let mapped: BTreeSet<(usize, usize)> = built.edges().into_iter().map(|(a, b)| (map[a].min(map[b]), map[a].max(map[b]))).collect();
    let original: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
    (map.len() == n && mapped == original).then_some(Recognition::CameronWalker { spec, vertex_map: map })
}

// ---------------------------------------------------------------------------
// closed forms and classifications

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Depth2Case {
    E1,
    E2,
    E3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CwFlags {
    pub cohen_macaulay: bool,
    pub cor_main_t_le_1: bool,
    pub complete_bipartite: bool,
    pub depth2_case: Option<Depth2Case>,
    pub h_deg_equals_reg: bool,
}

/// Outcome of the subset inequality test; `failing_v` holds 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainCheck {
    pub holds: bool,
    pub failing_v: Option<Vec<usize>>,
    pub lhs: Option<usize>,
    pub rhs: Option<usize>,
    pub subsets_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CwReport {
    pub dim_and_deg_h: usize,
    pub reg: usize,
    pub i_lower: usize,
    pub i_upper: usize,
    pub a_invariant: i64,
    pub flags: CwFlags,
    pub star_equality: bool,
    pub failing_v: Option<Vec<usize>>,
}

pub fn cw_invariants(spec: &CwSpec) -> CwReport {
    let sum_s: usize = spec.s.iter().sum();
    let sum_t: usize = spec.t.iter().sum();
    let check = theorem_main_check(spec);
    CwReport {
        dim_and_deg_h: sum_s + spec.t.iter().map(|&t| t.max(1)).sum::<usize>(),
        reg: sum_t + spec.m,
        i_lower: spec.m + spec.t.iter().filter(|&&t| t > 0).count(),
        i_upper: (sum_s + spec.n).min(sum_t + spec.m),
        a_invariant: 0,
        flags: classify_special(spec),
        star_equality: check.holds,
        failing_v: check.failing_v,
    }
}

/// Tests `Σ_{v_i ∈ V} s_i + #{j : N(w_j) ⊆ V} ≥ Σ_{N(w_j) ⊆ V} t_j + |V|` for
/// the subsets `V` of `{v_1..v_m}` containing some `N(w_j)` (the others
/// always pass).
pub fn theorem_main_check(spec: &CwSpec) -> MainCheck {
    main_check(spec, false)
}

/// Same test over all `2^m` subsets.
pub fn theorem_main_check_exhaustive(spec: &CwSpec) -> MainCheck {
    main_check(spec, true)
}

fn main_check(spec: &CwSpec, exhaustive: bool) -> MainCheck {
    let nbhd: Vec<u64> = (1..=spec.n).map(|j| spec.w_neighborhood(j)).collect();
    let mut checked = 0;
    let mut worst: Option<(Vec<usize>, usize, usize)> = None;
    for v in 0u64..1 << spec.m {
        let covered: Vec<usize> = (0..spec.n).filter(|&j| nbhd[j] & !v == 0).collect();
        if !exhaustive && covered.is_empty() {
            continue;
        }
        checked += 1;
        let lhs = members(v).map(|i| spec.s[i]).sum::<usize>() + covered.len();
        let rhs = covered.iter().map(|&j| spec.t[j]).sum::<usize>() + v.count_ones() as usize;
        if lhs < rhs {
            let set: Vec<usize> = members(v).map(|i| i + 1).collect();
            if worst.as_ref().is_none_or(|w| set < w.0) {
                worst = Some((set, lhs, rhs));
            }
        }
    }
    match worst {
        None => MainCheck { holds: true, failing_v: None, lhs: None, rhs: None, subsets_checked: checked },
        Some((set, lhs, rhs)) => MainCheck { holds: false, failing_v: Some(set), lhs: Some(lhs), rhs: Some(rhs), subsets_checked: checked },
    }
}

pub fn classify_special(spec: &CwSpec) -> CwFlags {
    let all_s_one = spec.s.iter().all(|&s| s == 1);
    let norm = spec.normalized();
    let depth2_case = if norm.m == 2 && norm.t.iter().all(|&t| t == 0) {
        Some(Depth2Case::E1)
    } else if norm.m == 1 && norm.n == 1 && norm.t[0] == 1 {
        Some(Depth2Case::E2)
    } else if norm.m == 1 && norm.n == 1 && norm.t[0] >= 2 && norm.s[0] == 1 {
        Some(Depth2Case::E3)
    } else {
        None
    };
    CwFlags {
        cohen_macaulay: all_s_one && spec.t.iter().all(|&t| t == 1),
        cor_main_t_le_1: spec.t.iter().all(|&t| t <= 1),
        complete_bipartite: spec.is_complete_bipartite(),
        depth2_case,
        h_deg_equals_reg: all_s_one && spec.t.iter().all(|&t| t >= 1),
    }
}

/// A spec with `dim = d`, `depth = e` satisfying (*).
pub fn construct_de(d: usize, e: usize) -> Result<CwSpec, CwError> {
    if e < 2 || d < e {
        return Err(CwError::BadDe { d, e });
    }
    if d > e {
        let mut s = vec![1; e];
        s[e - 1] = d - e;
        CwSpec::new(e, 1, s, vec![0], (1..=e).map(|i| (i, 1)).collect())
    } else {
        CwSpec::new(d - 1, 1, vec![1; d - 1], vec![1], (1..d).map(|i| (i, 1)).collect())
    }
}

/// A spec with `dim = deg h = d`, `reg = r`, `depth = e`, or `None` when no
/// Cameron–Walker graph has these values (`e = 2` and `2 < r < d`).
pub fn construct_dre(d: usize, r: usize, e: usize) -> Result<Option<CwSpec>, CwError> {
    if e < 2 || r < e || d < r {
        return Err(CwError::BadDre { d, r, e });
    }
    let spec = if e == 2 {
        if r == 2 {
            CwSpec::new(1, 1, vec![d - 1], vec![1], vec![(1, 1)])?
        } else if r == d {
            CwSpec::new(1, 1, vec![1], vec![d - 1], vec![(1, 1)])?
        } else {
            return Ok(None);
        }
    } else if d > r {
        let m = e - 1;
        let mut s = vec![1; m];
        s[m - 1] = d - r;
        let mut bip = vec![(1, 1)];
        bip.extend((1..=m).map(|i| (i, 2)));
        CwSpec::new(m, 2, s, vec![r - e + 1, 0], bip)?
    } else {
        CwSpec::new(e - 1, 1, vec![1; e - 1], vec![d - e + 1], (1..e).map(|i| (i, 1)).collect())?
    };
    Ok(Some(spec))
}

// ---------------------------------------------------------------------------
// corpus

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusLimits {
    pub max_m: usize,
    pub max_n: usize,
    pub max_s: usize,
    pub max_t: usize,
    pub max_vertices: usize,
}

impl Default for CorpusLimits {
    fn default() -> Self {
        CorpusLimits { max_m: 3, max_n: 3, max_s: 3, max_t: 3, max_vertices: 16 }
    }
}

/// Connected bipartite graphs on `m + n` vertices with sides kept apart, one
/// per isomorphism class (row and column permutations).
pub fn bipartite_parts(m: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(m * n <= 16, "bipartite part enumeration is exhaustive");
    let cells = m * n;
    let row_perms = permutations(m);
    let col_perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u32..1 << cells {
        let canon = row_perms
            .iter()
            .flat_map(|rp| col_perms.iter().map(move |cp| (rp, cp)))
            .map(|(rp, cp)| {
                let mut image = 0u32;
                for c in 0..cells {
                    if mask >> c & 1 == 1 {
                        image |= 1 << (rp[c / n] * n + cp[c % n]);
                    }
                }
                image
            })
            .min()
            .unwrap();
        if !seen.insert(canon) {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..cells).filter(|c| canon >> c & 1 == 1).map(|c| (c / n + 1, c % n + 1)).collect();
        let probe = CwSpec { m, n, s: vec![1; m], t: vec![1; n], bip: edges.clone() };
        if probe.bipartite_connected() {
            out.push(edges);
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Every spec within `limits`, one per isomorphism class of built graph, in a
/// fixed order (by `m`, `n`, bipartite part, then `s` and `t`).
pub fn cw_corpus(limits: CorpusLimits) -> Vec<CwSpec> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in 1..=limits.max_m {
        for n in 1..=limits.max_n {
            for bip in bipartite_parts(m, n) {
                for s in tuples(m, 1, limits.max_s) {
                    for t in tuples(n, 0, limits.max_t) {
                        let spec = CwSpec { m, n, s: s.clone(), t, bip: bip.clone() };
                        if spec.is_star() || spec.vertex_count() > limits.max_vertices {
                            continue;
                        }
                        let key = build_unchecked(&spec).expect("small").canonical_key();
                        if seen.insert(key) {
                            out.push(spec);
                        }
                    }
                }
            }
        }
    }
    out
}

fn tuples(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// The graph drawn as the running example: 24 vertices, failing (*) at `{v_2}`.
pub fn example_spec() -> CwSpec {
    CwSpec::new(3, 4, vec![3, 1, 3], vec![0, 1, 2, 2], vec![(1, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 4)]).expect("valid")
}
