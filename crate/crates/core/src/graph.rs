//! Finite simple graphs with string vertex labels.
//!
//! A [`SimpleGraph`] keeps its labels in declaration order and an adjacency
//! bitmask per vertex. Everything downstream (searches, Hilbert recursion,
//! Hochster sums) works on the dense indices; labels only matter at the edges
//! of the API and in serialization.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{self, VertexSet, MAX_VERTICES};
use crate::canon;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed line: {text}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: duplicate vertex `{label}`")]
    DuplicateVertex { line: usize, label: String },
    #[error("line {line}: loop edge at `{label}`")]
    LoopEdge { line: usize, label: String },
    #[error("line {line}: edge endpoint `{label}` was not declared")]
    UndeclaredEndpoint { line: usize, label: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("invalid graph json: {0}")]
    Json(String),
}

/// Isomorphism-invariant key: the canonical packed adjacency matrix.
///
/// Two graphs have equal keys if and only if they are isomorphic; there is no
/// hashing involved.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<u64>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph").field("vertices", &self.labels).field("edges", &self.edge_labels()).finish()
    }
}

impl SimpleGraph {
    /// Builds a graph from labels and label pairs, enforcing the simple-graph
    /// invariants. Repeated edges collapse into one.
    pub fn new<S, E>(labels: &[S], edges: &[(E, E)]) -> Result<Self, GraphError>
    where
        S: AsRef<str>,
        E: AsRef<str>,
    {
        let mut g = SimpleGraph::with_labels(labels.iter().map(|s| s.as_ref().to_string()), 0)?;
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = g.index_of(a).ok_or_else(|| GraphError::UnknownVertex(a.into()))?;
            let ib = g.index_of(b).ok_or_else(|| GraphError::UnknownVertex(b.into()))?;
            if ia == ib {
                return Err(GraphError::LoopEdge { line: 0, label: a.into() });
            }
            g.link(ia, ib);
        }
        Ok(g)
    }

    /// Builds a graph on `labels` from index pairs. Panics on loops or
    /// out-of-range indices; meant for internal constructors.
    pub fn from_index_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::with_labels(labels.into_iter(), 0).expect("valid labels");
        for &(a, b) in edges {
            assert!(a != b, "loop edge");
            g.link(a, b);
        }
        g
    }

    fn with_labels(labels: impl Iterator<Item = String>, line: usize) -> Result<Self, GraphError> {
        let mut g = SimpleGraph { labels: Vec::new(), index: HashMap::new(), adj: Vec::new() };
        for l in labels {
            g.push_vertex(l, line)?;
        }
        Ok(g)
    }

    fn push_vertex(&mut self, label: String, line: usize) -> Result<(), GraphError> {
        if self.index.contains_key(&label) {
            return Err(GraphError::DuplicateVertex { line, label });
        }
        if self.labels.len() == MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.labels.len() + 1));
        }
        self.index.insert(label.clone(), self.labels.len());
        self.labels.push(label);
        self.adj.push(0);
        Ok(())
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1u64 << b;
        self.adj[b] |= 1u64 << a;
    }

    /// Path on labels `prefix1 .. prefixN`.
    pub fn path(n: usize, prefix: &str) -> Self {
        let labels = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_index_edges(labels, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Edges as index pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.vertex_count() {
            for b in bits::members(self.adj[a] >> a >> 1 << a << 1) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges().into_iter().map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone())).collect()
    }

    pub fn set_labels(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn set_of(&self, labels: &[impl AsRef<str>]) -> Result<VertexSet, GraphError> {
        let mut s = VertexSet::EMPTY;
        for l in labels {
            let l = l.as_ref();
            s.insert(self.index_of(l).ok_or_else(|| GraphError::UnknownVertex(l.into()))?);
        }
        Ok(s)
    }

    /// Subgraph induced on the named vertices, in this graph's vertex order.
    pub fn induced_subgraph(&self, w: &[impl AsRef<str>]) -> Result<SimpleGraph, GraphError> {
        Ok(self.induced_by_set(self.set_of(w)?))
    }

    pub fn induced_by_set(&self, w: VertexSet) -> SimpleGraph {
        let labels = self.set_labels(w);
        SimpleGraph {
            index: labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect(),
            labels,
            adj: bits::compress(&self.adj, w.bits()),
        }
    }

    /// Open or closed neighborhood of `v`, as labels in vertex order.
    pub fn neighborhood(&self, v: &str, closed: bool) -> Result<Vec<String>, GraphError> {
        let i = self.index_of(v).ok_or_else(|| GraphError::UnknownVertex(v.into()))?;
        let mut set = self.neighbors(i);
        if closed {
            set.insert(i);
        }
        Ok(self.set_labels(set))
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        bits::components(&self.adj, self.all_vertices().bits()).into_iter().map(VertexSet).collect()
    }

    pub fn connected_components(&self) -> Vec<SimpleGraph> {
        self.component_sets().into_iter().map(|c| self.induced_by_set(c)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_sets().len() == self.vertex_count()
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.bits() == 0)
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        CanonicalKey(canon::canonical_code(&self.adj))
    }

    /// Relabels vertex `i` as `labels[i]` and moves it to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
        SimpleGraph::from_index_edges(labels, &edges)
    }

    /// Disjoint union; labels of `other` must not clash with ours.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph, GraphError> {
        let mut g = self.clone();
        let offset = g.vertex_count();
        for l in &other.labels {
            g.push_vertex(l.clone(), 0)?;
        }
        for (a, b) in other.edges() {
            g.link(a + offset, b + offset);
        }
        Ok(g)
    }

    /// Parses the `vertices:` / `edges:` text format.
    pub fn parse(text: &str) -> Result<SimpleGraph, GraphError> {
        let mut g = SimpleGraph { labels: Vec::new(), index: HashMap::new(), adj: Vec::new() };
        let mut pending: Vec<(usize, String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix("vertices:") {
                for label in rest.split_whitespace() {
                    g.push_vertex(label.to_string(), line)?;
                }
            } else if let Some(rest) = content.strip_prefix("edges:") {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if !toks.len().is_multiple_of(2) {
                    return Err(GraphError::Malformed { line, text: raw.to_string() });
                }
                for pair in toks.chunks(2) {
                    pending.push((line, pair[0].to_string(), pair[1].to_string()));
                }
            } else {
                return Err(GraphError::Malformed { line, text: raw.to_string() });
            }
        }
        for (line, a, b) in pending {
            if a == b {
                return Err(GraphError::LoopEdge { line, label: a });
            }
            let ia = g.index_of(&a).ok_or(GraphError::UndeclaredEndpoint { line, label: a.clone() })?;
            let ib = g.index_of(&b).ok_or(GraphError::UndeclaredEndpoint { line, label: b })?;
            g.link(ia, ib);
        }
        Ok(g)
    }

    /// Renders the text format accepted by [`SimpleGraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::from("vertices:");
        for l in &self.labels {
            out.push(' ');
            out.push_str(l);
        }
        out.push_str("\nedges:");
        for (a, b) in self.edge_labels() {
            out.push(' ');
            out.push_str(&a);
            out.push(' ');
            out.push_str(&b);
        }
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> GraphJson {
        let mut edges: Vec<[String; 2]> = self.edge_labels().into_iter().map(|(a, b)| if a <= b { [a, b] } else { [b, a] }).collect();
        edges.sort();
        GraphJson { vertices: self.labels.clone(), edges }
    }

    pub fn from_json(json: &GraphJson) -> Result<SimpleGraph, GraphError> {
        let pairs: Vec<(&str, &str)> = json.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        SimpleGraph::new(&json.vertices, &pairs)
    }
}

/// JSON form `{"vertices":[...],"edges":[[u,v],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = GraphJson::deserialize(d)?;
        SimpleGraph::from_json(&json).map_err(serde::de::Error::custom)
    }
}
