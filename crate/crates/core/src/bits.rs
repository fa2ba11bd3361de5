//! Small fixed-width vertex sets and the dense adjacency helpers built on them.
//!
//! Every graph in this crate has at most [`MAX_VERTICES`] vertices, so a vertex
//! subset is a single `u64`. The free functions here work on an adjacency slice
//! (`adj[v]` is the neighbor mask of `v`) restricted to a mask of live vertices;
//! that is the representation all the exponential searches run on.

use std::fmt;

/// Hard upper bound on the number of vertices of a [`crate::SimpleGraph`].
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub(crate) fn members(mask: u64) -> Members {
    Members(mask)
}

/// Degree of `v` inside the live set `mask`.
#[inline]
pub(crate) fn degree_in(adj: &[u64], mask: u64, v: usize) -> u32 {
    (adj[v] & mask).count_ones()
}

/// Connected components of the subgraph induced on `mask`, ordered by least vertex.
pub(crate) fn components(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u64;
            for v in members(frontier) {
                next |= adj[v];
            }
            next &= mask & !comp;
            comp |= next;
            frontier = next;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// Whether some vertex of `mask` has no neighbor inside `mask`.
#[inline]
pub(crate) fn has_isolated(adj: &[u64], mask: u64) -> bool {
    members(mask).any(|v| adj[v] & mask == 0)
}

/// Adjacency of the subgraph induced on `mask`, relabelled onto `0..|mask|`
/// in increasing vertex order.
pub(crate) fn compress(adj: &[u64], mask: u64) -> Vec<u64> {
    let verts: Vec<usize> = members(mask).collect();
    let mut pos = [usize::MAX; 64];
    for (i, &v) in verts.iter().enumerate() {
        pos[v] = i;
    }
    verts.iter().map(|&v| members(adj[v] & mask).fold(0u64, |acc, u| acc | 1u64 << pos[u])).collect()
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
