//! Hilbert series of `S/I(G)` for edge ideals.
//!
//! The numerator over `(1-λ)^n` comes from the colon-ideal recursion on a
//! vertex `v` lying on an edge:
//!
//! ```text
//! N_G = (1-λ)·N_{G-v} + λ·(1-λ)^{deg v}·N_{G-N[v]}
//! ```
//!
//! with numerators of disjoint unions multiplying and an isolated vertex
//! contributing `1`. Connected pieces are memoized on their canonical key.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::{self, members};
use crate::canon;
use crate::graph::SimpleGraph;
use crate::invariants::independence_number;
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("numerator is not divisible by (1-t)^{codim} (dim {dim}): internal inconsistency")]
    NonzeroRemainder { codim: usize, dim: usize },
    #[error("h-polynomial vanishes at t = 1: internal inconsistency")]
    VanishesAtOne,
    #[error("parameter must be positive, got {0}")]
    NonPositive(usize),
}

/// `numerator(λ) / (1-λ)^pole_order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: IntPolynomial,
    pub pole_order: usize,
}

impl HilbertSeries {
    pub fn new(numerator: IntPolynomial, pole_order: usize) -> Self {
        HilbertSeries { numerator, pole_order }
    }

    /// Cancels common factors of `1-λ`, leaving `numerator(1) != 0` unless the
    /// pole order reaches zero first.
    pub fn reduced(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut pole = self.pole_order;
        while pole > 0 && !num.is_zero() && num.eval_at_one().is_zero() {
            num = num.div_rem_one_minus_lambda().0;
            pole -= 1;
        }
        HilbertSeries { numerator: num, pole_order: pole }
    }

    /// Equality as rational functions.
    pub fn same_series(&self, other: &HilbertSeries) -> bool {
        let k = self.pole_order.max(other.pole_order);
        let a = &self.numerator * &IntPolynomial::one_minus_lambda_pow(k - self.pole_order);
        let b = &other.numerator * &IntPolynomial::one_minus_lambda_pow(k - other.pole_order);
        a == b
    }

    pub fn product(&self, other: &HilbertSeries) -> HilbertSeries {
        HilbertSeries::new(&self.numerator * &other.numerator, self.pole_order + other.pole_order)
    }

    /// Leading coefficients of the power series expansion.
    pub fn expand(&self, terms: usize) -> Vec<BigInt> {
        // multiply by 1/(1-λ) pole_order times: repeated prefix sums
        let mut c: Vec<BigInt> = (0..terms).map(|i| self.numerator.coeff(i)).collect();
        for _ in 0..self.pole_order {
            for i in 1..terms {
                let prev = c[i - 1].clone();
                c[i] += prev;
            }
        }
        c
    }
}

/// Chooses the recursion vertex given the adjacency and the live component
/// mask (a connected set with at least one edge).
pub type PivotFn = dyn Fn(&[u64], u64) -> usize + Send + Sync;

fn max_degree_pivot(adj: &[u64], mask: u64) -> usize {
    members(mask).max_by_key(|&v| (bits::degree_in(adj, mask, v), std::cmp::Reverse(v))).expect("nonempty component")
}

/// Recursion driver with a pivot rule and an optional memo table.
pub struct HilbertEngine {
    pivot: Option<Box<PivotFn>>,
    cache: Option<RwLock<HashMap<Vec<u8>, IntPolynomial>>>,
}

impl Default for HilbertEngine {
    fn default() -> Self {
        HilbertEngine { pivot: None, cache: Some(RwLock::new(HashMap::new())) }
    }
}

impl HilbertEngine {
    pub fn with_pivot(pivot: Box<PivotFn>) -> Self {
        HilbertEngine { pivot: Some(pivot), cache: Some(RwLock::new(HashMap::new())) }
    }

    pub fn without_cache(mut self) -> Self {
        self.cache = None;
        self
    }

    /// Process-wide engine with the max-degree pivot.
    pub fn global() -> &'static HilbertEngine {
        static ENGINE: OnceLock<HilbertEngine> = OnceLock::new();
        ENGINE.get_or_init(HilbertEngine::default)
    }

    pub fn cache_len(&self) -> usize {
        self.cache.as_ref().map_or(0, |c| c.read().unwrap().len())
    }

    fn pick(&self, adj: &[u64], mask: u64) -> usize {
        match &self.pivot {
            Some(f) => {
                let v = f(adj, mask);
                assert!(mask >> v & 1 == 1 && adj[v] & mask != 0, "pivot must lie on an edge");
                v
            }
            None => max_degree_pivot(adj, mask),
        }
    }

    /// Numerator over `(1-λ)^{|mask|}` of the subgraph induced on `mask`.
    pub(crate) fn numerator_masked(&self, adj: &[u64], mask: u64) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for comp in bits::components(adj, mask) {
            if comp.count_ones() == 1 {
                continue;
            }
            acc = &acc * &self.connected_numerator(adj, comp);
        }
        acc
    }

    fn connected_numerator(&self, adj: &[u64], comp: u64) -> IntPolynomial {
        let key = self.cache.as_ref().map(|_| canon::canonical_code_masked(adj, comp));
        if let (Some(cache), Some(key)) = (&self.cache, &key) {
            if let Some(hit) = cache.read().unwrap().get(key) {
                return hit.clone();
            }
        }
        let v = self.pick(adj, comp);
        let closed = adj[v] | 1u64 << v;
        let deg = bits::degree_in(adj, comp, v) as usize;
        let deleted = self.numerator_masked(adj, comp & !(1u64 << v));
        let colon = self.numerator_masked(adj, comp & !closed);
        let result = &(&IntPolynomial::one_minus_lambda() * &deleted) + &(&IntPolynomial::one_minus_lambda_pow(deg) * &colon).shift(1);
        if let (Some(cache), Some(key)) = (&self.cache, key) {
            cache.write().unwrap().insert(key, result.clone());
        }
        result
    }

    /// `H(S/I(g))` written over `(1-λ)^n`, `n = |V(g)|`.
    pub fn k_polynomial(&self, g: &SimpleGraph) -> HilbertSeries {
        let num = self.numerator_masked(g.adjacency(), g.all_vertices().bits());
        HilbertSeries::new(num, g.vertex_count())
    }

    pub fn hilbert_data(&self, g: &SimpleGraph) -> Result<HilbertData, HilbertError> {
        let series = self.k_polynomial(g);
        let dim = independence_number(g).value;
        let codim = g.vertex_count() - dim;
        let h = series.numerator.exact_div_one_minus_lambda_pow(codim).ok_or(HilbertError::NonzeroRemainder { codim, dim })?;
        if h.eval_at_one().is_zero() {
            return Err(HilbertError::VanishesAtOne);
        }
        Ok(HilbertData { series, h_polynomial: h, dim })
    }
}

/// The recursion output together with its reduction by the dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub series: HilbertSeries,
    pub h_polynomial: IntPolynomial,
    pub dim: usize,
}

impl HilbertData {
    pub fn deg_h(&self) -> usize {
        self.h_polynomial.degree().expect("h-polynomial is nonzero")
    }

    pub fn a_invariant(&self) -> i64 {
        self.deg_h() as i64 - self.dim as i64
    }

    pub fn reduced_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.h_polynomial.clone(), self.dim)
    }
}

pub fn k_polynomial(g: &SimpleGraph) -> HilbertSeries {
    HilbertEngine::global().k_polynomial(g)
}

pub fn hilbert_data(g: &SimpleGraph) -> Result<HilbertData, HilbertError> {
    HilbertEngine::global().hilbert_data(g)
}

/// Numerator of the Hilbert series over `(1-λ)^{dim}`.
pub fn h_polynomial(g: &SimpleGraph) -> Result<IntPolynomial, HilbertError> {
    hilbert_data(g).map(|d| d.h_polynomial)
}

/// `deg h - dim`.
pub fn a_invariant(g: &SimpleGraph) -> Result<i64, HilbertError> {
    hilbert_data(g).map(|d| d.a_invariant())
}

/// Closed form for the star with `s` leaves: `(1 + λ(1-λ)^{s-1}) / (1-λ)^s`.
pub fn star_series(s: usize) -> Result<HilbertSeries, HilbertError> {
    if s == 0 {
        return Err(HilbertError::NonPositive(s));
    }
    let num = &IntPolynomial::one() + &IntPolynomial::one_minus_lambda_pow(s - 1).shift(1);
    Ok(HilbertSeries::new(num, s))
}

/// Closed form for `t` triangles sharing a vertex:
/// `((1+λ)^t + λ(1-λ)^{t-1}) / (1-λ)^t`.
pub fn star_triangle_series(t: usize) -> Result<HilbertSeries, HilbertError> {
    if t == 0 {
        return Err(HilbertError::NonPositive(t));
    }
    let num = &IntPolynomial::one_plus_lambda().pow(t) + &IntPolynomial::one_minus_lambda_pow(t - 1).shift(1);
    Ok(HilbertSeries::new(num, t))
}

/// Series of a polynomial ring in `k` variables.
pub fn free_series(k: usize) -> HilbertSeries {
    HilbertSeries::new(IntPolynomial::one(), k)
}

impl HilbertSeries {
    pub fn h0(&self) -> BigInt {
        self.numerator.coeff(0)
    }

    pub fn is_normalized(&self) -> bool {
        self.h0().is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> SimpleGraph {
        SimpleGraph::parse(text).unwrap()
    }

    #[test]
    fn single_edge() {
        let e = g("vertices: a b\nedges: a b");
        let k = k_polynomial(&e);
        assert_eq!(k.numerator, IntPolynomial::from_i64(&[1, 0, -1]));
        assert_eq!(k.pole_order, 2);
        // Hilbert function 1, 2, 2, 2, ...
        let expected: Vec<BigInt> = [1, 2, 2, 2, 2].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(k.expand(5), expected);
        assert_eq!(h_polynomial(&e).unwrap(), IntPolynomial::from_i64(&[1, 1]));
    }

    #[test]
    fn p4_and_c5_h_polynomials() {
        let p4 = SimpleGraph::path(4, "x");
        assert_eq!(h_polynomial(&p4).unwrap(), IntPolynomial::from_i64(&[1, 2]));
        assert_eq!(a_invariant(&p4).unwrap(), -1);
        let c5 = g("vertices: a b c d e\nedges: a b b c c d d e e a");
        assert_eq!(h_polynomial(&c5).unwrap(), IntPolynomial::from_i64(&[1, 3, 1]));
    }

    #[test]
    fn edgeless_graph_is_free() {
        let e = g("vertices: a b c\nedges:");
        let d = hilbert_data(&e).unwrap();
        assert_eq!(d.h_polynomial, IntPolynomial::one());
        assert_eq!(d.dim, 3);
        assert_eq!(d.a_invariant(), -3);
        let empty = g("");
        assert_eq!(hilbert_data(&empty).unwrap().dim, 0);
    }

    #[test]
    fn closed_forms_small_cases() {
        assert_eq!(star_series(1).unwrap(), HilbertSeries::new(IntPolynomial::from_i64(&[1, 1]), 1));
        assert_eq!(star_triangle_series(1).unwrap(), HilbertSeries::new(IntPolynomial::from_i64(&[1, 2]), 1));
        assert_eq!(star_triangle_series(2).unwrap(), HilbertSeries::new(IntPolynomial::from_i64(&[1, 3]), 2));
        assert_eq!(star_series(0), Err(HilbertError::NonPositive(0)));
        assert_eq!(star_triangle_series(0), Err(HilbertError::NonPositive(0)));
    }

    #[test]
    fn triangle_hilbert_function() {
        // K3: 1, 3, 3, 3, ...
        let k3 = g("vertices: a b c\nedges: a b b c a c");
        let expected: Vec<BigInt> = [1, 3, 3, 3].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(k_polynomial(&k3).expand(4), expected);
        assert!(k_polynomial(&k3).same_series(&star_triangle_series(1).unwrap()));
    }

    #[test]
    fn uncached_engine_agrees() {
        let c7 = {
            let labels = (1..=7).map(|i| format!("x{i}")).collect();
            let edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
            SimpleGraph::from_index_edges(labels, &edges)
        };
        let plain = HilbertEngine::default().without_cache();
        assert_eq!(plain.k_polynomial(&c7), k_polynomial(&c7));
    }

    #[test]
    fn reduced_cancels_common_factors() {
        let s = HilbertSeries::new(IntPolynomial::from_i64(&[1, 0, -1]), 2).reduced();
        assert_eq!(s, HilbertSeries::new(IntPolynomial::from_i64(&[1, 1]), 1));
    }
}
