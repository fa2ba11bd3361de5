//! Stars, star triangles, paths, cycles and the trees `G_s`, with the closed
//! formulas known for their invariants.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs parameter >= {min}, got {got}")]
    BelowMinimum { family: &'static str, min: usize, got: usize },
    #[error("unrecognized family spec `{0}` (expected path:N, cycle:N, star:S, startriangle:T or gs:S)")]
    Unrecognized(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Star(usize),
    StarTriangle(usize),
    Path(usize),
    Cycle(usize),
    Gs(usize),
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Star(_) => "star",
            Family::StarTriangle(_) => "startriangle",
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Gs(_) => "gs",
        }
    }

    pub fn parameter(self) -> usize {
        match self {
            Family::Star(k) | Family::StarTriangle(k) | Family::Path(k) | Family::Cycle(k) | Family::Gs(k) => k,
        }
    }

    fn minimum(self) -> usize {
        match self {
            Family::Path(_) => 2,
            Family::Cycle(_) => 3,
            _ => 1,
        }
    }

    pub fn check(self) -> Result<Family, FamilyError> {
        if self.parameter() < self.minimum() {
            return Err(FamilyError::BelowMinimum { family: self.name(), min: self.minimum(), got: self.parameter() });
        }
        Ok(self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.name(), self.parameter())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::Unrecognized(s.to_string());
        let (name, param) = s.trim().split_once(':').ok_or_else(bad)?;
        let k: usize = param.trim().parse().map_err(|_| bad())?;
        let fam = match name.trim().to_ascii_lowercase().as_str() {
            "star" => Family::Star(k),
            "startriangle" | "star_triangle" => Family::StarTriangle(k),
            "path" => Family::Path(k),
            "cycle" => Family::Cycle(k),
            "gs" | "g_s" => Family::Gs(k),
            _ => return Err(bad()),
        };
        fam.check()
    }
}

pub fn family_graph(kind: Family) -> Result<SimpleGraph, FamilyError> {
    let kind = kind.check()?;
    let xs = |n: usize| (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>();
    let g = match kind {
        Family::Path(n) => SimpleGraph::path(n, "x"),
        Family::Cycle(n) => {
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            SimpleGraph::from_index_edges(xs(n), &edges)
        }
        Family::Star(s) => {
            let mut labels = vec!["xv".to_string()];
            labels.extend(xs(s));
            let edges: Vec<(usize, usize)> = (1..=s).map(|i| (0, i)).collect();
            SimpleGraph::from_index_edges(labels, &edges)
        }
        Family::StarTriangle(t) => {
            let mut labels = vec!["xv".to_string()];
            labels.extend(xs(2 * t));
            let mut edges = Vec::new();
            for k in 0..t {
                let (a, b) = (2 * k + 1, 2 * k + 2);
                edges.extend([(0, a), (0, b), (a, b)]);
            }
            SimpleGraph::from_index_edges(labels, &edges)
        }
        Family::Gs(s) => {
            // x_{s+3} is the center; indices below are 0-based
            let c = s + 2;
            let mut edges: Vec<(usize, usize)> = (0..s).map(|i| (i, c)).collect();
            edges.extend([(s, s + 1), (s + 1, c), (c, s + 3)]);
            SimpleGraph::from_index_edges(xs(s + 4), &edges)
        }
    };
    Ok(g)
}

/// A predicted value, or an explicit statement that no closed form is claimed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicted<T> {
    Value(T),
    NotPredicted,
}

impl<T: Copy> Predicted<T> {
    pub fn value(self) -> Option<T> {
        match self {
            Predicted::Value(v) => Some(v),
            Predicted::NotPredicted => None,
        }
    }
}

impl<T: Serialize> Serialize for Predicted<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Predicted::Value(v) => v.serialize(s),
            Predicted::NotPredicted => s.serialize_str("not predicted"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyPrediction {
    pub family: String,
    pub dim: Predicted<usize>,
    pub depth: Predicted<usize>,
    pub reg: Predicted<usize>,
    pub projdim: Predicted<usize>,
    pub deg_h: Predicted<usize>,
    pub star_equality: Predicted<bool>,
    /// `deg h < dim` is claimed even where `deg h` itself is not.
    pub deg_h_below_dim: Predicted<bool>,
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

pub fn family_predictions(kind: Family) -> Result<FamilyPrediction, FamilyError> {
    use Predicted::{NotPredicted, Value};
    let kind = kind.check()?;
    let mut p = FamilyPrediction {
        family: kind.to_string(),
        dim: NotPredicted,
        depth: NotPredicted,
        reg: NotPredicted,
        projdim: NotPredicted,
        deg_h: NotPredicted,
        star_equality: NotPredicted,
        deg_h_below_dim: NotPredicted,
    };
    match kind {
        Family::Path(n) => {
            let depth = ceil_div(n, 3);
            p.dim = Value(ceil_div(n, 2));
            p.depth = Value(depth);
            p.reg = Value(ceil_div(n - 1, 3));
            p.projdim = Value(n - depth);
            p.deg_h = Value(if n % 3 == 1 { ceil_div(n, 2) - 1 } else { ceil_div(n, 2) });
            p.star_equality = Value(true);
        }
        Family::Cycle(n) => {
            let depth = ceil_div(n - 1, 3);
            let l = n / 3;
            p.dim = Value(ceil_div(n - 1, 2));
            p.depth = Value(depth);
            p.reg = Value(if n % 3 == 2 { l + 1 } else { l });
            p.projdim = Value(n - depth);
            p.deg_h = match n % 3 {
                1 => Value(ceil_div(3 * l, 2)),
                2 => Value(ceil_div(3 * l + 1, 2)),
                _ => NotPredicted,
            };
            p.star_equality = Value(true);
        }
        Family::Star(s) => {
            p.dim = Value(s);
            p.depth = Value(1);
            p.reg = Value(1);
            p.projdim = Value(s);
            p.deg_h = Value(s);
            p.star_equality = Value(true);
        }
        Family::StarTriangle(t) => {
            p.dim = Value(t);
            p.deg_h = Value(if t % 2 == 0 { t - 1 } else { t });
        }
        Family::Gs(s) => {
            p.dim = Value(s + 2);
            p.depth = Value(2);
            p.reg = Value(1);
            p.projdim = Value(s + 2);
            p.star_equality = Value(true);
            p.deg_h_below_dim = Value(true);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!("path:7".parse::<Family>(), Ok(Family::Path(7)));
        assert_eq!("startriangle:2".parse::<Family>(), Ok(Family::StarTriangle(2)));
        assert_eq!("gs:3".parse::<Family>(), Ok(Family::Gs(3)));
        assert!(matches!("cycle:2".parse::<Family>(), Err(FamilyError::BelowMinimum { .. })));
        assert!(matches!("wheel:5".parse::<Family>(), Err(FamilyError::Unrecognized(_))));
        assert!(matches!("path".parse::<Family>(), Err(FamilyError::Unrecognized(_))));
    }

    #[test]
    fn small_graphs() {
        let p2 = family_graph(Family::Path(2)).unwrap();
        assert_eq!(p2.edge_count(), 1);
        let c3 = family_graph(Family::Cycle(3)).unwrap();
        let t1 = family_graph(Family::StarTriangle(1)).unwrap();
        assert_eq!(c3.canonical_key(), t1.canonical_key());
        let g1 = family_graph(Family::Gs(1)).unwrap();
        assert_eq!(
            g1.edge_labels(),
            vec![
                ("x1".to_string(), "x4".to_string()),
                ("x2".to_string(), "x3".to_string()),
                ("x3".to_string(), "x4".to_string()),
                ("x4".to_string(), "x5".to_string()),
            ]
        );
        assert!(g1.is_forest());
        assert_eq!(family_graph(Family::Star(3)).unwrap().degree(0), 3);
    }

    #[test]
    fn prediction_examples() {
        let p = family_predictions(Family::Path(7)).unwrap();
        assert_eq!((p.depth, p.reg, p.dim, p.deg_h), (Predicted::Value(3), Predicted::Value(2), Predicted::Value(4), Predicted::Value(3)));
        let c = family_predictions(Family::Cycle(5)).unwrap();
        assert_eq!((c.depth, c.reg, c.dim, c.deg_h), (Predicted::Value(2), Predicted::Value(2), Predicted::Value(2), Predicted::Value(2)));
        assert_eq!(family_predictions(Family::Cycle(6)).unwrap().deg_h, Predicted::NotPredicted);
        let g = family_predictions(Family::Gs(3)).unwrap();
        assert_eq!(
            (g.reg, g.projdim, g.depth, g.dim),
            (Predicted::Value(1), Predicted::Value(5), Predicted::Value(2), Predicted::Value(5))
        );
        assert_eq!(g.deg_h, Predicted::NotPredicted);
        assert_eq!(serde_json::to_value(g.deg_h).unwrap(), serde_json::json!("not predicted"));
    }
}
