//! Reading graphs from the command line and assembling the invariants report.

use std::path::Path;

use eil_core::cameron_walker::{build_cw, build_cw_star_convention, cw_invariants, recognize_cw, CwSpec, Recognition};
use eil_core::families::{family_graph, family_predictions, Family};
use eil_core::hilbert::hilbert_data;
use eil_core::invariants::{independence_domination, induced_matching_number, matching_number};
use eil_core::resolution::{betti_table_with, report_from_table, BettiOptions, BettiTable, ResolutionError};
use eil_core::{Field, SimpleGraph};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Graph(SimpleGraph),
    Family(Family),
    Cw(CwSpec),
}

impl Input {
    pub fn graph(&self) -> Result<SimpleGraph, InputError> {
        match self {
            Input::Graph(g) => Ok(g.clone()),
            Input::Family(f) => family_graph(*f).map_err(|e| InputError::Parse(e.to_string())),
            Input::Cw(spec) => build_cw(spec).or_else(|_| build_cw_star_convention(spec)).map_err(|e| InputError::Parse(e.to_string())),
        }
    }
}

const FAMILY_NAMES: &[&str] = &["path", "cycle", "star", "startriangle", "star_triangle", "gs", "g_s"];

/// A family spec (`path:7`), a file holding graph text, graph JSON or a
/// Cameron–Walker spec in JSON, or any of those given inline.
pub fn parse_input(arg: &str) -> Result<Input, InputError> {
    if let Ok(f) = arg.parse::<Family>() {
        return Ok(Input::Family(f));
    }
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|source| InputError::Io { path: arg.to_string(), source })?
    } else if arg.split_once(':').is_some_and(|(name, _)| FAMILY_NAMES.contains(&name.trim())) {
        // a family spec that failed to parse
        return arg.parse::<Family>().map(Input::Family).map_err(|e| InputError::Parse(e.to_string()));
    } else {
        arg.to_string()
    };
    parse_text(&text)
}

fn parse_text(text: &str) -> Result<Input, InputError> {
    if !text.trim_start().starts_with('{') {
        return SimpleGraph::parse(text).map(Input::Graph).map_err(|e| InputError::Parse(e.to_string()));
    }
    let value: Value = serde_json::from_str(text).map_err(|e| InputError::Parse(format!("invalid json: {e}")))?;
    if value.get("m").is_some() {
        let spec = CwSpec::from_json(text).map_err(|e| InputError::Parse(format!("invalid Cameron-Walker spec: {e}")))?;
        spec.validate(true).map_err(|e| InputError::Parse(e.to_string()))?;
        return Ok(Input::Cw(spec));
    }
    serde_json::from_value::<SimpleGraph>(value).map(Input::Graph).map_err(|e| InputError::Parse(e.to_string()))
}

#[derive(Debug, Clone, Copy)]
pub struct InvariantsOptions {
    pub field: Field,
    pub cutoff: usize,
}

/// The report, and whether the Betti part was skipped because of the cutoff.
pub struct InvariantsOutput {
    pub report: Map<String, Value>,
    pub betti: Option<BettiTable>,
    pub cutoff_hit: bool,
}

pub fn invariants_report(input: &Input, opts: InvariantsOptions) -> Result<InvariantsOutput, InputError> {
    let g = input.graph()?;
    let mut out = Map::new();
    let mut put = |k: &str, v: Value| {
        out.insert(k.to_string(), v);
    };
    put("graph", json!(g.to_json()));
    put("vertices", json!(g.vertex_count()));
    put("edges", json!(g.edge_count()));
    put("field", json!(opts.field.to_string()));

    let h = hilbert_data(&g).map_err(|e| InputError::Parse(e.to_string()))?;
    put("dim", json!(h.dim));
    put("deg_h", json!(h.deg_h()));
    put("a_invariant", json!(h.a_invariant()));
    put("h_polynomial", json!(h.h_polynomial));
    put("hilbert_series", json!(h.series));

    let mm = matching_number(&g);
    let im = induced_matching_number(&g);
    let dom = independence_domination(&g);
    put("matching_number", json!({"value": mm.value, "witness": mm.witness_labels(&g)}));
    put("induced_matching_number", json!({"value": im.value, "witness": im.witness_labels(&g)}));
    put("independence_domination", json!({"value": dom.value, "witness": dom.witness_labels(&g)}));

    let recognition = recognize_cw(&g, false);
    let spec = match (&recognition, input) {
        (_, Input::Cw(spec)) => Some(spec.clone()),
        (Recognition::CameronWalker { spec, .. }, _) => Some(spec.clone()),
        _ => None,
    };
    put("cw_recognition", recognition_json(&recognition));
    if let Some(spec) = &spec {
        let closed = cw_invariants(spec);
        put("cohen_macaulay", json!(closed.flags.cohen_macaulay));
        put("cw", json!({"spec": spec, "closed_form": closed}));
    }
    if let Input::Family(f) = input {
        put("family_prediction", json!(family_predictions(*f).expect("family parsed")));
    }

    let betti_opts = BettiOptions { cutoff: opts.cutoff, ..BettiOptions::default() };
    let (betti, cutoff_hit) = match betti_table_with(&g, opts.field, betti_opts) {
        Ok(table) => {
            let rep = report_from_table(&g, &table).map_err(|e| InputError::Parse(e.to_string()))?;
            put("projdim", json!(rep.projdim));
            put("depth", json!(rep.depth));
            put("reg", json!(rep.reg));
            put("star_equality", json!(rep.star_equality));
            put("extremal_betti_positions", json!(rep.extremal_betti_positions));
            put("unique_extremal", json!(rep.unique_extremal));
            put("betti_table", json!(table));
            (Some(table), false)
        }
        Err(ResolutionError::CutoffExceeded { n, cutoff }) => {
            put(
                "betti",
                json!({
                    "skipped": "cutoff",
                    "vertices": n,
                    "cutoff": cutoff,
                    "note": "projdim, depth, reg, star_equality and extremal Betti positions need the Betti table; raise --cutoff or EIL_CUTOFF to compute them",
                }),
            );
            (None, true)
        }
        Err(e) => return Err(InputError::Parse(e.to_string())),
    };
    Ok(InvariantsOutput { report: out, betti, cutoff_hit })
}

fn recognition_json(r: &Recognition) -> Value {
    match r {
        Recognition::CameronWalker { spec, .. } => json!({"kind": "cameron_walker", "spec": spec}),
        other => json!(other),
    }
}

/// Aligned `key: value` lines, with the Betti table drawn at the end.
pub fn render_table(out: &InvariantsOutput) -> String {
    let width = out.report.keys().map(String::len).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in &out.report {
        if k == "betti_table" || k == "graph" {
            continue;
        }
        let shown = match v {
            Value::String(x) => x.clone(),
            other => other.to_string(),
        };
        s.push_str(&format!("{k:>width$}: {shown}\n"));
    }
    if let Some(t) = &out.betti {
        s.push_str("\nbetti table:\n");
        s.push_str(&t.render());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> InvariantsOptions {
        InvariantsOptions { field: Field::Rationals, cutoff: 18 }
    }

    #[test]
    fn path4_report() {
        let out = invariants_report(&parse_input("path:4").unwrap(), opts()).unwrap();
        let r = &out.report;
        assert_eq!(r["dim"], json!(2));
        assert_eq!(r["depth"], json!(2));
        assert_eq!(r["reg"], json!(1));
        assert_eq!(r["deg_h"], json!(1));
        assert_eq!(r["a_invariant"], json!(-1));
        assert_eq!(r["star_equality"], json!(true));
        assert!(!out.cutoff_hit);
    }

    #[test]
    fn cw_spec_report() {
        let input = parse_input(r#"{"m":1,"n":1,"s":[1],"t":[1],"bip":[[1,1]]}"#).unwrap();
        let out = invariants_report(&input, opts()).unwrap();
        let r = &out.report;
        assert_eq!((r["dim"].clone(), r["deg_h"].clone(), r["reg"].clone(), r["depth"].clone()), (json!(2), json!(2), json!(2), json!(2)));
        assert_eq!(r["a_invariant"], json!(0));
        assert_eq!(r["star_equality"], json!(true));
        assert_eq!(r["cohen_macaulay"], json!(true));
    }

    #[test]
    fn cutoff_replaces_betti_fields() {
        let out = invariants_report(&parse_input("path:25").unwrap(), opts()).unwrap();
        assert!(out.cutoff_hit);
        assert_eq!(out.report["betti"]["skipped"], json!("cutoff"));
        assert!(!out.report.contains_key("depth"));
        assert_eq!(out.report["dim"], json!(13));
    }

    #[test]
    fn inline_graph_text_and_errors() {
        let g = parse_input("vertices: a b c\nedges: a b b c").unwrap();
        assert!(matches!(g, Input::Graph(_)));
        assert!(parse_input("cycle:2").is_err());
        assert!(parse_input("vertices: a\nedges: a b").is_err());
    }
}
