//! One harness per claim: enumerate a corpus, compute, compare, report.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

use eil_core::cameron_walker::{
    build_cw, classify_special, construct_de, construct_dre, cw_corpus, cw_invariants, example_spec, theorem_main_check,
    theorem_main_check_exhaustive, CorpusLimits, CwSpec,
};
use eil_core::families::{family_graph, family_predictions, Family, Predicted};
use eil_core::hilbert::{hilbert_data, k_polynomial, star_series, star_triangle_series};
use eil_core::invariants::{independence_domination, independence_number, induced_matching_number, InvariantKind};
use eil_core::resolution::{betti_table_with, report_from_table, star_packing_witness, BettiOptions, BettiTable, HomologicalReport};
use eil_core::{Field, GraphJson, IntPolynomial, SimpleGraph};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::corpus::trees_up_to;

pub const THEOREM_IDS: &[&str] = &[
    "thm-1.1",
    "prop-1.3",
    "lem-1.6",
    "lem-1.7",
    "lem-2.1",
    "thm-2.2",
    "cor-2.4",
    "cor-2.6",
    "prop-2.8",
    "cor-2.9",
    "prop-2.11",
    "thm-3.1",
    "thm-3.4",
    "lem-2.10-forest",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem id `{0}`; known ids: {ids}", ids = THEOREM_IDS.join(", "))]
    UnknownTheorem(String),
    #[error("range key `{key}` does not apply to {id}; accepted keys: {accepted}")]
    UnknownRange { id: String, key: String, accepted: String },
    #[error("requested range needs Betti tables on {needed} vertices, above the cutoff {cutoff}")]
    Cutoff { needed: usize, cutoff: usize },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub field: Field,
    pub cutoff: usize,
    pub jobs: Option<usize>,
    pub ranges: BTreeMap<String, usize>,
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: Field::Rationals,
            cutoff: eil_core::resolution::DEFAULT_CUTOFF,
            jobs: None,
            ranges: BTreeMap::new(),
            timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph: GraphJson,
    pub identity: String,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceResult {
    pub index: usize,
    pub instance: String,
    pub pass: bool,
    pub values: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusDescription {
    pub description: String,
    pub parameters: BTreeMap<String, usize>,
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub all_pass: bool,
    pub instances: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub artifact_version: String,
    pub field: String,
    pub corpus: CorpusDescription,
    pub results: Vec<InstanceResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.summary.all_pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.results.iter().filter(|r| !r.pass)
    }
}

/// Accumulates computed values and the first violated identity.
struct Check {
    values: Map<String, Value>,
    failure: Option<(String, Value, Value)>,
}

impl Check {
    fn new() -> Self {
        Check { values: Map::new(), failure: None }
    }

    fn value(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.to_string(), json!(v));
    }

    fn fail(&mut self, identity: &str, lhs: Value, rhs: Value) {
        if self.failure.is_none() {
            self.failure = Some((identity.to_string(), lhs, rhs));
        }
    }

    fn eq<T: Serialize + PartialEq>(&mut self, identity: &str, lhs: T, rhs: T) -> bool {
        let ok = lhs == rhs;
        if !ok {
            self.fail(identity, json!(lhs), json!(rhs));
        }
        ok
    }

    fn holds(&mut self, identity: &str, ok: bool, lhs: impl Serialize, rhs: impl Serialize) -> bool {
        if !ok {
            self.fail(identity, json!(lhs), json!(rhs));
        }
        ok
    }

    fn finish(self, index: usize, instance: String, g: &SimpleGraph) -> InstanceResult {
        let counterexample = self.failure.map(|(identity, lhs, rhs)| Counterexample { graph: g.to_json(), identity, lhs, rhs });
        InstanceResult { index, instance, pass: counterexample.is_none(), values: self.values, counterexample }
    }
}

type ReportCache = Mutex<HashMap<(Vec<u8>, Field), (BettiTable, Result<HomologicalReport, String>)>>;

fn report_cache() -> &'static ReportCache {
    static CACHE: OnceLock<ReportCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Betti table and homological report of `g`, memoized per isomorphism class.
/// Tables are relabeled-invariant, so reuse across isomorphic inputs is exact.
fn homological(g: &SimpleGraph, field: Field, cutoff: usize) -> (BettiTable, Result<HomologicalReport, String>) {
    let key = (g.canonical_key().0, field);
    if let Some(hit) = report_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let opts = BettiOptions { cutoff, ..BettiOptions::default() };
    let table = betti_table_with(g, field, opts).expect("cutoff checked before the run");
    let report = report_from_table(g, &table).map_err(|e| e.to_string());
    report_cache().lock().unwrap().insert(key, (table.clone(), report.clone()));
    (table, report)
}

struct Ranges<'a> {
    id: &'a str,
    given: &'a BTreeMap<String, usize>,
    used: BTreeMap<String, usize>,
}

impl<'a> Ranges<'a> {
    fn get(&mut self, key: &str, default: usize) -> usize {
        let v = self.given.get(key).copied().unwrap_or(default);
        self.used.insert(key.to_string(), v);
        v
    }

    fn check(&self) -> Result<(), VerifyError> {
        let accepted = accepted_ranges(self.id);
        match self.given.keys().find(|k| !accepted.contains(&k.as_str())) {
            Some(k) => Err(VerifyError::UnknownRange { id: self.id.to_string(), key: k.clone(), accepted: accepted.join(", ") }),
            None => Ok(()),
        }
    }
}

const CORPUS_KEYS: &[&str] = &["max_m", "max_n", "max_s", "max_t", "max_vertices"];

/// Range keys each harness understands.
pub fn accepted_ranges(id: &str) -> &'static [&'static str] {
    match id {
        "lem-1.6" => &["max_s"],
        "lem-1.7" => &["max_t"],
        "cor-2.9" => &["max_d"],
        "prop-2.11" => &["max_path", "max_cycle", "max_star", "max_gs"],
        "thm-3.4" => &["max_d", "max_m", "max_n", "max_s", "max_t", "max_vertices"],
        "lem-2.10-forest" => &["max_vertices", "max_reg_vertices"],
        _ => CORPUS_KEYS,
    }
}

fn corpus_limits(r: &mut Ranges, max_vertices: usize) -> CorpusLimits {
    let d = CorpusLimits::default();
    CorpusLimits {
        max_m: r.get("max_m", d.max_m),
        max_n: r.get("max_n", d.max_n),
        max_s: r.get("max_s", d.max_s),
        max_t: r.get("max_t", d.max_t),
        max_vertices: r.get("max_vertices", max_vertices),
    }
}

fn require_cutoff(needed: usize, cutoff: usize) -> Result<(), VerifyError> {
    if needed > cutoff {
        return Err(VerifyError::Cutoff { needed, cutoff });
    }
    Ok(())
}

fn spec_name(spec: &CwSpec) -> String {
    let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let bip: Vec<String> = spec.bip.iter().map(|(i, j)| format!("{i}-{j}")).collect();
    format!("m={} n={} s=({}) t=({}) bip={}", spec.m, spec.n, list(&spec.s), list(&spec.t), bip.join(","))
}

fn run_indexed<T: Sync>(items: &[T], f: impl Fn(usize, &T) -> InstanceResult + Sync) -> Vec<InstanceResult> {
    items.par_iter().enumerate().map(|(i, x)| f(i, x)).collect()
}

/// Runs the harness for `id`.
pub fn run_verify(id: &str, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    if !THEOREM_IDS.contains(&id) {
        return Err(VerifyError::UnknownTheorem(id.to_string()));
    }
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = opts.jobs {
            b = b.num_threads(j.max(1));
        }
        b.build().map_err(|e| VerifyError::Pool(e.to_string()))?
    };
    let start = Instant::now();
    let mut ranges = Ranges { id, given: &opts.ranges, used: BTreeMap::new() };
    ranges.check()?;
    let (description, results) = pool.install(|| dispatch(id, opts, &mut ranges))?;
    let parameters = ranges.used;
    let failures = results.iter().filter(|r| !r.pass).count();
    Ok(VerificationReport {
        theorem: id.to_string(),
        artifact_version: env!("CARGO_PKG_VERSION").to_string(),
        field: opts.field.to_string(),
        corpus: CorpusDescription { description, parameters, instances: results.len() },
        summary: Summary {
            all_pass: failures == 0,
            instances: results.len(),
            failures,
            wall_time_ms: opts.timing.then(|| start.elapsed().as_millis()),
        },
        results,
    })
}

type Outcome = Result<(String, Vec<InstanceResult>), VerifyError>;

fn dispatch(id: &str, opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    match id {
        "thm-1.1" => a_invariant_zero(r),
        "prop-1.3" => dim_equals_deg_h(r),
        "lem-1.6" => star_series_check(r),
        "lem-1.7" => star_triangle_series_check(r),
        "lem-2.1" => domination_bounds(opts, r),
        "thm-2.2" => main_biconditional(opts, r),
        "cor-2.4" => small_triangles(opts, r),
        "cor-2.6" => complete_bipartite(opts, r),
        "prop-2.8" => depth_two(opts, r),
        "cor-2.9" => realize_de(opts, r),
        "prop-2.11" => other_families(opts, r),
        "thm-3.1" => deg_h_vs_reg(opts, r),
        "thm-3.4" => realize_dre(opts, r),
        "lem-2.10-forest" => forests(opts, r),
        _ => unreachable!("id checked above"),
    }
}

fn corpus_description(limits: &CorpusLimits, what: &str) -> String {
    format!(
        "Cameron-Walker specs with m <= {}, n <= {}, s_i <= {}, t_j <= {}, at most {} vertices, one per isomorphism class; {what}",
        limits.max_m, limits.max_n, limits.max_s, limits.max_t, limits.max_vertices
    )
}

fn a_invariant_zero(r: &mut Ranges) -> Outcome {
    let limits = corpus_limits(r, 16);
    let corpus = cw_corpus(limits);
    let results = run_indexed(&corpus, |i, spec| {
        let g = build_cw(spec).expect("corpus spec is valid");
        let mut c = Check::new();
        match hilbert_data(&g) {
            Ok(h) => {
                c.value("a_invariant", h.a_invariant());
                c.eq("a-invariant = 0", h.a_invariant(), 0);
            }
            Err(e) => c.fail("hilbert series", json!(e.to_string()), json!(null)),
        }
        c.finish(i, spec_name(spec), &g)
    });
    Ok((corpus_description(&limits, "a-invariant of S/I(G) vanishes"), results))
}

fn dim_equals_deg_h(r: &mut Ranges) -> Outcome {
    let limits = corpus_limits(r, 16);
    let corpus = cw_corpus(limits);
    let results = run_indexed(&corpus, |i, spec| {
        let g = build_cw(spec).expect("corpus spec is valid");
        let closed = cw_invariants(spec).dim_and_deg_h;
        let mut c = Check::new();
        c.value("closed_form", closed);
        match hilbert_data(&g) {
            Ok(h) => {
                c.value("dim", h.dim);
                c.value("deg_h", h.deg_h());
                c.eq("deg h = dim", h.deg_h(), h.dim);
                c.eq("dim = sum s_i + sum max(t_j, 1)", h.dim, closed);
                let alpha = independence_number(&g);
                c.eq("dim = independence number", h.dim, alpha.value);
                c.holds("independence witness certifies", alpha.certifies(&g, InvariantKind::Independence), true, true);
            }
            Err(e) => c.fail("hilbert series", json!(e.to_string()), json!(null)),
        }
        c.finish(i, spec_name(spec), &g)
    });
    Ok((corpus_description(&limits, "deg h = dim = closed form"), results))
}

fn star_series_check(r: &mut Ranges) -> Outcome {
    let max_s = r.get("max_s", 8);
    let params: Vec<usize> = (1..=max_s).collect();
    let results = run_indexed(&params, |i, &s| {
        let g = family_graph(Family::Star(s)).expect("s >= 1");
        let mut c = Check::new();
        let rec = k_polynomial(&g);
        let closed = star_series(s).expect("s >= 1");
        c.value("recursion_numerator", &rec.numerator);
        c.value("closed_numerator", &closed.numerator);
        c.holds("recursive series = closed form", rec.same_series(&closed), &rec, &closed);
        let h = hilbert_data(&g).expect("hilbert data");
        c.value("dim", h.dim);
        c.value("deg_h", h.deg_h());
        c.eq("deg h = s", h.deg_h(), s);
        c.eq("dim = s", h.dim, s);
        c.finish(i, format!("star:{s}"), &g)
    });
    Ok((format!("stars with 1 <= s <= {max_s}"), results))
}

fn star_triangle_series_check(r: &mut Ranges) -> Outcome {
    let max_t = r.get("max_t", 8);
    let params: Vec<usize> = (1..=max_t).collect();
    let results = run_indexed(&params, |i, &t| {
        let g = family_graph(Family::StarTriangle(t)).expect("t >= 1");
        let mut c = Check::new();
        let rec = k_polynomial(&g);
        let closed = star_triangle_series(t).expect("t >= 1");
        c.value("recursion_numerator", &rec.numerator);
        c.value("closed_numerator", &closed.numerator);
        c.holds("recursive series = closed form", rec.same_series(&closed), &rec, &closed);
        let h = hilbert_data(&g).expect("hilbert data");
        let parity = if t % 2 == 1 { t } else { t - 1 };
        c.value("dim", h.dim);
        c.value("deg_h", h.deg_h());
        c.eq("deg h = t (odd) or t - 1 (even)", h.deg_h(), parity);
        c.eq("dim = t", h.dim, t);
        let p = family_predictions(Family::StarTriangle(t)).expect("t >= 1");
        c.eq("prediction record deg h", p.deg_h.value(), Some(h.deg_h()));
        c.finish(i, format!("startriangle:{t}"), &g)
    });
    Ok((format!("star triangles with 1 <= t <= {max_t}"), results))
}

fn domination_bounds(opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    let limits = corpus_limits(r, 16);
    let corpus = cw_corpus(limits);
    let results = run_indexed(&corpus, |i, spec| {
        let g = build_cw(spec).expect("corpus spec is valid");
        let rep = cw_invariants(spec);
        let dom = independence_domination(&g);
        let mut c = Check::new();
        c.value("i", dom.value);
        c.value("lower", rep.i_lower);
        c.value("upper", rep.i_upper);
        c.value("witness", dom.witness_labels(&g));
        c.holds("independent dominating witness", dom.certifies(&g, InvariantKind::IndependenceDomination), true, true);
        c.holds("m + #{t_j > 0} <= i(G)", rep.i_lower <= dom.value, rep.i_lower, dom.value);
        c.holds("i(G) <= min(sum s + n, sum t + m)", dom.value <= rep.i_upper, dom.value, rep.i_upper);
        if spec.is_complete_bipartite() {
            c.eq("complete bipartite part: i(G) = min(...)", dom.value, rep.i_upper);
        }
        if g.vertex_count() <= opts.cutoff {
            let (_, report) = homological(&g, opts.field, opts.cutoff);
            match report {
                Ok(h) => {
                    c.value("depth", h.depth);
                    c.eq("depth = i(G)", h.depth, dom.value);
                }
                Err(e) => c.fail("homological report", json!(e), json!(null)),
            }
        }
        c.finish(i, spec_name(spec), &g)
    });
    Ok((corpus_description(&limits, "bounds on i(G) and depth = i(G)"), results))
}

/// Evaluates the subset inequality both ways and compares with the two
/// homological readings of (*).
fn main_instance(c: &mut Check, spec: &CwSpec, g: &SimpleGraph, opts: &VerifyOptions) {
    let check = theorem_main_check(spec);
    let full = theorem_main_check_exhaustive(spec);
    c.value("inequality_holds", check.holds);
    c.value("failing_v", &check.failing_v);
    c.eq("restricted subsets agree with all subsets", &check.failing_v, &full.failing_v);
    if g.vertex_count() > opts.cutoff {
        c.value("betti", json!({"skipped": "cutoff"}));
        return;
    }
    let (table, report) = homological(g, opts.field, opts.cutoff);
    let p = table.projdim();
    let reg = table.regularity();
    let betti_nonzero = table.get(p, p + reg) != 0;
    c.value("beta_p_p_plus_r_nonzero", betti_nonzero);
    match report {
        Ok(h) => {
            c.value("s_minus_r", h.lhs());
            c.value("d_minus_e", h.rhs());
            c.eq("inequality holds iff beta_(p,p+r) != 0", check.holds, betti_nonzero);
            c.eq("beta_(p,p+r) != 0 iff s - r = d - e", betti_nonzero, h.lhs() == h.rhs());
        }
        Err(e) => c.fail("homological report", json!(e), json!(null)),
    }
}

fn main_biconditional(opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    let limits = corpus_limits(r, 14);
    require_cutoff(limits.max_vertices, opts.cutoff)?;
    let corpus = cw_corpus(limits);
    let mut results = run_indexed(&corpus, |i, spec| {
        let g = build_cw(spec).expect("corpus spec is valid");
        let mut c = Check::new();
        main_instance(&mut c, spec, &g, opts);
        c.finish(i, spec_name(spec), &g)
    });
    // the running example: 24 vertices, failing at {v_2}
    let spec = example_spec();
    let g = build_cw(&spec).expect("valid");
    let mut c = Check::new();
    main_instance(&mut c, &spec, &g, opts);
    let check = theorem_main_check(&spec);
    c.eq("example fails at V = {v2}", check.failing_v.clone(), Some(vec![2]));
    c.eq("example sides at V = {v2}", (check.lhs, check.rhs), (Some(2), Some(3)));
    results.push(c.finish(results.len(), format!("example {}", spec_name(&spec)), &g));
    Ok((corpus_description(&limits, "subset inequality iff (*), plus the 24-vertex example"), results))
}

fn filtered_star_equality(
    opts: &VerifyOptions,
    r: &mut Ranges,
    what: &str,
    keep: impl Fn(&CwSpec) -> bool + Sync,
    expected: impl Fn(&CwSpec) -> bool + Sync,
) -> Outcome {
    let limits = corpus_limits(r, 14);
    require_cutoff(limits.max_vertices, opts.cutoff)?;
    let corpus: Vec<CwSpec> = cw_corpus(limits).into_iter().filter(|s| keep(s)).collect();
    let results = run_indexed(&corpus, |i, spec| {
        let g = build_cw(spec).expect("corpus spec is valid");
        let mut c = Check::new();
        let (_, report) = homological(&g, opts.field, opts.cutoff);
        match report {
            Ok(h) => {
                c.value("star_equality", h.star_equality);
                c.value("predicted", expected(spec));
                c.eq("(*) as predicted", h.star_equality, expected(spec));
                c.eq("closed-form test agrees", theorem_main_check(spec).holds, h.star_equality);
            }
            Err(e) => c.fail("homological report", json!(e), json!(null)),
        }
        c.finish(i, spec_name(spec), &g)
    });
    Ok((corpus_description(&limits, what), results))
}

fn small_triangles(opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    filtered_star_equality(opts, r, "specs with all t_j <= 1 satisfy (*)", |s| s.t.iter().all(|&t| t <= 1), |_| true)
}

fn complete_bipartite(opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    filtered_star_equality(
        opts,
        r,
        "complete bipartite part: (*) iff sum s + n >= sum t + m",
        |s| s.is_complete_bipartite(),
        |s| s.s.iter().sum::<usize>() + s.n >= s.t.iter().sum::<usize>() + s.m,
    )
}

fn depth_two(opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    let limits = corpus_limits(r, 16);
    require_cutoff(limits.max_vertices, opts.cutoff)?;
    let corpus = cw_corpus(limits);
    let results = run_indexed(&corpus, |i, spec| {
        let g = build_cw(spec).expect("corpus spec is valid");
        let flags = classify_special(spec);
        let dom = independence_domination(&g).value;
        let mut c = Check::new();
        c.value("depth2_case", flags.depth2_case);
        c.value("i", dom);
        let (_, report) = homological(&g, opts.field, opts.cutoff);
        match report {
            Ok(h) => {
                c.value("depth", h.depth);
                c.eq("depth from Betti table = i(G)", h.depth, dom);
                c.holds("depth >= 2", h.depth >= 2, h.depth, 2);
                c.eq("depth = 2 iff (e1)/(e2)/(e3)", h.depth == 2, flags.depth2_case.is_some());
            }
            Err(e) => c.fail("homological report", json!(e), json!(null)),
        }
        c.finish(i, spec_name(spec), &g)
    });
    Ok((corpus_description(&limits, "depth >= 2, with equality exactly for (e1)-(e3)"), results))
}

fn target_check(c: &mut Check, g: &SimpleGraph, opts: &VerifyOptions, d: usize, r: Option<usize>, e: usize, star: bool) {
    let (_, report) = homological(g, opts.field, opts.cutoff);
    match report {
        Ok(h) => {
            c.value("dim", h.dim);
            c.value("deg_h", h.deg_h);
            c.value("reg", h.reg);
            c.value("depth", h.depth);
            c.value("star_equality", h.star_equality);
            c.eq("dim = d", h.dim, d);
            c.eq("deg h = d", h.deg_h, d);
            c.eq("depth = e", h.depth, e);
            if let Some(r) = r {
                c.eq("reg = r", h.reg, r);
            }
            if star {
                c.holds("(*) holds", h.star_equality, h.lhs(), h.rhs());
            }
        }
        Err(e) => c.fail("homological report", json!(e), json!(null)),
    }
}

fn realize_de(opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    let max_d = r.get("max_d", 8);
    let pairs: Vec<(usize, usize)> = (2..=max_d).flat_map(|d| (2..=d).map(move |e| (d, e))).collect();
    let needed = pairs.iter().map(|&(d, e)| construct_de(d, e).map_or(0, |s| s.vertex_count())).max().unwrap_or(0);
    require_cutoff(needed, opts.cutoff)?;
    let results = run_indexed(&pairs, |i, &(d, e)| {
        let spec = construct_de(d, e).expect("d >= e >= 2");
        let g = build_cw(&spec).expect("valid");
        let mut c = Check::new();
        c.value("spec", &spec);
        target_check(&mut c, &g, opts, d, None, e, true);
        c.finish(i, format!("(d,e)=({d},{e})"), &g)
    });
    Ok((format!("constructions for 2 <= e <= d <= {max_d}"), results))
}

fn prediction_check<T: Serialize + PartialEq + Copy>(c: &mut Check, name: &str, predicted: Predicted<T>, actual: T) {
    if let Predicted::Value(p) = predicted {
        c.eq(&format!("{name} matches closed form"), actual, p);
    }
}

fn other_families(opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    let max_path = r.get("max_path", 12);
    let max_cycle = r.get("max_cycle", 12);
    let max_star = r.get("max_star", 6);
    let max_gs = r.get("max_gs", 6);
    let mut kinds: Vec<Family> = (2..=max_path).map(Family::Path).collect();
    kinds.extend((3..=max_cycle).map(Family::Cycle));
    kinds.extend((1..=max_star).map(Family::Star));
    kinds.extend((1..=max_gs).map(Family::Gs));
    let needed = kinds.iter().map(|&k| family_graph(k).expect("in range").vertex_count()).max().unwrap_or(0);
    require_cutoff(needed, opts.cutoff)?;
    let mut results = run_indexed(&kinds, |i, &kind| {
        let g = family_graph(kind).expect("in range");
        let pred = family_predictions(kind).expect("in range");
        let mut c = Check::new();
        let (table, report) = homological(&g, opts.field, opts.cutoff);
        match report {
            Ok(h) => {
                c.value("dim", h.dim);
                c.value("depth", h.depth);
                c.value("reg", h.reg);
                c.value("projdim", h.projdim);
                c.value("deg_h", h.deg_h);
                c.value("star_equality", h.star_equality);
                prediction_check(&mut c, "dim", pred.dim, h.dim);
                prediction_check(&mut c, "depth", pred.depth, h.depth);
                prediction_check(&mut c, "reg", pred.reg, h.reg);
                prediction_check(&mut c, "projdim", pred.projdim, h.projdim);
                prediction_check(&mut c, "deg h", pred.deg_h, h.deg_h);
                prediction_check(&mut c, "(*)", pred.star_equality, h.star_equality);
                c.holds("beta_(p,p+r) != 0", table.get(h.projdim, h.projdim + h.reg) != 0, h.projdim, h.reg);
                if let Predicted::Value(true) = pred.deg_h_below_dim {
                    c.holds("deg h < dim", h.deg_h < h.dim, h.deg_h, h.dim);
                }
                if let Family::Path(n) = kind {
                    let identity = n.saturating_sub(1).div_ceil(3) + n.div_ceil(2) - n.div_ceil(3);
                    c.eq("deg h = ceil((n-1)/3) + ceil(n/2) - ceil(n/3)", h.deg_h, identity);
                }
            }
            Err(e) => c.fail("homological report", json!(e), json!(null)),
        }
        c.finish(i, kind.to_string(), &g)
    });
    // h(C_n) = h(P_{n-1}) + λ h(P_{n-3})
    let cycles: Vec<usize> = (5..=max_cycle).collect();
    let offset = results.len();
    results.extend(run_indexed(&cycles, |i, &n| {
        let g = family_graph(Family::Cycle(n)).expect("n >= 3");
        let hc = hilbert_data(&g).expect("hilbert");
        let hp1 = hilbert_data(&family_graph(Family::Path(n - 1)).expect("n >= 3")).expect("hilbert");
        let hp3 = hilbert_data(&family_graph(Family::Path(n - 3)).expect("n >= 5")).expect("hilbert");
        let rhs: IntPolynomial = &hp1.h_polynomial + &hp3.h_polynomial.shift(1);
        let mut c = Check::new();
        c.value("h_cycle", &hc.h_polynomial);
        c.value("h_path_sum", &rhs);
        c.eq("h(C_n) = h(P_(n-1)) + t h(P_(n-3))", &hc.h_polynomial, &rhs);
        c.eq("pole order = ceil((n-1)/2)", hc.dim, (n - 1).div_ceil(2));
        c.finish(offset + i, format!("cycle-recursion:{n}"), &g)
    }));
    Ok((
        format!("paths 2..={max_path}, cycles 3..={max_cycle}, stars 1..={max_star}, G_s 1..={max_gs}; cycle h-recursion 5..={max_cycle}"),
        results,
    ))
}

fn deg_h_vs_reg(opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    let limits = corpus_limits(r, 16);
    require_cutoff(limits.max_vertices, opts.cutoff)?;
    let corpus = cw_corpus(limits);
    let results = run_indexed(&corpus, |i, spec| {
        let g = build_cw(spec).expect("corpus spec is valid");
        let flags = classify_special(spec);
        let closed = cw_invariants(spec);
        let mut c = Check::new();
        let (_, report) = homological(&g, opts.field, opts.cutoff);
        match report {
            Ok(h) => {
                c.value("deg_h", h.deg_h);
                c.value("reg", h.reg);
                c.value("h_deg_equals_reg_flag", flags.h_deg_equals_reg);
                c.eq("reg = sum t + m", h.reg, closed.reg);
                c.holds("deg h >= reg", h.deg_h >= h.reg, h.deg_h, h.reg);
                c.eq("deg h = reg iff all s_i = 1 and all t_j >= 1", h.deg_h == h.reg, flags.h_deg_equals_reg);
            }
            Err(e) => c.fail("homological report", json!(e), json!(null)),
        }
        c.finish(i, spec_name(spec), &g)
    });
    Ok((corpus_description(&limits, "deg h >= reg with the equality criterion"), results))
}

fn realize_dre(opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    let max_d = r.get("max_d", 7);
    let limits = corpus_limits(r, 16);
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    for d in 2..=max_d {
        for rr in 2..=d {
            for e in 2..=rr {
                triples.push((d, rr, e));
            }
        }
    }
    let needed =
        triples.iter().filter_map(|&(d, rr, e)| construct_dre(d, rr, e).ok().flatten().map(|s| s.vertex_count())).max().unwrap_or(0);
    require_cutoff(needed.max(limits.max_vertices), opts.cutoff)?;
    let mut results = run_indexed(&triples, |i, &(d, rr, e)| {
        let built = construct_dre(d, rr, e).expect("ordered parameters");
        let mut c = Check::new();
        let exists = built.is_some();
        c.value("constructed", exists);
        if e == 2 {
            c.eq("e = 2: construction exists iff r = 2 or r = d", exists, rr == 2 || rr == d);
        } else {
            c.eq("e >= 3: construction exists", exists, true);
        }
        let g = match built {
            Some(spec) => {
                c.value("spec", &spec);
                let g = build_cw(&spec).expect("valid");
                target_check(&mut c, &g, opts, d, Some(rr), e, false);
                g
            }
            None => SimpleGraph::from_index_edges(Vec::new(), &[]),
        };
        c.finish(i, format!("(d,r,e)=({d},{rr},{e})"), &g)
    });
    // nonexistence side at e = 2: no corpus graph of depth 2 has 2 < r < dim
    let corpus = cw_corpus(limits);
    let offset = results.len();
    results.extend(run_indexed(&corpus, |i, spec| {
        let g = build_cw(spec).expect("corpus spec is valid");
        let mut c = Check::new();
        let (_, report) = homological(&g, opts.field, opts.cutoff);
        match report {
            Ok(h) => {
                c.value("depth", h.depth);
                c.value("reg", h.reg);
                c.value("dim", h.dim);
                if h.depth == 2 {
                    c.holds("depth 2 forces r = 2 or r = d", h.reg == 2 || h.reg == h.dim, h.reg, h.dim);
                }
            }
            Err(e) => c.fail("homological report", json!(e), json!(null)),
        }
        c.finish(offset + i, format!("depth-2 scan {}", spec_name(spec)), &g)
    }));
    Ok((
        format!(
            "constructions for 2 <= e <= r <= d <= {max_d}; depth-2 scan over {}",
            corpus_description(&limits, "r in {2, dim} when depth = 2")
        ),
        results,
    ))
}

fn forests(opts: &VerifyOptions, r: &mut Ranges) -> Outcome {
    let max_vertices = r.get("max_vertices", 10);
    let max_reg_vertices = r.get("max_reg_vertices", 12);
    require_cutoff(max_vertices.max(max_reg_vertices), opts.cutoff)?;
    let trees = trees_up_to(max_vertices.max(max_reg_vertices));
    let results = run_indexed(&trees, |i, g| {
        let n = g.vertex_count();
        let mut c = Check::new();
        let (table_q, report) = homological(g, Field::Rationals, opts.cutoff);
        let im = induced_matching_number(g).value;
        c.value("im", im);
        match report {
            Ok(h) => {
                c.value("reg", h.reg);
                c.eq("reg = im for forests", h.reg, im);
            }
            Err(e) => c.fail("homological report", json!(e), json!(null)),
        }
        if n <= max_vertices {
            let (table_2, _) = homological(g, Field::Prime(2), opts.cutoff);
            let mut witnesses = 0;
            for ell in 1..=n {
                for i in 1..=n {
                    let w = star_packing_witness(g, i, ell);
                    if let Some(w) = &w {
                        witnesses += 1;
                        c.holds("witness is valid", w.is_valid(g, i, ell), (i, ell), w.describe(g));
                    }
                    for (name, t) in [("Q", &table_q), ("GF(2)", &table_2)] {
                        let nonzero = t.get(i, i + ell) != 0;
                        c.eq(&format!("witness for (i,l)=({i},{ell}) iff beta over {name} nonzero"), w.is_some(), nonzero);
                    }
                }
            }
            c.value("witnesses", witnesses);
        }
        c.finish(i, format!("tree #{i} on {n} vertices"), g)
    });
    Ok((format!("trees up to {max_reg_vertices} vertices (reg = im); witness converse up to {max_vertices} vertices"), results))
}
