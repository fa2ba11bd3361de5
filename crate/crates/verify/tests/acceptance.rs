//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Most criteria drive the theorem harnesses at their default ranges; the
//! oracle comparisons below recompute things from scratch by brute force.

use std::process::ExitCode;
use std::time::Instant;

use eil_core::cameron_walker::{build_cw, cw_corpus, example_spec, theorem_main_check, CorpusLimits};
use eil_core::hilbert::hilbert_data;
use eil_core::invariants::{induced_matching_number, matching_number};
use eil_core::resolution::{betti_table_with, report_from_table, star_packing_witness, BettiOptions};
use eil_core::{Field, SimpleGraph};
use eil_verify::corpus::trees_up_to;
use eil_verify::harness::{run_verify, VerificationReport, VerifyOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn harness(id: &str, ranges: &[(&str, usize)], field: Field, cutoff: Option<usize>) -> Result<VerificationReport, String> {
    let mut opts = VerifyOptions { field, ..VerifyOptions::default() };
    if let Some(c) = cutoff {
        opts.cutoff = c;
    }
    opts.ranges = ranges.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let report = run_verify(id, &opts).map_err(|e| format!("{id}: {e}"))?;
    if let Some(bad) = report.failures().next() {
        let cx = bad.counterexample.as_ref().map(|c| format!("{}: {} vs {}", c.identity, c.lhs, c.rhs)).unwrap_or_default();
        return Err(format!("{id}: {} of {} failed, first `{}` ({cx})", report.summary.failures, report.summary.instances, bad.instance));
    }
    Ok(report)
}

fn run_all(runs: &[(&str, &[(&str, usize)])]) -> Result<Vec<usize>, String> {
    runs.iter().map(|(id, r)| harness(id, r, Field::Rationals, None).map(|rep| rep.summary.instances)).collect()
}

fn criterion_1() -> Outcome {
    let n = run_all(&[("thm-1.1", &[]), ("prop-1.3", &[])])?;
    if n[0] < 200 {
        return Err(format!("corpus has only {} specs", n[0]));
    }
    Ok(format!("{} corpus specs, a = 0 and deg h = dim = closed form", n[0]))
}

fn criterion_2() -> Outcome {
    let n = run_all(&[("lem-1.6", &[("max_s", 8)]), ("lem-1.7", &[("max_t", 8)])])?;
    if n != [8, 8] {
        return Err(format!("expected 8 + 8 instances, got {n:?}"));
    }
    Ok("stars s <= 8 and star triangles t <= 8 match closed forms".into())
}

fn criterion_3() -> Outcome {
    let rep = harness("thm-2.2", &[("max_vertices", 14)], Field::Rationals, Some(14))?;
    let failing = rep.results.iter().filter(|r| r.values.get("inequality_holds") == Some(&false.into())).count();
    if failing == 0 {
        return Err("no spec in the corpus fails the inequality; biconditional only exercised one way".into());
    }
    // the 24-vertex example, checked homologically as well
    let spec = example_spec();
    let check = theorem_main_check(&spec);
    if check.holds || check.failing_v != Some(vec![2]) {
        return Err(format!("example: expected failure at V = [2], got {check:?}"));
    }
    let g = build_cw(&spec).map_err(|e| e.to_string())?;
    let opts = BettiOptions { cutoff: 24, ..BettiOptions::default() };
    let table = betti_table_with(&g, Field::Rationals, opts).map_err(|e| e.to_string())?;
    let h = report_from_table(&g, &table).map_err(|e| e.to_string())?;
    if table.get(h.projdim, h.projdim + h.reg) != 0 || h.lhs() == h.rhs() {
        return Err(format!(
            "example: beta_(p,p+r) = {}, s - r = {}, d - e = {}",
            table.get(h.projdim, h.projdim + h.reg),
            h.lhs(),
            h.rhs()
        ));
    }
    Ok(format!(
        "{} specs ({} failing the inequality) plus the 24-vertex example failing at V = {{v2}} with beta_(p,p+r) = 0",
        rep.summary.instances - 1,
        failing - 1
    ))
}

fn criterion_4() -> Outcome {
    let n = run_all(&[("lem-2.1", &[])])?;
    Ok(format!("{} specs, bounds and complete-bipartite equality hold", n[0]))
}

fn criterion_5() -> Outcome {
    let rep = harness("prop-2.8", &[], Field::Rationals, None)?;
    let e = rep.results.iter().filter(|r| r.values.get("depth").and_then(|d| d.as_u64()) == Some(2)).count();
    Ok(format!("{} specs, {e} of depth 2, Betti depth = i(G) everywhere", rep.summary.instances))
}

fn criterion_6() -> Outcome {
    let n = run_all(&[("prop-2.11", &[("max_path", 12), ("max_cycle", 12), ("max_star", 6), ("max_gs", 6)])])?;
    Ok(format!("{} family instances match", n[0]))
}

fn criterion_7() -> Outcome {
    let n = run_all(&[("thm-3.1", &[])])?;
    Ok(format!("{} specs, deg h >= reg with the stated equality case", n[0]))
}

fn criterion_8() -> Outcome {
    let n = run_all(&[("cor-2.9", &[("max_d", 8)]), ("thm-3.4", &[("max_d", 7)])])?;
    Ok(format!("{} (d,e) constructions and {} (d,r,e)/depth-2 instances verified", n[0], n[1]))
}

// ---- oracles for criterion 9 ----

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Counts independent sets by size, by testing every subset.
fn f_vector(g: &SimpleGraph) -> Vec<i64> {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut f = vec![0i64; n + 1];
    for mask in 0u32..(1 << n) {
        if edges.iter().all(|&(a, b)| mask >> a & 1 == 0 || mask >> b & 1 == 0) {
            f[mask.count_ones() as usize] += 1;
        }
    }
    trim(f)
}

/// Σ f_k λ^k (1-λ)^(d-k)
fn numerator_over(f: &[i64], d: usize) -> Vec<i64> {
    let mut acc = vec![0i64; d + 1];
    for (k, &fk) in f.iter().enumerate() {
        let mut term = vec![0i64; k];
        term.push(fk);
        for _ in k..d {
            term = mul(&term, &[1, -1]);
        }
        for (i, c) in term.into_iter().enumerate() {
            acc[i] += c;
        }
    }
    trim(acc)
}

fn random_connected(rng: &mut ChaCha8Rng) -> SimpleGraph {
    loop {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.15..0.7);
        let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
        let g = SimpleGraph::from_index_edges(labels, &edges);
        if g.is_connected() {
            return g;
        }
    }
}

fn as_i64(p: &eil_core::IntPolynomial) -> Vec<i64> {
    trim(p.coeffs().iter().map(|c| c.to_string().parse().expect("small coefficient")).collect())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for k in 0..300 {
        let g = random_connected(&mut rng);
        let f = f_vector(&g);
        let d = f.len() - 1;
        let h = hilbert_data(&g).map_err(|e| e.to_string())?;
        let oracle_h = numerator_over(&f, d);
        if h.dim != d || as_i64(&h.h_polynomial) != oracle_h {
            return Err(format!(
                "graph {k} ({}): h = {:?} dim {}, oracle {oracle_h:?} dim {d}",
                g.to_text().trim(),
                as_i64(&h.h_polynomial),
                h.dim
            ));
        }
        let table = betti_table_with(&g, Field::Rationals, BettiOptions::default()).map_err(|e| e.to_string())?;
        let mut alt = vec![0i64; g.vertex_count() + 1];
        for (i, j, b) in table.entries() {
            alt[j] += if i % 2 == 0 { b as i64 } else { -(b as i64) };
        }
        let oracle_k = numerator_over(&f, g.vertex_count());
        if trim(alt.clone()) != oracle_k {
            return Err(format!("graph {k} ({}): alternating Betti sum {alt:?} vs {oracle_k:?}", g.to_text().trim()));
        }
    }
    Ok("300 random connected graphs: h matches the f-vector oracle, alternating Betti sum matches the numerator".into())
}

fn criterion_10() -> Outcome {
    // im <= reg <= m over the corpus
    let corpus = cw_corpus(CorpusLimits::default());
    let mut packing_checks = 0usize;
    for spec in &corpus {
        let g = build_cw(spec).map_err(|e| e.to_string())?;
        let table = betti_table_with(&g, Field::Rationals, BettiOptions::default()).map_err(|e| e.to_string())?;
        let reg = table.regularity();
        let (im, m) = (induced_matching_number(&g).value, matching_number(&g).value);
        if !(im <= reg && reg <= m) {
            return Err(format!("{}: im {im}, reg {reg}, m {m}", spec.to_json()));
        }
        // star-packing witnesses on the smaller corpus graphs, both fields
        if g.vertex_count() <= 12 {
            let gf2 = betti_table_with(&g, Field::Prime(2), BettiOptions::default()).map_err(|e| e.to_string())?;
            for i in 1..=g.vertex_count() {
                for ell in 1..=im.min(i) {
                    if let Some(w) = star_packing_witness(&g, i, ell) {
                        packing_checks += 1;
                        if !w.is_valid(&g, i, ell) || table.get(i, i + ell) == 0 || gf2.get(i, i + ell) == 0 {
                            return Err(format!("{}: witness at ({i},{ell}) {:?} but Betti entry zero", spec.to_json(), w.describe(&g)));
                        }
                    }
                }
            }
        }
    }
    // reg = im on trees <= 12; witness iff nonzero on trees <= 10, over Q and GF(2)
    let trees = trees_up_to(12).len();
    let q = harness("lem-2.10-forest", &[("max_vertices", 10), ("max_reg_vertices", 12)], Field::Rationals, None)?;
    let f2 = harness("lem-2.10-forest", &[("max_vertices", 10), ("max_reg_vertices", 12)], Field::Prime(2), None)?;
    Ok(format!(
        "{} corpus graphs with im <= reg <= m, {packing_checks} corpus witnesses, {trees} trees; forest harness {} + {} instances over Q and GF(2)",
        corpus.len(),
        q.summary.instances,
        f2.summary.instances
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("a-invariant zero and deg h = dim on the corpus", criterion_1),
        ("star and star-triangle series", criterion_2),
        ("main biconditional, with the failing example", criterion_3),
        ("independence domination bounds", criterion_4),
        ("depth two classification", criterion_5),
        ("paths, cycles, stars and G_s", criterion_6),
        ("deg h versus reg", criterion_7),
        ("(d,e) and (d,r,e) constructions", criterion_8),
        ("oracle equivalence on random graphs", criterion_9),
        ("regularity bounds and star-packing witnesses", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name} ({detail}) [{secs:.1}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {why} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
