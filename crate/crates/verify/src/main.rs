use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eil_core::cameron_walker::{build_cw, build_cw_star_convention, CwSpec};
use eil_core::resolution::DEFAULT_CUTOFF;
use eil_core::Field;
use eil_verify::config::{parse_config, parse_range, Config};
use eil_verify::harness::{run_verify, VerificationReport, VerifyError, VerifyOptions};
use eil_verify::input::{invariants_report, parse_input, render_table, InvariantsOptions};

const EXIT_PASS: u8 = 0;
const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CUTOFF: u8 = 3;

#[derive(Parser)]
#[command(name = "eil", version, about = "Invariants of edge ideals and checks of Cameron-Walker results")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariants of one graph.
    Invariants(InvariantsArgs),
    /// Run a theorem harness over its corpus.
    Verify(VerifyArgs),
    /// Build a Cameron-Walker graph from its parameters.
    MakeCw(MakeCwArgs),
}

#[derive(Args)]
struct InvariantsArgs {
    /// Family spec (path:7), graph file, or inline graph text / JSON
    input: String,
    /// `q` or a prime
    #[arg(long, value_parser = parse_field)]
    field: Option<Field>,
    /// Largest vertex count for which Betti tables are computed
    #[arg(long)]
    cutoff: Option<usize>,
    #[arg(long, conflicts_with = "table")]
    json: bool,
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of the ids listed by `eil verify --list`
    #[arg(required_unless_present = "list")]
    theorem: Option<String>,
    #[arg(long, value_name = "K=V", value_parser = parse_range_arg)]
    range: Vec<(String, usize)>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_parser = parse_field)]
    field: Option<Field>,
    #[arg(long)]
    cutoff: Option<usize>,
    /// key=value file with defaults for the flags above
    #[arg(long)]
    config: Option<PathBuf>,
    /// Record wall time in the summary (makes the report non-deterministic)
    #[arg(long)]
    timing: bool,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write per-instance rows as CSV
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct MakeCwArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',')]
    s: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    t: Vec<usize>,
    /// Edges between v_i and w_j, as "i-j,..." (1-based)
    #[arg(long, default_value = "")]
    bip: String,
    /// Accept the star with m = n = 1
    #[arg(long)]
    allow_star: bool,
    #[arg(long)]
    json: bool,
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

fn parse_range_arg(s: &str) -> Result<(String, usize), String> {
    parse_range(s).map_err(|e| e.to_string())
}

fn parse_bip(s: &str) -> Result<Vec<(usize, usize)>, String> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (a, b) = p.trim().split_once('-').ok_or_else(|| format!("bad edge `{p}`, expected i-j"))?;
            let a = a.trim().parse().map_err(|_| format!("bad index in `{p}`"))?;
            let b = b.trim().parse().map_err(|_| format!("bad index in `{p}`"))?;
            Ok((a, b))
        })
        .collect()
}

fn env_cutoff() -> Result<Option<usize>, String> {
    match std::env::var("EIL_CUTOFF") {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| format!("EIL_CUTOFF must be an integer, got `{v}`")),
        Err(_) => Ok(None),
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Invariants(a) => invariants(a),
        Command::Verify(a) => verify(a),
        Command::MakeCw(a) => make_cw(a),
    }
}

fn invariants(a: InvariantsArgs) -> ExitCode {
    let cutoff = match env_cutoff() {
        Ok(env) => a.cutoff.or(env).unwrap_or(DEFAULT_CUTOFF),
        Err(e) => return usage(e),
    };
    let input = match parse_input(&a.input) {
        Ok(i) => i,
        Err(e) => return usage(e),
    };
    let opts = InvariantsOptions { field: a.field.unwrap_or(Field::Rationals), cutoff };
    let out = match invariants_report(&input, opts) {
        Ok(o) => o,
        Err(e) => return usage(e),
    };
    if a.table {
        print!("{}", render_table(&out));
    } else {
        println!("{}", serde_json::to_string_pretty(&out.report).expect("report serializes"));
    }
    if out.cutoff_hit {
        eprintln!("betti table skipped: graph exceeds cutoff {cutoff}");
        ExitCode::from(EXIT_CUTOFF)
    } else {
        ExitCode::from(EXIT_PASS)
    }
}

fn verify(a: VerifyArgs) -> ExitCode {
    if a.list {
        for id in eil_verify::THEOREM_IDS {
            println!("{id}");
        }
        return ExitCode::from(EXIT_PASS);
    }
    let theorem = a.theorem.expect("clap requires theorem");
    let cfg = match &a.config {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => match parse_config(&text) {
                Ok(c) => c,
                Err(e) => return usage(format!("{}: {e}", path.display())),
            },
            Err(e) => return usage(format!("cannot read {}: {e}", path.display())),
        },
        None => Config::default(),
    };
    let env = match env_cutoff() {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let mut ranges: BTreeMap<String, usize> = cfg.ranges;
    ranges.extend(a.range);
    let opts = VerifyOptions {
        field: a.field.or(cfg.field).unwrap_or(Field::Rationals),
        cutoff: a.cutoff.or(env).or(cfg.cutoff).unwrap_or(DEFAULT_CUTOFF),
        jobs: a.jobs.or(cfg.jobs),
        ranges,
        timing: a.timing || cfg.timing.unwrap_or(false),
    };
    let report = match run_verify(&theorem, &opts) {
        Ok(r) => r,
        Err(e @ VerifyError::Cutoff { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CUTOFF);
        }
        Err(e) => return usage(e),
    };
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    let written = match &a.out {
        Some(path) => std::fs::write(path, json + "\n").map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => writeln!(std::io::stdout(), "{json}").map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        return usage(e);
    }
    if let Some(path) = &a.csv {
        if let Err(e) = write_csv(path, &report) {
            return usage(format!("cannot write {}: {e}", path.display()));
        }
    }
    let s = &report.summary;
    eprintln!("{}: {} instances, {} failures", report.theorem, s.instances, s.failures);
    if s.all_pass {
        ExitCode::from(EXIT_PASS)
    } else {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    }
}

fn write_csv(path: &PathBuf, report: &VerificationReport) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["index", "instance", "pass", "values"])?;
    for r in &report.results {
        let values = serde_json::to_string(&r.values).expect("values serialize");
        w.write_record([r.index.to_string(), r.instance.clone(), r.pass.to_string(), values])?;
    }
    w.flush()?;
    Ok(())
}

fn make_cw(a: MakeCwArgs) -> ExitCode {
    let bip = match parse_bip(&a.bip) {
        Ok(b) => b,
        Err(e) => return usage(e),
    };
    let mut spec = CwSpec { m: a.m, n: a.n, s: a.s, t: a.t, bip };
    spec.bip.sort_unstable();
    if let Err(e) = spec.validate(a.allow_star) {
        return usage(e);
    }
    let built = if spec.is_star() { build_cw_star_convention(&spec) } else { build_cw(&spec) };
    let g = match built {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    if a.json {
        println!("{}", serde_json::to_string_pretty(&g.to_json()).expect("graph serializes"));
    } else {
        print!("{}", g.to_text());
    }
    ExitCode::from(EXIT_PASS)
}
