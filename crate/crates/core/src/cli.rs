//! The `matx` command line. Exit codes: 0 clean, 2 violation found, 3 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::json_int;
use crate::bounds::{
    check_kcm_floor_complex, check_relative_kcm_complex, check_relative_kcm_raw, run_suite, CheckResult, Profile,
    Suite, Verdict,
};
use crate::complex::{
    broken_circuit_complex, broken_circuit_complex_by_labels, cm_level, independence_complex, is_cohen_macaulay,
    reduced_homology, short_h, KcmLimits, SimplicialComplex,
};
use crate::corpus::{generate, CorpusSpec, Family};
use crate::error::{MatxError, Result};
use crate::io::{corpus_files, document_from_value, graph_from_value, read_json, write_corpus, Document};
use crate::matroid::Matroid;
use crate::poly::IntPolynomial;
use crate::tutte::{characteristic_polynomial, coefficient_families, graph_reliability, reliability_polynomial, tutte_dc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "matx", version, about = "Exact matroid and simplicial-complex invariants")]
struct Cli {
    /// Include wall-clock timing in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// f/h-vectors, short h-vector, CM level and structure of a matroid or complex.
    Invariants {
        path: PathBuf,
        /// Ordering for the broken circuit complex, as comma-separated labels.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
        /// Largest k tried by the brute-force k-CM search.
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// Tutte polynomial and its coefficient families.
    Tutte {
        path: PathBuf,
        /// Require the characteristic polynomial (fails on matroids with loops).
        #[arg(long)]
        charpoly: bool,
    },
    /// Run checks on a matroid, complex, h-vector file, or a corpus directory.
    Verify {
        path: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Stop the report at the first instance with a violation.
        #[arg(long)]
        fail_on_violation: bool,
    },
    /// Corpus operations.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Reliability polynomial of a graph (or of a matroid via its dual h-vector).
    Reliability { path: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    Generate(GenerateArgs),
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    depth: usize,
    #[arg(long, default_value_t = 40)]
    random_graphs: usize,
    /// Comma-separated families: landmarks, uniform, graphs, random_graphs, rank2.
    #[arg(long, value_delimiter = ',')]
    families: Option<Vec<String>>,
    #[arg(short = 'o', long = "out")]
    out: PathBuf,
}

#[derive(Serialize)]
struct RunReport {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_digest: Option<String>,
    results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<f64>,
}

struct Outcome {
    command: &'static str,
    digest: Option<String>,
    results: Value,
    code: i32,
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(cli.command) {
        Ok(o) => {
            let report = RunReport {
                tool: "matx",
                version: env!("CARGO_PKG_VERSION"),
                command: o.command,
                input_digest: o.digest,
                results: o.results,
                timing_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
            };
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            let _ = writeln!(out, "{text}");
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Invariants { path, order, max_k } => cmd_invariants(&path, order.as_deref(), max_k),
        Command::Tutte { path, charpoly } => cmd_tutte(&path, charpoly),
        Command::Verify { path, suite, fail_on_violation } => cmd_verify(&path, suite.parse()?, fail_on_violation),
        Command::Corpus { action: CorpusAction::Generate(g) } => cmd_corpus_generate(g),
        Command::Reliability { path } => cmd_reliability(&path),
    }
}

fn ints(v: &[crate::arith::Int]) -> Value {
    Value::Array(v.iter().map(json_int::value).collect())
}

fn poly(p: &IntPolynomial) -> Value {
    ints(p.coeffs())
}

fn load(path: &Path) -> Result<(Document, String)> {
    let (v, digest) = read_json(path)?;
    Ok((document_from_value(&v)?, digest))
}

fn load_matroid(path: &Path) -> Result<(Matroid, String)> {
    match load(path)? {
        (Document::Matroid(m), d) => Ok((m, d)),
        _ => Err(MatxError::Input("expected a matroid document".into())),
    }
}

fn complex_summary(c: &SimplicialComplex, max_k: Option<usize>) -> Value {
    let sh = short_h(c).ok().map(|s| {
        json!({"by_links": ints(&s.by_links), "by_f": ints(&s.by_f), "by_h": ints(&s.by_h), "agree": s.agree()})
    });
    let level = max_k.map(|k| match cm_level(c, k, KcmLimits { max_k: k, ..KcmLimits::default() }) {
        Ok(k) => json!(k),
        Err(e) => json!({"unavailable": e.to_string()}),
    });
    json!({
        "vertices": c.labels(),
        "facets": c.facets().iter().map(|&f| c.names(f)).collect::<Vec<_>>(),
        "dim": c.dim(),
        "pure": c.is_pure(),
        "f": ints(&c.f_vector()),
        "h": ints(&c.h_vector()),
        "short_h": sh,
        "reduced_betti": reduced_homology(c),
        "cohen_macaulay": is_cohen_macaulay(c),
        "cm_level_bruteforce": level,
    })
}

fn cmd_invariants(path: &Path, order: Option<&[String]>, max_k: usize) -> Result<Outcome> {
    let (doc, digest) = load(path)?;
    let results = match doc {
        Document::Matroid(m) => {
            let ind = independence_complex(&m).map(|c| complex_summary(&c, Some(max_k)));
            let bc = match order {
                Some(o) => broken_circuit_complex_by_labels(&m, o),
                None => broken_circuit_complex(&m, None),
            };
            // loops only void the complex; a bad ordering is an input error
            let bc = match bc {
                Err(MatxError::HasLoops | MatxError::TooManyFaces(_)) | Ok(_) => bc.map(|c| {
                    let mut v = complex_summary(&c, None);
                    v["ordering"] = json!(order.map(<[String]>::to_vec).unwrap_or_else(|| m.labels().to_vec()));
                    v
                }),
                Err(e) => return Err(e),
            };
            let or_error = |r: Result<Value>| r.unwrap_or_else(|e| json!({"error": e.to_string()}));
            json!({
                "kind": "matroid",
                "n": m.n(),
                "rank": m.rank(),
                "labels": m.labels(),
                "loops": m.names(m.loops().bits()),
                "coloops": m.names(m.coloops().bits()),
                "components": m.components().iter().map(|c| m.names(c.bits())).collect::<Vec<_>>(),
                "connected": m.is_connected(),
                "min_cocircuit": m.min_cocircuit_size(),
                "kcm_level": m.min_cocircuit_size(),
                "independence_complex": or_error(ind),
                "broken_circuit_complex": or_error(bc),
            })
        }
        Document::Complex { complex, .. } => {
            let mut v = complex_summary(&complex, Some(max_k));
            v["kind"] = json!("complex");
            v
        }
        Document::HVector(_) => return Err(MatxError::Input("invariants needs a matroid or a complex".into())),
    };
    Ok(Outcome { command: "invariants", digest: Some(digest), results, code: EXIT_OK })
}

fn cmd_tutte(path: &Path, need_charpoly: bool) -> Result<Outcome> {
    let (m, digest) = load_matroid(path)?;
    let charpoly = match characteristic_polynomial(&m) {
        Ok(p) => Some(poly(&p)),
        Err(e) if need_charpoly => return Err(e),
        Err(_) => None,
    };
    let t = tutte_dc(&m);
    let fam = coefficient_families(&m);
    let terms: Vec<Value> = t.terms().into_iter().map(|(i, j, c)| json!([i, j, json_int::value(&c)])).collect();
    let results = json!({
        "n": m.n(),
        "rank": m.rank(),
        "T": terms,
        "h": ints(&fam.h),
        "b": fam.b.as_deref().map(ints),
        "b_star": ints(&fam.b_star),
        "w": fam.w.as_deref().map(ints),
        "beta": json_int::value(&crate::tutte::beta_invariant(&m)),
        "charpoly": charpoly,
    });
    Ok(Outcome { command: "tutte", digest: Some(digest), results, code: EXIT_OK })
}

fn skipped_all(suite: Suite, why: &str) -> Vec<CheckResult> {
    vec![CheckResult::skipped("input", format!("suite {suite} does not apply: {why}"))]
}

fn or_skip(check: &'static str, r: Result<Vec<CheckResult>>) -> Vec<CheckResult> {
    r.unwrap_or_else(|e| vec![CheckResult::skipped(check, e.to_string())])
}

/// Checks for one input document.
pub fn verify_document(doc: &Document, suite: Suite) -> Vec<CheckResult> {
    let kcm = matches!(suite, Suite::All | Suite::Kcm);
    match doc {
        Document::Matroid(m) => run_suite(&Profile::new(m), suite),
        Document::HVector(raw) if kcm => or_skip("relative_kcm", check_relative_kcm_raw(&raw.h, raw.n, raw.k)),
        Document::Complex { complex, k } if kcm => {
            let limits = KcmLimits::default();
            let k = match k {
                Some(k) => *k,
                None => match cm_level(complex, limits.max_k, limits) {
                    Ok(k) => k,
                    Err(e) => return vec![CheckResult::skipped("kcm_floor", e.to_string())],
                },
            };
            if k == 0 {
                return vec![CheckResult::skipped("kcm_floor", "complex is not Cohen-Macaulay")];
            }
            let mut out = or_skip("kcm_floor", check_kcm_floor_complex(complex, k, limits));
            if k >= 2 {
                out.extend(or_skip("relative_kcm", check_relative_kcm_complex(complex, k, limits)));
            }
            out
        }
        _ => skipped_all(suite, "only kcm checks run on complexes and bare h-vectors"),
    }
}

#[derive(Default, Serialize)]
struct Summary {
    instances: usize,
    holds: usize,
    equality: usize,
    violation: usize,
    expected_below_threshold: usize,
    skipped: usize,
}

impl Summary {
    fn add(&mut self, checks: &[CheckResult]) {
        self.instances += 1;
        for c in checks {
            match c.verdict {
                Verdict::Holds => self.holds += 1,
                Verdict::Equality => self.equality += 1,
                Verdict::Violation => self.violation += 1,
                Verdict::ExpectedBelowThreshold => self.expected_below_threshold += 1,
                Verdict::Skipped => self.skipped += 1,
            }
        }
    }
}

fn cmd_verify(path: &Path, suite: Suite, fail_fast: bool) -> Result<Outcome> {
    let (entries, digest) = if path.is_dir() {
        let files = corpus_files(path)?;
        let rows: Vec<Result<(String, String, Vec<CheckResult>)>> = files
            .par_iter()
            .map(|(id, file)| {
                let (doc, d) = load(file)?;
                Ok((id.clone(), d, verify_document(&doc, suite)))
            })
            .collect();
        (rows.into_iter().collect::<Result<Vec<_>>>()?, None)
    } else {
        let (doc, d) = load(path)?;
        let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        (vec![(id, d.clone(), verify_document(&doc, suite))], Some(d))
    };
    let mut summary = Summary::default();
    let mut instances = Vec::new();
    for (id, d, checks) in entries {
        summary.add(&checks);
        let bad = checks.iter().any(CheckResult::is_violation);
        instances.push(json!({"id": id, "input_digest": d, "checks": checks}));
        if bad && fail_fast {
            break;
        }
    }
    let code = if summary.violation > 0 { EXIT_VIOLATION } else { EXIT_OK };
    let results = json!({"suite": suite.name(), "summary": summary, "instances": instances});
    Ok(Outcome { command: "verify", digest, results, code })
}

fn cmd_corpus_generate(g: GenerateArgs) -> Result<Outcome> {
    let families = match g.families {
        None => Family::ALL.to_vec(),
        Some(list) => list.iter().map(|s| s.parse()).collect::<Result<Vec<Family>>>()?,
    };
    let spec = CorpusSpec { seed: g.seed, max_n: g.max_n, families, closure_depth: g.depth, random_graphs: g.random_graphs };
    let instances = generate(&spec)?;
    let manifest = write_corpus(&g.out, &spec, &instances)?;
    let (_, digest) = read_json(&g.out.join(crate::io::MANIFEST_FILE))?;
    let results = json!({
        "dir": g.out.display().to_string(),
        "count": manifest.count,
        "manifest_digest": digest,
        "spec": spec,
        "prng": manifest.prng,
    });
    Ok(Outcome { command: "corpus generate", digest: None, results, code: EXIT_OK })
}

fn cmd_reliability(path: &Path) -> Result<Outcome> {
    let (v, digest) = read_json(path)?;
    let is_graph = v.get("edges").is_some() && v.get("construct").is_none();
    let (r, kind) = if is_graph {
        (graph_reliability(&graph_from_value(&v)?)?, "graph")
    } else {
        match document_from_value(&v)? {
            Document::Matroid(m) => (reliability_polynomial(&m), "matroid"),
            _ => return Err(MatxError::Input("reliability needs a graph or a matroid".into())),
        }
    };
    let results = json!({"kind": kind, "R": poly(&r)});
    Ok(Outcome { command: "reliability", digest: Some(digest), results, code: EXIT_OK })
}
