//! Command-line front door: structural analysis, solving with certificates,
//! the exhaustive oracle, extremal constructions, bound reports, and the
//! randomized fuzz harness.
//!
//! All structured data goes to standard output (or `--output`) as JSON;
//! human diagnostics go to standard error. Exit codes: 0 success or
//! certificate, 1 valid negative (oracle refutation or hypothesis refusal),
//! 2 usage error, 3 engine defect.

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fangood::bounds::{applicability, build_extremal_coloring, rat_string, threshold_family, Rat};
use fangood::coloring::{read_coloring, write_coloring, FanSpec, TwoColoring};
use fangood::embed::{
    solve_star_vs_tfan, solve_tfan, verify_certificate, Certificate, SolveError, SolveMode,
};
use fangood::graph::{random_sparse_connected, Graph, VertexId};
use fangood::graph6::{parse_graph6, write_graph6};
use fangood::oracle::{arrows_with_ceiling, ramsey_exact_with_ceiling, DEFAULT_CEILING};
use fangood::sparse::{trichotomy, SparseProfile, TrichotomyOutcome, TrichotomyParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fangood", version, about = "Ramsey certificates for sparse graphs versus fans")]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (default: FANGOOD_THREADS or all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Strict,
    Opportunistic,
}

impl From<Mode> for SolveMode {
    fn from(m: Mode) -> SolveMode {
        match m {
            Mode::Strict => SolveMode::Strict,
            Mode::Opportunistic => SolveMode::Opportunistic,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural case split of a graph: suspended path, end-edge matching,
    /// or a star vertex.
    Analyze {
        graph: PathBuf,
        /// Suspended-path order threshold.
        #[arg(long)]
        q: usize,
        /// End-edge matching size.
        #[arg(long)]
        s: usize,
    },
    /// Find a red copy of the graph or a blue union of fans in a coloring.
    Solve {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short, default_value_t = 1)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
    },
    /// Exact small Ramsey answers by exhaustive enumeration.
    Oracle {
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short, default_value_t = 1)]
        t: usize,
        /// Search the least arrowing order up to this bound.
        #[arg(long)]
        nmax: Option<usize>,
        /// Test a single order instead.
        #[arg(long)]
        n: Option<usize>,
        /// Where to store an avoiding coloring, if one is found.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Enumeration ceiling (default 8).
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: usize,
    },
    /// Build the extremal lower-bound coloring of K_{2n+t-3}.
    Construct {
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 1)]
        k: usize,
        #[arg(short, default_value_t = 1)]
        t: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Every bound, threshold, and goodness rule for (G, k, t).
    Bounds {
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short, default_value_t = 1)]
        t: usize,
        /// Also evaluate the parameterized threshold family at this c (e.g. "96" or "193/2").
        #[arg(short)]
        c: Option<String>,
    },
    /// Solve many random colorings and re-verify every certificate.
    Fuzz {
        /// A graph6 file, or a family: tree:N, unicyclic:N, sparse:N:EXTRA, star:N.
        target: String,
        #[arg(short)]
        k: usize,
        #[arg(short, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("FANGOOD_THREADS").ok().and_then(|s| s.parse().ok()));
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Analyze { graph, q, s } => {
            let g = load_graph(&graph)?;
            let params = TrichotomyParams::new(q, s, SparseProfile::of(&g));
            let outcome = trichotomy(&g, params).map_err(|e| anyhow!("{e}"))?;
            outcome.validate(&g).map_err(|e| anyhow!("invalid witness: {e}"))?;
            let value = match &outcome {
                TrichotomyOutcome::SuspendedPath(p) => json!({
                    "case": "suspended_path", "path": p, "q": q, "s": s, "gamma": params.gamma,
                }),
                TrichotomyOutcome::EndEdgeMatching(edges) => json!({
                    "case": "end_edge_matching", "edges": edges, "q": q, "s": s, "gamma": params.gamma,
                }),
                TrichotomyOutcome::StarVertex { center, leaves } => json!({
                    "case": "star_vertex", "center": center, "leaves": leaves,
                    "q": q, "s": s, "gamma": params.gamma,
                }),
            };
            emit(&value, cli.output.as_deref())?;
            Ok(0)
        }
        Cmd::Solve { graph, coloring, k, t, mode } => {
            let g = load_graph(&graph)?;
            let text = std::fs::read_to_string(&coloring)
                .with_context(|| format!("reading {}", coloring.display()))?;
            let c = read_coloring(&text).map_err(|e| anyhow!("{}: {e}", coloring.display()))?;
            let hash = instance_hash(&g, &text, k, t);
            match dispatch_solve(&c, &g, k, t, mode.into()) {
                Ok(cert) => {
                    verify_certificate(&c, &g, k, t, &cert)
                        .map_err(|e| anyhow!("solver emitted an invalid certificate: {e}"))?;
                    emit(&certificate_json(&cert, &hash), cli.output.as_deref())?;
                    eprintln!("certificate found and verified");
                    Ok(0)
                }
                Err(e @ SolveError::Hypothesis(_)) | Err(e @ SolveError::Exhausted(_)) => {
                    eprintln!("no certificate: {e}");
                    emit(
                        &json!({"refused": e.to_string(), "instance_hash": hash}),
                        cli.output.as_deref(),
                    )?;
                    Ok(1)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(3)
                }
            }
        }
        Cmd::Oracle { graph, k, t, nmax, n, witness, ceiling } => {
            let g = load_graph(&graph)?;
            let spec = FanSpec::new(k, t).map_err(|e| anyhow!("{e}"))?;
            match (nmax, n) {
                (Some(nmax), None) => {
                    let r = ramsey_exact_with_ceiling(&g, spec, nmax, ceiling)
                        .map_err(|e| anyhow!("{e}"))?;
                    emit(&json!({"ramsey": r, "nmax": nmax, "k": k, "t": t}), cli.output.as_deref())?;
                    Ok(if r.is_some() { 0 } else { 1 })
                }
                (None, Some(order)) => {
                    let res =
                        arrows_with_ceiling(order, &g, spec, ceiling).map_err(|e| anyhow!("{e}"))?;
                    let mut witness_path = None;
                    if let (Some(path), Some(w)) = (witness.as_ref(), res.stats.witness.as_ref()) {
                        std::fs::write(path, write_coloring(w))
                            .with_context(|| format!("writing {}", path.display()))?;
                        witness_path = Some(path.display().to_string());
                    }
                    emit(
                        &json!({
                            "n": order,
                            "arrows": res.arrows,
                            "witness_path": witness_path,
                            "stats": {
                                "colorings_examined": res.stats.colorings_examined,
                                "prune_hits": res.stats.prune_hits,
                            },
                        }),
                        cli.output.as_deref(),
                    )?;
                    Ok(if res.arrows { 0 } else { 1 })
                }
                _ => Err(anyhow!("pass exactly one of --nmax or --n")),
            }
        }
        Cmd::Construct { n, k, t, out } => {
            let c = build_extremal_coloring(n, k, t).map_err(|e| anyhow!("{e}"))?;
            std::fs::write(&out, write_coloring(&c))
                .with_context(|| format!("writing {}", out.display()))?;
            emit(
                &json!({"path": out.display().to_string(), "order": c.order(), "n": n, "k": k, "t": t}),
                cli.output.as_deref(),
            )?;
            Ok(0)
        }
        Cmd::Bounds { graph, k, t, c } => {
            let g = load_graph(&graph)?;
            let report = applicability(&g, k, t).map_err(|e| anyhow!("{e}"))?;
            let mut value = serde_json::to_value(&report)?;
            if let Some(c_text) = c {
                let c_rat = parse_rat(&c_text)?;
                let fam = threshold_family(k, t, c_rat).map_err(|e| anyhow!("{e}"))?;
                value["thresholds"] = json!({
                    "c": rat_string(&fam.c),
                    "edge_denom_single": rat_string(&fam.edge_denom_single),
                    "order_min_single": rat_string(&fam.order_min_single),
                    "edge_denom_union": rat_string(&fam.edge_denom_union),
                    "order_min_union": rat_string(&fam.order_min_union),
                });
            }
            emit(&value, cli.output.as_deref())?;
            Ok(0)
        }
        Cmd::Fuzz { target, k, t, trials, seed, mode } => {
            let summary = fuzz(&target, k, t, trials, seed, mode.into())?;
            let failures = summary["failures"].as_u64().unwrap_or(0);
            let certified = summary["certified"].as_u64().unwrap_or(0);
            emit(&summary, cli.output.as_deref())?;
            if failures > 0 {
                Ok(3)
            } else if certified < trials {
                Ok(1)
            } else {
                Ok(0)
            }
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| anyhow!("{}: no graph6 line", path.display()))?;
    parse_graph6(line.trim()).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn parse_rat(text: &str) -> Result<Rat> {
    let parts: Vec<&str> = text.split('/').collect();
    match parts.as_slice() {
        [p] => Ok(Rat::from_integer(p.trim().parse()?)),
        [p, q] => Ok(Rat::new(p.trim().parse()?, q.trim().parse()?)),
        _ => Err(anyhow!("cannot parse rational {text:?}")),
    }
}

fn emit(value: &Value, output: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match output {
        Some(path) => std::fs::write(path, text + "\n")
            .with_context(|| format!("writing {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn instance_hash(g: &Graph, coloring_text: &str, k: usize, t: usize) -> String {
    let mut h = Sha256::new();
    h.update(write_graph6(g).as_bytes());
    h.update(b"\n");
    h.update(coloring_text.as_bytes());
    h.update(format!("k={k} t={t}").as_bytes());
    hex_string(&h.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn certificate_json(cert: &Certificate, hash: &str) -> Value {
    match cert {
        Certificate::RedEmbedding(map) => json!({
            "type": "red",
            "map": map,
            "instance_hash": hash,
        }),
        Certificate::BlueFans(fans) => json!({
            "type": "blue",
            "fans": fans.iter().map(|f| json!({"center": f.center, "pairs": f.pairs})).collect::<Vec<_>>(),
            "instance_hash": hash,
        }),
    }
}

/// Stars route to the hub solver (its range is far wider for them); the
/// canonical star numbering is remapped onto the input's labels.
fn dispatch_solve(
    c: &TwoColoring,
    g: &Graph,
    k: usize,
    t: usize,
    mode: SolveMode,
) -> Result<Certificate, SolveError> {
    let n = g.order();
    let star_center = (n >= 2 && g.size() == n - 1)
        .then(|| g.vertices().find(|&v| g.degree(v) == n - 1))
        .flatten();
    if let Some(center) = star_center {
        return match solve_star_vs_tfan(c, n, k, t, mode)? {
            Certificate::RedEmbedding(canon) => {
                // canon[0] hosts the center, the rest host leaves in order.
                let mut map = vec![0 as VertexId; n];
                map[center] = canon[0];
                for (leaf, host) in (0..n).filter(|&v| v != center).zip(&canon[1..]) {
                    map[leaf] = *host;
                }
                Ok(Certificate::RedEmbedding(map))
            }
            fans => Ok(fans),
        };
    }
    solve_tfan(c, g, k, t, mode)
}

fn build_family(target: &str, trial: u64, seed: u64) -> Result<Graph> {
    let parts: Vec<&str> = target.split(':').collect();
    let instance_seed = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(trial.wrapping_mul(0x100_0000_01B3));
    match parts.as_slice() {
        ["tree", n] => Ok(random_sparse_connected(n.parse()?, -1, instance_seed)?),
        ["unicyclic", n] => Ok(random_sparse_connected(n.parse()?, 0, instance_seed)?),
        ["sparse", n, extra] => {
            Ok(random_sparse_connected(n.parse()?, extra.parse()?, instance_seed)?)
        }
        ["star", n] => {
            let n: usize = n.parse()?;
            Ok(fangood::graph::build_named(fangood::graph::GraphFamily::Star(n))?)
        }
        _ => Err(anyhow!("unknown family {target:?}")),
    }
}

fn fuzz(target: &str, k: usize, t: usize, trials: u64, seed: u64, mode: SolveMode) -> Result<Value> {
    let fixed_graph =
        if target.contains(':') { None } else { Some(load_graph(Path::new(target))?) };

    #[derive(Clone, Copy, PartialEq)]
    enum Outcome {
        Red,
        Blue,
        Refused,
        Exhausted,
        Defect,
        BadCertificate,
    }

    let results: Vec<(u64, Outcome, Option<String>)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let g = match &fixed_graph {
                Some(g) => g.clone(),
                None => match build_family(target, trial, seed) {
                    Ok(g) => g,
                    Err(e) => return (trial, Outcome::Defect, Some(e.to_string())),
                },
            };
            let n = g.order();
            let board = 2 * n + t - 2;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial.wrapping_add(1));
            let c = TwoColoring::random(board, &mut rng);
            match dispatch_solve(&c, &g, k, t, mode) {
                Ok(cert) => match verify_certificate(&c, &g, k, t, &cert) {
                    Ok(()) => match cert {
                        Certificate::RedEmbedding(_) => (trial, Outcome::Red, None),
                        Certificate::BlueFans(_) => (trial, Outcome::Blue, None),
                    },
                    Err(e) => (trial, Outcome::BadCertificate, Some(e)),
                },
                Err(SolveError::Hypothesis(e)) => (trial, Outcome::Refused, Some(e)),
                Err(SolveError::Exhausted(e)) => (trial, Outcome::Exhausted, Some(e)),
                Err(SolveError::Defect(e)) => (trial, Outcome::Defect, Some(e)),
            }
        })
        .collect();

    let count = |o: Outcome| results.iter().filter(|r| r.1 == o).count() as u64;
    let (red, blue) = (count(Outcome::Red), count(Outcome::Blue));
    let defects = count(Outcome::Defect) + count(Outcome::BadCertificate);
    let mut failed_trials: Vec<u64> = results
        .iter()
        .filter(|r| matches!(r.1, Outcome::Defect | Outcome::BadCertificate))
        .map(|r| r.0)
        .collect();
    failed_trials.sort_unstable();
    for (trial, outcome, msg) in &results {
        if matches!(outcome, Outcome::Defect | Outcome::BadCertificate) {
            eprintln!("trial {trial}: {}", msg.as_deref().unwrap_or("engine defect"));
        }
    }
    Ok(json!({
        "target": target,
        "k": k,
        "t": t,
        "seed": seed,
        "trials": trials,
        "certified": red + blue,
        "red": red,
        "blue": blue,
        "refused": count(Outcome::Refused),
        "exhausted": count(Outcome::Exhausted),
        "failures": defects,
        "failed_trials": failed_trials,
    }))
}
