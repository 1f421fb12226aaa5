use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, ensure, Context, Result};
use biclique_core::certify::{check_partition, verify_solution, Bipartition, ContractionSolution};
use biclique_core::fpt::{FptConfig, FptSolver};
use biclique_core::graph::generators::all_connected_labeled_graphs;
use biclique_core::graph::Graph;
use biclique_core::io::{
    parse_edge_list, parse_hypergraph, parse_rbds, write_edge_list, CertificateFile,
    ParsedCertificate,
};
use biclique_core::kernel::{kernelize_bbc, Outcome, RuleApplication};
use biclique_core::oracle::{Oracle, OracleConfig, DEFAULT_LIMIT, MAX_LIMIT};
use biclique_core::reductions::{
    gen_bbc_from_h2c, gen_bc_from_is, gen_bc_from_rbds, solve_h2c_brute, solve_is_brute,
    solve_rbds_brute,
};
use biclique_core::Verdict;
use rayon::prelude::*;
use serde::Serialize;

use crate::report::{pretty, read, sidecar_path, write, RunReport};
use crate::{Engine, SourceKind};

const YES: u8 = 0;
const NO: u8 = 1;

fn load_graph(path: &Path) -> Result<(Graph, Vec<u8>)> {
    let (text, bytes) = read(path)?;
    let g = parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((g, bytes))
}

fn load_connected(path: &Path) -> Result<(Graph, Vec<u8>)> {
    let (g, bytes) = load_graph(path)?;
    ensure!(g.is_connected(), "{} is disconnected", path.display());
    Ok((g, bytes))
}

/// Oracle vertex cap, from `BICLIQUE_ORACLE_LIMIT` when set.
fn oracle_limit() -> Result<usize> {
    match std::env::var("BICLIQUE_ORACLE_LIMIT") {
        Ok(v) => {
            let limit: usize = v
                .parse()
                .map_err(|_| anyhow!("BICLIQUE_ORACLE_LIMIT must be a number, got {v:?}"))?;
            ensure!(
                limit <= MAX_LIMIT,
                "BICLIQUE_ORACLE_LIMIT is capped at {MAX_LIMIT}"
            );
            Ok(limit)
        }
        Err(_) => Ok(DEFAULT_LIMIT),
    }
}

fn oracle_engine(parallel: bool) -> Result<Oracle> {
    Ok(Oracle::new(OracleConfig {
        limit: oracle_limit()?,
        parallel,
    }))
}

pub struct SolveArgs {
    pub graph: PathBuf,
    pub budget: usize,
    pub balanced: bool,
    pub engine: Engine,
    pub certificate: Option<PathBuf>,
    pub trace: bool,
    pub node_limit: Option<u64>,
    pub parallel: bool,
}

pub fn solve(a: SolveArgs) -> Result<u8> {
    let (g, bytes) = load_connected(&a.graph)?;
    let mut report = RunReport::new("solve", &a.graph, &bytes);
    report.budget = Some(a.budget);
    report.balanced = Some(a.balanced);
    let found = match a.engine {
        Engine::Fpt => {
            report.engine = Some("fpt");
            let solver = FptSolver::new(FptConfig {
                node_limit: a.node_limit,
                parallel: a.parallel,
            });
            let (verdict, stats) = solver.solve(&g, a.budget, a.balanced)?;
            if a.trace {
                report.counters = Some(serde_json::to_value(&stats)?);
            }
            match verdict {
                Verdict::Yes(c) => Some(c.partition),
                Verdict::No => None,
                Verdict::BudgetExceeded => bail!("node limit reached before an answer"),
            }
        }
        Engine::Oracle => {
            report.engine = Some("oracle");
            oracle_engine(a.parallel)?
                .decide(&g, a.budget, a.balanced)?
                .certificate
        }
    };
    finish(
        report,
        found,
        a.budget,
        a.balanced,
        a.certificate.as_deref(),
    )
}

fn finish(
    mut report: RunReport,
    found: Option<Bipartition>,
    budget: usize,
    balanced: bool,
    certificate: Option<&Path>,
) -> Result<u8> {
    report.answer(found.is_some());
    if let (Some(p), Some(path)) = (&found, certificate) {
        write(
            path,
            &CertificateFile::from_partition(p, budget, balanced).to_json(),
        )?;
        report.certificate = Some(path.display().to_string());
    }
    report.emit();
    Ok(if found.is_some() { YES } else { NO })
}

pub fn oracle(
    graph: &Path,
    budget: Option<usize>,
    balanced: bool,
    certificate: Option<PathBuf>,
    parallel: bool,
) -> Result<u8> {
    let (g, bytes) = load_connected(graph)?;
    let oracle = oracle_engine(parallel)?;
    let mut report = RunReport::new("oracle", graph, &bytes);
    report.balanced = Some(balanced);
    report.engine = Some("oracle");
    match budget {
        Some(k) => {
            report.budget = Some(k);
            let found = oracle.decide(&g, k, balanced)?.certificate;
            finish(report, found, k, balanced, certificate.as_deref())
        }
        None => {
            let min_k = oracle.min_k(&g, balanced)?;
            report.counters = Some(serde_json::json!({ "min_k": min_k }));
            report.emit();
            Ok(if min_k.is_some() { YES } else { NO })
        }
    }
}

pub fn verify(
    graph: &Path,
    certificate: &Path,
    budget: Option<usize>,
    balanced: bool,
) -> Result<u8> {
    let (g, bytes) = load_graph(graph)?;
    let (text, _) = read(certificate)?;
    let file = CertificateFile::from_json(&text)?;
    let budget = budget
        .or(file.budget)
        .ok_or_else(|| anyhow!("no budget in the certificate; pass --budget"))?;
    let balanced = balanced || file.balanced.unwrap_or(false);
    let mut report = RunReport::new("verify", graph, &bytes);
    report.budget = Some(budget);
    report.balanced = Some(balanced);
    report.certificate = Some(certificate.display().to_string());
    let valid = match file.parse()? {
        ParsedCertificate::Partition(p) => {
            check_ids(&g, &p)?;
            let verdict = check_partition(&g, &p, budget, balanced)?;
            report.counters = Some(serde_json::json!({
                "sf_total": verdict.sf_total,
                "left_components": verdict.left_components,
                "right_components": verdict.right_components,
                "failed_condition": verdict.failed_condition,
            }));
            verdict.is_valid()
        }
        ParsedCertificate::Edges(edges) => {
            if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
                bail!("certificate edge {} {} is not in the graph", u + 1, v + 1);
            }
            verify_solution(&g, &ContractionSolution { edges, balanced }, budget)
        }
    };
    report.answer(valid);
    report.emit();
    Ok(if valid { YES } else { NO })
}

/// Partition ids must cover the graph exactly; reported 1-based.
fn check_ids(g: &Graph, p: &Bipartition) -> Result<()> {
    if let Some(v) = p.left.intersection(&p.right).first() {
        bail!("vertex {} is on both sides", v + 1);
    }
    let all = p.left.union(&p.right);
    if let Some(v) = all.difference(g.vertices()).first() {
        bail!("vertex {} is not in the graph", v + 1);
    }
    if let Some(v) = g.vertices().difference(&all).first() {
        bail!("vertex {} is missing from the certificate", v + 1);
    }
    Ok(())
}

#[derive(Serialize)]
struct KernelSidecar<'a> {
    original_n: usize,
    reduced_n: usize,
    final_k: usize,
    outcome: Outcome,
    rule_applications: &'a [RuleApplication],
}

pub fn kernelize(graph: &Path, budget: usize, output: &Path) -> Result<u8> {
    let (g, bytes) = load_graph(graph)?;
    let state = kernelize_bbc(&g, budget)?;
    let (h, k) = state.instance();
    write(output, &write_edge_list(&h))?;
    let sidecar = KernelSidecar {
        original_n: g.n(),
        reduced_n: h.n(),
        final_k: k,
        outcome: state.outcome,
        rule_applications: &state.log,
    };
    write(&sidecar_path(output), &pretty(&sidecar))?;
    let mut report = RunReport::new("kernelize", graph, &bytes);
    report.budget = Some(budget);
    report.balanced = Some(true);
    report.counters =
        Some(serde_json::json!({ "reduced_n": h.n(), "final_k": k, "outcome": state.outcome }));
    report.emit();
    Ok(if state.outcome == Outcome::TrivialNo {
        NO
    } else {
        YES
    })
}

#[derive(Serialize)]
struct Provenance {
    kind: &'static str,
    source: String,
    /// Answer of the source instance, when small enough to brute-force.
    source_answer: Option<bool>,
    budget: usize,
    balanced: bool,
    vertices: usize,
    edges: usize,
    construction: serde_json::Value,
    normalization: Vec<String>,
}

pub fn generate(kind: SourceKind, source: &Path, output: &Path, k_is: Option<usize>) -> Result<u8> {
    let (text, bytes) = read(source)?;
    let parse_ctx = || format!("parsing {}", source.display());
    let (graph, provenance) = match kind {
        SourceKind::Rbds => {
            let inst = parse_rbds(&text).with_context(parse_ctx)?;
            let red = gen_bc_from_rbds(&inst)?;
            let prov = Provenance {
                kind: "rbds",
                source: source.display().to_string(),
                source_answer: solve_rbds_brute(&inst).ok(),
                budget: red.k,
                balanced: false,
                vertices: red.graph.n(),
                edges: red.graph.m(),
                construction: serde_json::json!({
                    "red": red.n_red,
                    "blue": red.n_blue,
                    "kappa": red.k - red.n_blue,
                    "apex": red.apex + 1,
                    "apex_pendants": red.apex_pendants,
                }),
                normalization: red.normalization.clone(),
            };
            (red.graph, prov)
        }
        SourceKind::H2c => {
            let hg = parse_hypergraph(&text).with_context(parse_ctx)?;
            let red = gen_bbc_from_h2c(&hg)?;
            let (normalized, _) = hg.normalize()?;
            let prov = Provenance {
                kind: "h2c",
                source: source.display().to_string(),
                source_answer: solve_h2c_brute(&normalized).ok(),
                budget: red.k,
                balanced: true,
                vertices: red.graph.n(),
                edges: red.graph.m(),
                construction: serde_json::json!({
                    "hypergraph_vertices": normalized.n,
                    "hyperedges": normalized.edges.len(),
                    "core_vertices": red.core.n(),
                    "core_k": red.core_k,
                    "subdivisions": red.subdivisions,
                }),
                normalization: red.normalization.clone(),
            };
            (red.graph, prov)
        }
        SourceKind::Is => {
            let k_is = k_is.ok_or_else(|| anyhow!("`generate is` needs --k-is"))?;
            let h = parse_edge_list(&text).with_context(parse_ctx)?;
            let red = gen_bc_from_is(&h, k_is);
            let budget = red
                .budget()
                .ok_or_else(|| anyhow!("--k-is {k_is} exceeds the number of vertices"))?;
            let prov = Provenance {
                kind: "is",
                source: source.display().to_string(),
                source_answer: solve_is_brute(&h, k_is).ok(),
                budget,
                balanced: false,
                vertices: red.graph.n(),
                edges: red.graph.m(),
                construction: serde_json::json!({
                    "k_is": k_is,
                    "ell": red.ell,
                    "universal": red.universal + 1,
                }),
                normalization: Vec::new(),
            };
            (red.graph, prov)
        }
    };
    write(output, &write_edge_list(&graph))?;
    write(&sidecar_path(output), &pretty(&provenance))?;
    let mut report = RunReport::new("generate", source, &bytes);
    report.budget = Some(provenance.budget);
    report.balanced = Some(provenance.balanced);
    report.emit();
    Ok(YES)
}

pub fn selftest(max_n: usize, max_k: usize, parallel: bool) -> Result<u8> {
    ensure!(
        max_n <= 7,
        "selftest enumerates every labeled graph; use --max-n 7 or less"
    );
    let oracle = Oracle::new(OracleConfig::default());
    let solver = FptSolver::new(FptConfig::default());
    let mut graphs = 0usize;
    let mut checks = 0usize;
    let mut disagreements = Vec::new();
    for n in 1..=max_n {
        let batch: Vec<Graph> = all_connected_labeled_graphs(n).collect();
        graphs += batch.len();
        let check = |g: &Graph| -> Vec<String> {
            let mut bad = Vec::new();
            for k in 0..=max_k {
                for balanced in [false, true] {
                    let expected = oracle.decide(g, k, balanced).expect("small graph").answer;
                    let (verdict, _) = solver.solve(g, k, balanced).expect("connected graph");
                    let cert_ok = verdict
                        .certificate()
                        .is_none_or(|c| verify_solution(g, &c.solution, k));
                    if verdict.is_yes() != expected || !cert_ok {
                        bad.push(format!("{:?} k={k} balanced={balanced}", g.edges()));
                    }
                }
            }
            bad
        };
        let bad: Vec<String> = if parallel {
            batch.par_iter().flat_map(check).collect()
        } else {
            batch.iter().flat_map(check).collect()
        };
        checks += batch.len() * (max_k + 1) * 2;
        disagreements.extend(bad);
    }
    println!(
        "{}",
        serde_json::json!({
            "command": "selftest",
            "max_n": max_n,
            "max_k": max_k,
            "graphs": graphs,
            "checks": checks,
            "disagreements": disagreements.len(),
            "examples": disagreements.iter().take(5).collect::<Vec<_>>(),
        })
    );
    Ok(if disagreements.is_empty() { YES } else { NO })
}
