use serde::Serialize;

use super::{check_limit, ReductionError};
use crate::graph::Graph;

/// Hypergraph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, ReductionError> {
        if let Some(v) = edges.iter().flatten().find(|&&v| v >= n) {
            return Err(ReductionError::Invalid(format!(
                "hyperedge vertex {v} out of range"
            )));
        }
        Ok(Hypergraph { n, edges })
    }

    /// Sorts and deduplicates each hyperedge and appends the full vertex set
    /// as a last hyperedge when no hyperedge covers everything.
    ///
    /// Fails on fewer than two vertices or a hyperedge with fewer than two
    /// distinct vertices (such a hyperedge is monochromatic in every coloring).
    pub fn normalize(&self) -> Result<(Hypergraph, Vec<String>), ReductionError> {
        if self.n < 2 {
            return Err(ReductionError::Invalid("need at least two vertices".into()));
        }
        let mut log = Vec::new();
        let mut edges = Vec::with_capacity(self.edges.len() + 1);
        for (j, e) in self.edges.iter().enumerate() {
            let mut e = e.clone();
            e.sort_unstable();
            e.dedup();
            if e.len() < 2 {
                return Err(ReductionError::Invalid(format!(
                    "hyperedge {j} has fewer than two distinct vertices"
                )));
            }
            if e.len() != self.edges[j].len() {
                log.push(format!("hyperedge {j}: repeated vertices removed"));
            }
            edges.push(e);
        }
        let full = edges.iter().position(|e| e.len() == self.n);
        match full {
            Some(j) if j + 1 == edges.len() => {}
            Some(j) => {
                // The construction names the covering hyperedge last.
                let e = edges.remove(j);
                edges.push(e);
                log.push(format!(
                    "hyperedge {j} covers every vertex and was moved last"
                ));
            }
            None => {
                edges.push((0..self.n).collect());
                log.push("full hyperedge appended".into());
            }
        }
        Ok((Hypergraph { n: self.n, edges }, log))
    }

    /// Number of hyperedges containing each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &v in self.edges.iter().flatten() {
            d[v] += 1;
        }
        d
    }
}

/// The generated balanced instance and its pieces.
///
/// Vertex layout: hypergraph vertices `0..N`, then `s^ℓ_j`, `s^r_j` per
/// hyperedge, then the two big sides `L` and `R` of `6M + 3N - 5` vertices
/// each, then one subdivision vertex per incidence, in hyperedge order.
#[derive(Clone, Debug, Serialize)]
pub struct H2cReduction {
    #[serde(skip)]
    pub graph: Graph,
    /// The intermediate non-bipartite graph before subdivision.
    #[serde(skip)]
    pub core: Graph,
    pub core_k: usize,
    pub subdivisions: usize,
    pub k: usize,
    pub normalization: Vec<String>,
}

pub fn gen_bbc_from_h2c(hg: &Hypergraph) -> Result<H2cReduction, ReductionError> {
    let (hg, normalization) = hg.normalize()?;
    let (n, m) = (hg.n, hg.edges.len());
    let big = 6 * m + 3 * n - 5;
    let s_left = |j: usize| n + j;
    let s_right = |j: usize| n + m + j;
    let l_side = |i: usize| n + 2 * m + i;
    let r_side = |i: usize| n + 2 * m + big + i;
    let core_n = n + 2 * m + 2 * big;
    debug_assert_eq!(core_n, 14 * m + 7 * n - 10);

    let build = |subdivide: bool| {
        let mut g = Graph::new(core_n);
        let add = |g: &mut Graph, u, v| {
            g.add_edge(u, v).expect("construction edges are valid");
        };
        for (j, e) in hg.edges.iter().enumerate() {
            for &v in e {
                if subdivide {
                    let mid = g.add_vertex();
                    add(&mut g, v, mid);
                    add(&mut g, mid, s_left(j));
                } else {
                    add(&mut g, v, s_left(j));
                }
                add(&mut g, v, s_right(j));
            }
        }
        for a in 0..big {
            for b in 0..big {
                add(&mut g, l_side(a), r_side(b));
            }
            for j in 0..m {
                add(&mut g, l_side(a), s_right(j));
                add(&mut g, r_side(a), s_left(j));
            }
        }
        g
    };
    let core = build(false);
    let graph = build(true);
    let subdivisions = graph.n() - core_n;
    let core_k = 2 * m + n - 2;
    Ok(H2cReduction {
        graph,
        core,
        core_k,
        subdivisions,
        k: core_k + subdivisions,
        normalization,
    })
}

/// Some 2-coloring leaves no hyperedge monochromatic.
pub fn solve_h2c_brute(hg: &Hypergraph) -> Result<bool, ReductionError> {
    check_limit("hypergraph", hg.n)?;
    let masks: Vec<u32> = hg
        .edges
        .iter()
        .map(|e| e.iter().fold(0, |m, &v| m | 1 << v))
        .collect();
    Ok((0u32..1 << hg.n).any(|color| masks.iter().all(|&e| e & color != 0 && e & !color != 0)))
}
