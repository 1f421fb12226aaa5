use serde::Serialize;

use super::{check_limit, ReductionError};
use crate::graph::Graph;

/// Bipartite graph on red vertices `0..n_red` and blue vertices
/// `0..n_blue`, with budget `kappa`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbdsInstance {
    pub n_red: usize,
    pub n_blue: usize,
    /// `(red, blue)` pairs, sorted and deduplicated.
    pub edges: Vec<(usize, usize)>,
    pub kappa: usize,
}

impl RbdsInstance {
    pub fn new(
        n_red: usize,
        n_blue: usize,
        edges: &[(usize, usize)],
        kappa: usize,
    ) -> Result<Self, ReductionError> {
        if let Some(&(r, b)) = edges.iter().find(|&&(r, b)| r >= n_red || b >= n_blue) {
            return Err(ReductionError::Invalid(format!(
                "edge ({r}, {b}) out of range"
            )));
        }
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        edges.dedup();
        Ok(RbdsInstance {
            n_red,
            n_blue,
            edges,
            kappa,
        })
    }

    fn red_degree_of_blue(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_blue];
        for &(_, b) in &self.edges {
            deg[b] += 1;
        }
        deg
    }

    /// Brings the instance into the shape the construction needs without
    /// changing its answer, and describes each step taken.
    ///
    /// * A blue vertex with a single red neighbor gets a fresh red neighbor
    ///   of its own; the old neighbor dominates at least as much.
    /// * While `|R| ≤ κ`, add a red vertex adjacent to all of `B`. With
    ///   `|R| ≤ κ` the answer is already yes (take all of `R`).
    ///
    /// Fails when `B` is empty or some blue vertex has no red neighbor.
    pub fn normalize(&self) -> Result<(RbdsInstance, Vec<String>), ReductionError> {
        if self.n_blue == 0 {
            return Err(ReductionError::Invalid("no blue vertices".into()));
        }
        let deg = self.red_degree_of_blue();
        if let Some(b) = deg.iter().position(|&d| d == 0) {
            return Err(ReductionError::Invalid(format!(
                "blue vertex {b} has no red neighbor"
            )));
        }
        let mut out = self.clone();
        let mut log = Vec::new();
        for (b, &d) in deg.iter().enumerate() {
            if d == 1 {
                out.edges.push((out.n_red, b));
                log.push(format!(
                    "red {} added as second neighbor of blue {b}",
                    out.n_red
                ));
                out.n_red += 1;
            }
        }
        while out.n_red <= out.kappa {
            out.edges.extend((0..out.n_blue).map(|b| (out.n_red, b)));
            log.push(format!(
                "red {} added adjacent to every blue vertex",
                out.n_red
            ));
            out.n_red += 1;
        }
        out.edges.sort_unstable();
        Ok((out, log))
    }
}

/// Vertex layout of the generated graph: red, blue, blue pendants, apex,
/// then the apex pendants.
#[derive(Clone, Debug, Serialize)]
pub struct RbdsReduction {
    #[serde(skip)]
    pub graph: Graph,
    pub k: usize,
    pub n_red: usize,
    pub n_blue: usize,
    pub apex: usize,
    pub apex_pendants: usize,
    pub normalization: Vec<String>,
}

pub fn gen_bc_from_rbds(inst: &RbdsInstance) -> Result<RbdsReduction, ReductionError> {
    let (inst, normalization) = inst.normalize()?;
    let (nr, nb) = (inst.n_red, inst.n_blue);
    let blue = |b: usize| nr + b;
    let pendant = |b: usize| nr + nb + b;
    let apex = nr + 2 * nb;
    let extra = inst.kappa + nb + 1;
    let mut g = Graph::new(apex + 1 + extra);
    let mut add = |u, v| {
        g.add_edge(u, v).expect("construction edges are valid");
    };
    for &(r, b) in &inst.edges {
        add(r, blue(b));
    }
    for b in 0..nb {
        add(blue(b), pendant(b));
    }
    for r in 0..nr {
        add(r, apex);
    }
    for c in 0..extra {
        add(apex, apex + 1 + c);
    }
    Ok(RbdsReduction {
        graph: g,
        k: inst.kappa + nb,
        n_red: nr,
        n_blue: nb,
        apex,
        apex_pendants: extra,
        normalization,
    })
}

/// Some `S ⊆ R` with `|S| ≤ κ` dominates `B`.
pub fn solve_rbds_brute(inst: &RbdsInstance) -> Result<bool, ReductionError> {
    check_limit("red side", inst.n_red)?;
    let mut dominated = vec![0u64; inst.n_red];
    for &(r, b) in &inst.edges {
        dominated[r] |= 1 << b;
    }
    assert!(inst.n_blue < 64, "blue side too large for the mask search");
    let all = (1u64 << inst.n_blue) - 1;
    Ok((0u32..1 << inst.n_red)
        .filter(|s| s.count_ones() as usize <= inst.kappa)
        .any(|s| {
            (0..inst.n_red)
                .filter(|r| s >> r & 1 == 1)
                .fold(0, |m, r| m | dominated[r])
                == all
        }))
}
