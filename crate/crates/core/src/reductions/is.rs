use serde::Serialize;

use super::{check_limit, ReductionError};
use crate::graph::Graph;

/// `h` plus a universal vertex, with the target biclique size `ell`.
///
/// `h` has an independent set of size `k_is` exactly when the result
/// contracts to a biclique on at least `ell = k_is + 1` vertices. Any
/// biclique obtained this way is a star centered at the class of the
/// universal vertex, whose leaves pick out an independent set.
#[derive(Clone, Debug, Serialize)]
pub struct IsReduction {
    #[serde(skip)]
    pub graph: Graph,
    pub ell: usize,
    pub universal: usize,
}

impl IsReduction {
    /// Contractions allowed by the target size.
    pub fn budget(&self) -> Option<usize> {
        self.graph.n().checked_sub(self.ell)
    }
}

pub fn gen_bc_from_is(h: &Graph, k_is: usize) -> IsReduction {
    let mut graph = h.clone();
    let universal = graph.add_vertex();
    for v in h.vertices() {
        graph.add_edge(universal, v).expect("fresh vertex");
    }
    IsReduction {
        graph,
        ell: k_is + 1,
        universal,
    }
}

/// `h` has an independent set of size `k_is`.
pub fn solve_is_brute(h: &Graph, k_is: usize) -> Result<bool, ReductionError> {
    check_limit("graph", h.n())?;
    if k_is > h.n() {
        return Ok(false);
    }
    let verts = h.vertices().to_vec();
    let adj: Vec<u32> = verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|(_, &w)| h.has_edge(v, w))
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect();
    Ok((0u32..1 << verts.len()).any(|s| {
        s.count_ones() as usize == k_is
            && (0..verts.len()).all(|i| s >> i & 1 == 0 || adj[i] & s == 0)
    }))
}
