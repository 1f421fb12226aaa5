use serde::{Deserialize, Serialize};

use super::{Graph, Vertex, VertexSet};
use crate::certify::Bipartition;

/// Recognizes bicliques directly: at most one non-trivial component, no
/// isolated vertices next to it, a proper 2-coloring, and completeness
/// across the two colors.
///
/// Edgeless graphs are bicliques with bipartition `⟨V, ∅⟩`. Otherwise the
/// first part is the color class of the smallest vertex.
pub fn is_biclique(g: &Graph) -> Option<Bipartition> {
    if g.m() == 0 {
        return Some(Bipartition::new(g.vertices().clone(), VertexSet::new()));
    }
    let start = g.vertices().iter().find(|&v| g.degree(v) > 0)?;
    let comp = g.reach_within(start, g.vertices());
    if comp.len() != g.n() {
        // A non-trivial component plus anything else contains K1+K2.
        return None;
    }
    let root = g.vertices().first()?;
    let mut side = vec![u8::MAX; g.id_bound()];
    side[root] = 0;
    let mut stack = vec![root];
    let (mut x, mut y) = (VertexSet::singleton(root), VertexSet::new());
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[u];
                if side[w] == 0 {
                    x.insert(w);
                } else {
                    y.insert(w);
                }
                stack.push(w);
            } else if side[w] == side[u] {
                return None;
            }
        }
    }
    if x.iter().any(|v| g.neighbors(v) != &y) {
        return None;
    }
    Some(Bipartition::new(x, y))
}

/// Edgeless graphs count as balanced exactly when `n` is even; `K1` is a
/// biclique but not a balanced one.
pub fn is_balanced_biclique(g: &Graph) -> bool {
    if g.m() == 0 {
        return g.n().is_multiple_of(2);
    }
    is_biclique(g).is_some_and(|p| p.left.len() == p.right.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ForbiddenKind {
    #[serde(rename = "K3")]
    Triangle,
    #[serde(rename = "K1+K2")]
    EdgePlusVertex,
}

/// An induced `K3` or `K1+K2`. For `K1+K2` the isolated vertex comes first
/// and the remaining two are the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Forbidden {
    pub kind: ForbiddenKind,
    pub vertices: [Vertex; 3],
}

/// Looks for an induced `K3` or `K1+K2`.
///
/// A graph is free of both exactly when, for every edge `uv`, each other
/// vertex sees exactly one of `u`, `v`. Edges are scanned in lexicographic
/// order and the smallest offending third vertex is reported.
pub fn find_forbidden(g: &Graph) -> Option<Forbidden> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        let mut missing = g.vertices().difference(g.neighbors(u));
        missing.difference_with(g.neighbors(v));
        missing.remove(u);
        missing.remove(v);
        match (common.first(), missing.first()) {
            (None, None) => continue,
            (Some(w), m) if m.is_none_or(|m| w < m) => {
                return Some(Forbidden {
                    kind: ForbiddenKind::Triangle,
                    vertices: [w, u, v],
                })
            }
            (_, Some(w)) => {
                return Some(Forbidden {
                    kind: ForbiddenKind::EdgePlusVertex,
                    vertices: [w, u, v],
                })
            }
            (Some(_), None) => unreachable!(),
        }
    }
    None
}
