//! Biclique modulators via cluster vertex deletion on the complement.
//!
//! `G - Z` is a biclique exactly when the complement of `G - Z` is a
//! disjoint union of at most two cliques. We branch three ways on induced
//! `P3`s of the complement; once it is `P3`-free every component is a
//! clique and all but the two largest must go.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::graph::{is_biclique, Graph, Vertex, VertexSet};

/// A vertex set `z` with `G - z` a biclique on parts `x`, `y`, `|x| ≤ |y|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modulator {
    pub z: VertexSet,
    pub x: VertexSet,
    pub y: VertexSet,
}

impl Modulator {
    fn from_deletion(g: &Graph, z: VertexSet) -> Modulator {
        let parts = is_biclique(&g.without(&z)).expect("deletion set is a biclique modulator");
        let (x, y) = if parts.left.len() <= parts.right.len() {
            (parts.left, parts.right)
        } else {
            (parts.right, parts.left)
        };
        Modulator { z, x, y }
    }
}

/// A modulator of size at most `bound`, or `None` if there is none.
pub fn find_biclique_modulator(g: &Graph, bound: usize) -> Option<Modulator> {
    let nodes = AtomicU64::new(0);
    search_with_stats(g, bound, &nodes)
}

/// A minimum modulator among those of size at most `bound`.
pub fn find_minimum_modulator(g: &Graph, bound: usize, nodes: &AtomicU64) -> Option<Modulator> {
    (0..=bound).find_map(|b| search_with_stats(g, b, nodes))
}

fn search_with_stats(g: &Graph, bound: usize, nodes: &AtomicU64) -> Option<Modulator> {
    let h = g.complement();
    let z = branch(h, VertexSet::new(), bound, nodes)?;
    Some(Modulator::from_deletion(g, z))
}

fn branch(h: Graph, deleted: VertexSet, budget: usize, nodes: &AtomicU64) -> Option<VertexSet> {
    nodes.fetch_add(1, Ordering::Relaxed);
    match induced_p3(&h) {
        Some(p3) => {
            if budget == 0 {
                return None;
            }
            p3.into_iter().find_map(|v| {
                let mut h2 = h.clone();
                h2.remove_vertex_in_place(v);
                let mut d2 = deleted.clone();
                d2.insert(v);
                branch(h2, d2, budget - 1, nodes)
            })
        }
        None => {
            let mut cliques = h.components(h.vertices());
            // Largest first, ties by smallest id.
            cliques.sort_by(|a, b| {
                b.len()
                    .cmp(&a.len())
                    .then_with(|| a.first().cmp(&b.first()))
            });
            let extra: usize = cliques.iter().skip(2).map(VertexSet::len).sum();
            if extra > budget {
                return None;
            }
            let mut out = deleted;
            for c in cliques.iter().skip(2) {
                out.union_with(c);
            }
            Some(out)
        }
    }
}

/// An induced path `a - b - c` (as `[a, b, c]`), smallest center first.
fn induced_p3(h: &Graph) -> Option<[Vertex; 3]> {
    for b in h.vertices() {
        let nb = h.neighbors(b);
        if nb.len() < 2 {
            continue;
        }
        for a in nb {
            let mut rest = nb.difference(h.neighbors(a));
            rest.remove(a);
            if let Some(c) = rest.first() {
                return Some([a, b, c]);
            }
        }
    }
    None
}
