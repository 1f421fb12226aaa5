//! Small named graphs and exhaustive enumeration for tests and the selftest.

use super::{Graph, Vertex};

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v).unwrap();
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0).unwrap();
    }
    g
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v).unwrap();
    }
    g
}

/// `K_{p,q}` with parts `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut g = Graph::new(p + q);
    for u in 0..p {
        for v in p..p + q {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Disjoint union; the second graph's ids are shifted by `a.id_bound()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.id_bound();
    let mut g = Graph::new(shift + b.id_bound());
    for (u, v) in a.edges() {
        g.add_edge(u, v).unwrap();
    }
    for (u, v) in b.edges() {
        g.add_edge(u + shift, v + shift).unwrap();
    }
    g
}

/// Every labeled graph on `0..n`, one per subset of the `n(n-1)/2` pairs.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "enumeration is limited to n <= 8");
    (0u32..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    })
}

pub fn all_connected_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_labeled_graphs(n).filter(Graph::is_connected)
}
