#![allow(dead_code)]

use std::collections::BTreeSet;

use biclique_core::graph::Graph;
use rand::Rng;

/// Random spanning tree plus independent extra edges with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// `K_{a,b}` with `flips` random vertex pairs toggled.
pub fn near_biclique<R: Rng>(rng: &mut R, a: usize, b: usize, flips: usize) -> Graph {
    let n = a + b;
    let mut edges = BTreeSet::new();
    for u in 0..a {
        for v in a..n {
            edges.insert((u, v));
        }
    }
    for _ in 0..flips {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            let e = (u.min(v), u.max(v));
            if !edges.remove(&e) {
                edges.insert(e);
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Red-blue instance that normalization leaves unchanged: every blue vertex
/// has at least two red neighbors and `kappa < n_red`.
pub fn random_normalized_rbds<R: Rng>(
    rng: &mut R,
    n_red: usize,
    n_blue: usize,
) -> biclique_core::reductions::RbdsInstance {
    assert!(n_red >= 2 && n_blue >= 1);
    let mut edges = Vec::new();
    for b in 0..n_blue {
        let mut reds: Vec<usize> = (0..n_red).filter(|_| rng.gen_bool(0.4)).collect();
        while reds.len() < 2 {
            let r = rng.gen_range(0..n_red);
            if !reds.contains(&r) {
                reds.push(r);
            }
        }
        edges.extend(reds.into_iter().map(|r| (r, b)));
    }
    let kappa = rng.gen_range(0..n_red);
    biclique_core::reductions::RbdsInstance::new(n_red, n_blue, &edges, kappa).unwrap()
}
