//! Simple undirected graphs with stable vertex ids.
//!
//! Every operation here is pure: it takes `&Graph` and hands back a fresh
//! value. The solvers that need to mutate a private working copy use the
//! crate-internal `*_in_place` variants.

mod biclique;
mod contraction;
pub mod generators;
mod vertex_set;

pub use biclique::{find_forbidden, is_balanced_biclique, is_biclique, Forbidden, ForbiddenKind};
pub use contraction::{Contraction, ContractionTrace};
pub use vertex_set::{Iter as VertexSetIter, Vertex, VertexSet};

use thiserror::Error;

/// An unordered edge, stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

pub fn normalize_edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0}-{1} is not present in the graph")]
    InvalidEdge(Vertex, Vertex),
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} is not present in the graph")]
    UnknownVertex(Vertex),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: VertexSet,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on ids `0..n`.
    pub fn new(n: usize) -> Self {
        Graph {
            vertices: VertexSet::full(n),
            adj: vec![VertexSet::new(); n],
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `uv`. Returns whether the edge was new.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if !self.vertices.contains(w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        if fresh {
            self.m += 1;
        }
        Ok(fresh)
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        let v = self.adj.len();
        self.adj.push(VertexSet::new());
        self.vertices.insert(v);
        v
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// One past the largest id ever allocated.
    pub fn id_bound(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].contains(v)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in &self.vertices {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Edges with one endpoint in `a` and the other in `b`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in a {
            for v in self.adj[u].intersection(b).iter() {
                if !a.contains(v) || !b.contains(u) || u < v {
                    out.push(normalize_edge(u, v));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `N(S) = (∪_{v∈S} N(v)) \ S`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    /// Contracts `uv`. The merged vertex keeps the smaller id.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.contract_in_place(u, v)?;
        Ok(g)
    }

    /// Contracts every edge of `f`, tracking endpoints through their
    /// representatives. Edges whose endpoints were already merged are
    /// reported in [`Contraction::skipped`] instead of creating a loop.
    pub fn contract_edges(&self, f: &[Edge]) -> Result<Contraction, GraphError> {
        for &(u, v) in f {
            if !self.has_edge(u, v) {
                return Err(GraphError::InvalidEdge(u, v));
            }
        }
        let mut graph = self.clone();
        let mut trace = ContractionTrace::new(self.id_bound());
        let mut skipped = Vec::new();
        for &(u, v) in f {
            let (ru, rv) = (trace.representative(u), trace.representative(v));
            if ru == rv {
                skipped.push(normalize_edge(u, v));
                continue;
            }
            let survivor = graph.contract_in_place(ru, rv)?;
            trace.record(survivor, ru + rv - survivor);
        }
        Ok(Contraction {
            graph,
            trace,
            skipped,
        })
    }

    pub(crate) fn contract_in_place(&mut self, u: Vertex, v: Vertex) -> Result<Vertex, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::InvalidEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let absorbed = std::mem::take(&mut self.adj[gone]);
        self.m -= absorbed.len();
        for w in &absorbed {
            self.adj[w].remove(gone);
            if w != keep && self.adj[keep].insert(w) {
                self.adj[w].insert(keep);
                self.m += 1;
            }
        }
        self.vertices.remove(gone);
        Ok(keep)
    }

    pub(crate) fn remove_vertex_in_place(&mut self, v: Vertex) {
        if !self.vertices.remove(v) {
            return;
        }
        let nbrs = std::mem::take(&mut self.adj[v]);
        self.m -= nbrs.len();
        for w in &nbrs {
            self.adj[w].remove(v);
        }
    }

    /// Graph with the vertices of `s` removed; ids are preserved.
    pub fn without(&self, s: &VertexSet) -> Graph {
        let keep = self.vertices.difference(s);
        self.induced(&keep)
    }

    /// `G[s]` with original ids.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let vertices = self.vertices.intersection(s);
        let mut adj = vec![VertexSet::new(); self.adj.len()];
        let mut m2 = 0;
        for v in &vertices {
            adj[v] = self.adj[v].intersection(&vertices);
            m2 += adj[v].len();
        }
        Graph {
            vertices,
            adj,
            m: m2 / 2,
        }
    }

    /// Complement on the same id set.
    pub fn complement(&self) -> Graph {
        let mut adj = vec![VertexSet::new(); self.adj.len()];
        let mut m2 = 0;
        for v in &self.vertices {
            let mut row = self.vertices.difference(&self.adj[v]);
            row.remove(v);
            m2 += row.len();
            adj[v] = row;
        }
        Graph {
            vertices: self.vertices.clone(),
            adj,
            m: m2 / 2,
        }
    }

    /// Connected components of `G[s]`, ordered by minimum vertex id.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut rest = s.intersection(&self.vertices);
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let comp = self.reach_within(start, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self, s: &VertexSet) -> usize {
        let mut rest = s.intersection(&self.vertices);
        let mut count = 0;
        while let Some(start) = rest.first() {
            let comp = self.reach_within(start, &rest);
            rest.difference_with(&comp);
            count += 1;
        }
        count
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach_within(&self, start: Vertex, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = vec![start];
        while let Some(u) = frontier.pop() {
            for w in &self.adj[u] {
                if within.contains(w) && seen.insert(w) {
                    frontier.push(w);
                }
            }
        }
        seen
    }

    /// Number of edges in a spanning forest of `G[s]`.
    pub fn sf_size(&self, s: &VertexSet) -> usize {
        let s = s.intersection(&self.vertices);
        s.len() - self.component_count(&s)
    }

    /// Edges of a BFS spanning forest of `G[s]`.
    pub fn spanning_forest(&self, s: &VertexSet) -> Vec<Edge> {
        let mut rest = s.intersection(&self.vertices);
        let mut out = Vec::new();
        while let Some(root) = rest.first() {
            rest.remove(root);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].intersection(&rest).iter() {
                    rest.remove(w);
                    out.push(normalize_edge(u, w));
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices.first() {
            None => true,
            Some(v) => self.reach_within(v, &self.vertices).len() == self.n(),
        }
    }

    /// Proper 2-coloring exists.
    pub fn is_bipartite(&self) -> bool {
        let mut side = VertexSet::new();
        let mut seen = VertexSet::new();
        for root in &self.vertices {
            if !seen.insert(root) {
                continue;
            }
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for w in &self.adj[u] {
                    if seen.insert(w) {
                        if !side.contains(u) {
                            side.insert(w);
                        }
                        stack.push(w);
                    } else if side.contains(w) == side.contains(u) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Relabels the present vertices to `0..n` in id order.
    pub fn compacted(&self) -> (Graph, Vec<Vertex>) {
        let order = self.vertices.to_vec();
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(order.len());
        for (u, v) in self.edges() {
            g.add_edge(index[u], index[v])
                .expect("compaction keeps edges simple");
        }
        (g, order)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// Brute-force isomorphism on small graphs: try every bijection.
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        let (a, _) = a.compacted();
        let (b, _) = b.compacted();
        if a.n() != b.n() || a.m() != b.m() {
            return false;
        }
        let n = a.n();
        let mut perm: Vec<usize> = (0..n).collect();
        fn next_perm(p: &mut [usize]) -> bool {
            let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
                return false;
            };
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            true
        }
        loop {
            if a.edges().iter().all(|&(u, v)| b.has_edge(perm[u], perm[v])) {
                return true;
            }
            if !next_perm(&mut perm) {
                return false;
            }
        }
    }

    fn assert_invariants(g: &Graph) {
        let mut degree_sum = 0;
        for v in g.vertices() {
            assert!(!g.neighbors(v).contains(v), "self-loop at {v}");
            assert!(g.neighbors(v).is_subset(g.vertices()));
            for w in g.neighbors(v) {
                assert!(g.neighbors(w).contains(v), "asymmetric {v}-{w}");
            }
            degree_sum += g.degree(v);
        }
        assert_eq!(degree_sum, 2 * g.m());
    }

    #[test]
    fn contract_triangle_gives_edge() {
        let g = complete(3).contract_edge(0, 2).unwrap();
        assert_invariants(&g);
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn contract_c4_gives_triangle() {
        let g = cycle(4).contract_edge(1, 2).unwrap();
        assert_invariants(&g);
        assert!(isomorphic(&g, &complete(3)));
    }

    #[test]
    fn contract_c5_gives_c4() {
        for (u, v) in cycle(5).edges() {
            let g = cycle(5).contract_edge(u, v).unwrap();
            assert!(isomorphic(&g, &cycle(4)));
        }
    }

    #[test]
    fn contract_missing_edge_is_rejected() {
        assert_eq!(
            cycle(4).contract_edge(0, 2),
            Err(GraphError::InvalidEdge(0, 2))
        );
    }

    #[test]
    fn contract_p4_outer_edges() {
        let c = path(4).contract_edges(&[(0, 1), (2, 3)]).unwrap();
        assert!(c.skipped.is_empty());
        assert_eq!(c.graph.edges(), vec![(0, 2)]);
    }

    #[test]
    fn tree_collapses_to_single_vertex() {
        let g = star(5);
        let c = g.contract_edges(&g.edges()).unwrap();
        assert_eq!(c.graph.n(), 1);
        assert_eq!(c.graph.m(), 0);
    }

    #[test]
    fn c5_two_disjoint_edges_gives_triangle() {
        // Enumerate all pairs of disjoint edges of C5.
        let g = cycle(5);
        let edges = g.edges();
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                    continue;
                }
                let c = g.contract_edges(&[a, b]).unwrap();
                assert!(isomorphic(&c.graph, &complete(3)));
            }
        }
    }

    #[test]
    fn cycle_edges_report_a_skip() {
        let g = complete(3);
        let c = g.contract_edges(&g.edges()).unwrap();
        assert_eq!(c.skipped.len(), 1);
        assert_eq!(c.graph.n(), 1);
    }

    #[test]
    fn components_are_ordered_and_partition_s() {
        let c4 = cycle(4);
        assert_eq!(c4.components(&set(&[0, 2])), vec![set(&[0]), set(&[2])]);
        assert_eq!(c4.components(&set(&[0, 1])), vec![set(&[0, 1])]);
        assert!(c4.components(&VertexSet::new()).is_empty());
    }

    #[test]
    fn spanning_forest_sizes() {
        assert_eq!(path(4).sf_size(path(4).vertices()), 3);
        assert_eq!(cycle(4).sf_size(cycle(4).vertices()), 3);
        assert_eq!(cycle(6).sf_size(&set(&[0, 2, 4])), 0);
        let g = cycle(5);
        assert_eq!(g.spanning_forest(&set(&[0, 1, 2])).len(), 2);
    }

    #[test]
    fn complement_induced_connectivity() {
        let k3c = complete(3).complement();
        assert_eq!(k3c.n(), 3);
        assert_eq!(k3c.m(), 0);
        let p = cycle(5).induced(&set(&[1, 2, 3]));
        assert_eq!(p.edges(), vec![(1, 2), (2, 3)]);
        let k1k2 = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert!(!k1k2.is_connected());
        assert!(cycle(5).is_connected());
    }

    #[test]
    fn edges_between_counts_each_edge_once() {
        let g = complete(4);
        let a = set(&[0, 1]);
        let b = set(&[1, 2, 3]);
        assert_eq!(
            g.edges_between(&a, &b),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
        );
    }
}
