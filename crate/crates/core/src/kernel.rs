//! Quadratic vertex kernel for balanced biclique contraction.
//!
//! Rules run in order; each one is tried only when every earlier rule is
//! inapplicable, and the packing and the `Z` classification are recomputed
//! from scratch after every change to the graph.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    find_forbidden, is_balanced_biclique, is_biclique, Forbidden, ForbiddenKind, Graph, Vertex,
    VertexSet,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("input graph is disconnected")]
    Disconnected,
}

/// Maximal collection of vertex-disjoint `K3` and `K1+K2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Packing {
    pub triples: Vec<Forbidden>,
    pub z: VertexSet,
}

/// Greedy packing: repeatedly take the first forbidden triple of `G - used`.
pub fn greedy_packing(g: &Graph) -> Packing {
    let mut packing = Packing::default();
    let mut rest = g.clone();
    while let Some(f) = find_forbidden(&rest) {
        for v in f.vertices {
            packing.z.insert(v);
            rest.remove_vertex_in_place(v);
        }
        packing.triples.push(f);
    }
    packing
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    InProgress,
    ReducedInstance,
    TrivialNo,
    TrivialYes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// `k ≤ 0` on a non-balanced graph, or `|Z| > 6k`.
    Rr1No,
    /// Already a balanced biclique.
    Rr1Yes,
    /// `|Y| < k + 3`: the instance is already linear in `k`.
    SmallY,
    Rr2,
    /// Some modulator vertex has `k + 1` neighbors in both `X` and `Y`.
    ZxZyOverlap,
    Rr3,
    Rr4,
    /// Fewer than two unmarked vertices on a side.
    Rr4Stop,
}

/// State sizes recorded each time a rule fires.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleApplication {
    pub rule: Rule,
    pub n: usize,
    pub k: i64,
    pub z: usize,
    pub x: usize,
    pub y: usize,
}

#[derive(Clone, Debug)]
pub struct KernelState {
    pub graph: Graph,
    pub k: i64,
    pub packing: Packing,
    pub x: VertexSet,
    pub y: VertexSet,
    pub z_x: VertexSet,
    pub z_y: VertexSet,
    pub z_prime: VertexSet,
    pub marked: VertexSet,
    pub outcome: Outcome,
    pub log: Vec<RuleApplication>,
}

impl KernelState {
    pub fn new(g: &Graph, k: usize) -> Self {
        let mut st = KernelState {
            graph: g.clone(),
            k: k as i64,
            packing: Packing::default(),
            x: VertexSet::new(),
            y: VertexSet::new(),
            z_x: VertexSet::new(),
            z_y: VertexSet::new(),
            z_prime: VertexSet::new(),
            marked: VertexSet::new(),
            outcome: Outcome::InProgress,
            log: Vec::new(),
        };
        st.refresh();
        st
    }

    /// Recomputes the packing, `⟨X, Y⟩` and the split of `Z`.
    fn refresh(&mut self) {
        self.packing = greedy_packing(&self.graph);
        let rest = self.graph.without(&self.packing.z);
        let parts = is_biclique(&rest).expect("a maximal packing leaves a biclique");
        let (x, y) = if parts.left.len() <= parts.right.len() {
            (parts.left, parts.right)
        } else {
            (parts.right, parts.left)
        };
        self.x = x;
        self.y = y;
        let big = (self.k + 1).max(0) as usize;
        self.z_x = self
            .packing
            .z
            .iter()
            .filter(|&z| self.graph.neighbors(z).intersection_len(&self.y) >= big)
            .collect();
        self.z_y = self
            .packing
            .z
            .iter()
            .filter(|&z| self.graph.neighbors(z).intersection_len(&self.x) >= big)
            .collect();
        self.z_prime = self.packing.z.difference(&self.z_x.union(&self.z_y));
        self.marked.clear();
    }

    fn z(&self) -> &VertexSet {
        &self.packing.z
    }

    fn record(&mut self, rule: Rule) {
        self.log.push(RuleApplication {
            rule,
            n: self.graph.n(),
            k: self.k,
            z: self.z().len(),
            x: self.x.len(),
            y: self.y.len(),
        });
    }

    fn finish(&mut self, rule: Rule, outcome: Outcome) {
        self.record(rule);
        self.outcome = outcome;
    }

    pub fn is_done(&self) -> bool {
        self.outcome != Outcome::InProgress
    }

    /// The instance the kernelizer hands back. Trivial outcomes become
    /// fixed two- and three-vertex instances with `k = 0`.
    pub fn instance(&self) -> (Graph, usize) {
        match self.outcome {
            Outcome::TrivialYes => (Graph::from_edges(2, &[(0, 1)]).unwrap(), 0),
            Outcome::TrivialNo => (Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap(), 0),
            _ => (self.graph.clone(), self.k.max(0) as usize),
        }
    }
}

/// Reduction Rule 1: trivial answers from the budget and the packing size.
pub fn rr1_trivial(st: &mut KernelState) -> bool {
    let balanced = is_balanced_biclique(&st.graph);
    if balanced && st.k >= 0 {
        st.finish(Rule::Rr1Yes, Outcome::TrivialYes);
        return true;
    }
    if st.k <= 0 || st.z().len() as i64 > 6 * st.k {
        st.finish(Rule::Rr1No, Outcome::TrivialNo);
        return true;
    }
    false
}

/// Reduction Rule 2: too many vertices on the larger side.
pub fn rr2_size(st: &mut KernelState) -> bool {
    if st.y.len() as i64 > (st.x.len() + st.z().len()) as i64 + st.k {
        st.finish(Rule::Rr2, Outcome::TrivialNo);
        return true;
    }
    false
}

/// Reduction Rule 3: contract the smallest edge of
/// `E(X, Z_X) ∪ E(Y, Z_Y) ∪ E(Z_X) ∪ E(Z_Y)`.
pub fn rr3_contract(st: &mut KernelState) -> bool {
    let g = &st.graph;
    let mut edges = g.edges_between(&st.x, &st.z_x);
    edges.extend(g.edges_between(&st.y, &st.z_y));
    edges.extend(g.edges_between(&st.z_x, &st.z_x));
    edges.extend(g.edges_between(&st.z_y, &st.z_y));
    let Some(&(u, v)) = edges.iter().min() else {
        return false;
    };
    st.record(Rule::Rr3);
    st.graph.contract_in_place(u, v).expect("edge exists");
    st.k -= 1;
    st.refresh();
    true
}

/// Reduction Rule 4: mark the vertices that matter and delete one unmarked
/// vertex from each of `X` and `Y`. Returns false when fewer than two
/// unmarked vertices remain on a side.
pub fn rr4_mark_delete(st: &mut KernelState) -> bool {
    let g = &st.graph;
    let near = g.open_neighborhood(&st.z_prime);
    let mut marked = st.z().clone();
    marked.union_with(&near.intersection(&st.x));
    marked.union_with(&near.intersection(&st.y));
    let far_x = st.x.difference(&near);
    let far_y = st.y.difference(&near);
    for z in st.z() {
        for far in [&far_x, &far_y] {
            if let Some(w) = far.difference(g.neighbors(z)).first() {
                marked.insert(w);
            }
        }
    }
    let unmarked_x = st.x.difference(&marked);
    let unmarked_y = st.y.difference(&marked);
    st.marked = marked;
    if unmarked_x.len() < 2 || unmarked_y.len() < 2 {
        return false;
    }
    let u: Vertex = unmarked_x.first().unwrap();
    let v: Vertex = unmarked_y.first().unwrap();
    st.record(Rule::Rr4);
    st.graph.remove_vertex_in_place(u);
    st.graph.remove_vertex_in_place(v);
    st.refresh();
    true
}

/// Applies one rule (the first applicable one). Returns false at a fixpoint.
pub fn step(st: &mut KernelState) -> bool {
    if st.is_done() || rr1_trivial(st) {
        return false;
    }
    if (st.y.len() as i64) < st.k + 3 {
        st.finish(Rule::SmallY, Outcome::ReducedInstance);
        return false;
    }
    if rr2_size(st) {
        return false;
    }
    if st.z_x.intersects(&st.z_y) {
        st.finish(Rule::ZxZyOverlap, Outcome::TrivialNo);
        return false;
    }
    if rr3_contract(st) || rr4_mark_delete(st) {
        return true;
    }
    st.finish(Rule::Rr4Stop, Outcome::ReducedInstance);
    false
}

pub fn kernelize_bbc(g: &Graph, k: usize) -> Result<KernelState, KernelError> {
    if !g.is_connected() {
        return Err(KernelError::Disconnected);
    }
    let mut st = KernelState::new(g, k);
    while step(&mut st) {}
    Ok(st)
}

impl Packing {
    pub fn triangles(&self) -> usize {
        self.triples
            .iter()
            .filter(|t| t.kind == ForbiddenKind::Triangle)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::oracle::oracle_bbc;

    fn answer(st: &KernelState) -> bool {
        let (h, k) = st.instance();
        oracle_bbc(&h, k).unwrap().answer
    }

    /// Checks disjointness, that each triple induces its kind, and maximality.
    fn assert_packing(g: &Graph, p: &Packing) {
        let mut seen = VertexSet::new();
        for t in &p.triples {
            for v in t.vertices {
                assert!(seen.insert(v));
            }
            let [w, a, b] = t.vertices;
            let edges = [g.has_edge(a, b), g.has_edge(w, a), g.has_edge(w, b)];
            match t.kind {
                ForbiddenKind::Triangle => assert_eq!(edges, [true, true, true]),
                ForbiddenKind::EdgePlusVertex => assert_eq!(edges, [true, false, false]),
            }
        }
        assert_eq!(seen, p.z);
        assert!(is_biclique(&g.without(&p.z)).is_some());
    }

    #[test]
    fn packing_examples() {
        assert!(greedy_packing(&complete_bipartite(3, 4)).triples.is_empty());
        let k3 = greedy_packing(&complete(3));
        assert_eq!((k3.triples.len(), k3.triangles()), (1, 1));
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
            .unwrap();
        let p = greedy_packing(&two);
        assert_eq!(p.triples.len(), 2);
        assert_packing(&two, &p);
    }

    #[test]
    fn packing_is_maximal_on_small_graphs() {
        for n in 1..=6 {
            for g in all_labeled_graphs(n) {
                assert_packing(&g, &greedy_packing(&g));
            }
        }
    }

    #[test]
    fn rr1_examples() {
        let st = kernelize_bbc(&path(3), 0).unwrap();
        assert_eq!(st.outcome, Outcome::TrivialNo);
        assert_eq!(st.log.last().unwrap().rule, Rule::Rr1No);
        // Three triangles on a path: packing of size 3, |Z| = 9 > 6.
        let mut g = disjoint_union(&disjoint_union(&complete(3), &complete(3)), &complete(3));
        g.add_edge(2, 3).unwrap();
        g.add_edge(5, 6).unwrap();
        let st = KernelState::new(&g, 1);
        assert_eq!(st.packing.z.len(), 9);
        assert_eq!(kernelize_bbc(&g, 1).unwrap().outcome, Outcome::TrivialNo);
        assert_eq!(
            kernelize_bbc(&complete_bipartite(2, 2), 0).unwrap().outcome,
            Outcome::TrivialYes
        );
    }

    #[test]
    fn rr2_examples() {
        let st = kernelize_bbc(&star(20), 2).unwrap();
        assert_eq!(st.outcome, Outcome::TrivialNo);
        assert_eq!(st.log.last().unwrap().rule, Rule::Rr2);
        assert!(!oracle_bbc(&star(8), 2).unwrap().answer);
        // |Y| = |X| + |Z| + k exactly: K_{1,4} with k = 3 is not rejected.
        let mut st = KernelState::new(&star(4), 3);
        assert!(!rr2_size(&mut st));
        // |Y| ≤ k + 2 stops at once.
        let st = kernelize_bbc(&star(4), 2).unwrap();
        assert_eq!(
            (st.outcome, st.log.last().unwrap().rule),
            (Outcome::ReducedInstance, Rule::SmallY)
        );
    }

    #[test]
    fn rr3_contracts_heavy_vertex_edges() {
        // Biclique K_{2,6} (X = {0,1}, Y = {2..7}) plus a triangle z = 8, 9, 10
        // with z adjacent to all of Y and to x = 0.
        let mut g = complete_bipartite(2, 6);
        for _ in 0..3 {
            g.add_vertex();
        }
        for (u, v) in [(8, 9), (9, 10), (8, 10), (8, 0)] {
            g.add_edge(u, v).unwrap();
        }
        for y in 2..8 {
            g.add_edge(8, y).unwrap();
        }
        let mut st = KernelState::new(&g, 2);
        assert!(st.z_x.contains(8));
        assert!(rr3_contract(&mut st));
        assert_eq!(st.k, 1);
        assert_eq!(st.log[0].rule, Rule::Rr3);
    }

    #[test]
    fn rr4_shrinks_balanced_biclique_pieces() {
        // K_{6,7} is unbalanced, Z = ∅ so nothing is marked.
        let g = complete_bipartite(6, 7);
        let mut st = KernelState::new(&g, 1);
        assert!(st.packing.z.is_empty());
        assert!(rr4_mark_delete(&mut st));
        assert_eq!(st.graph.n(), 11);
        let st = kernelize_bbc(&g, 1).unwrap();
        assert_eq!(st.outcome, Outcome::ReducedInstance);
        assert_eq!(answer(&st), oracle_bbc(&g, 1).unwrap().answer);
    }

    #[test]
    fn fewer_than_two_unmarked_stops() {
        let g = complete_bipartite(1, 5);
        let mut st = KernelState::new(&g, 1);
        assert!(!rr4_mark_delete(&mut st));
    }

    #[test]
    fn trivial_instances_have_the_right_answer() {
        for outcome in [Outcome::TrivialYes, Outcome::TrivialNo] {
            let mut st = KernelState::new(&path(2), 0);
            st.outcome = outcome;
            assert_eq!(answer(&st), outcome == Outcome::TrivialYes);
        }
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(kernelize_bbc(&g, 1).unwrap_err(), KernelError::Disconnected);
    }
}
