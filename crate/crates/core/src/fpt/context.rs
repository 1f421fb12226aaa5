use thiserror::Error;

use crate::certify::Bipartition;
use crate::graph::{ContractionTrace, Graph, Vertex, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FptError {
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("rule precondition violated for vertex {vertex}: {reason}")]
    RulePrecondition {
        vertex: Vertex,
        reason: &'static str,
    },
    #[error("exhaustive case needs {n} vertices, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Working state of one branch: a contracted copy of the input, the
/// guessed split `⟨Z_L, Z_R⟩` of the modulator, and the free vertices.
///
/// Contracted classes always land in `z_left` or `z_right`. Inside the
/// branching phase `x` is empty and every vertex of `y` has all its
/// neighbors in `z_left ∪ z_right`.
#[derive(Clone, Debug)]
pub struct CaseContext {
    pub graph: Graph,
    pub trace: ContractionTrace,
    pub x: VertexSet,
    pub y: VertexSet,
    pub z_left: VertexSet,
    pub z_right: VertexSet,
    /// `k` minus the contractions performed so far. Negative means dead.
    pub budget: i64,
    pub balanced: bool,
}

impl CaseContext {
    pub fn new(
        graph: &Graph,
        x: VertexSet,
        y: VertexSet,
        z_left: VertexSet,
        z_right: VertexSet,
        k: usize,
        balanced: bool,
    ) -> Self {
        CaseContext {
            trace: ContractionTrace::new(graph.id_bound()),
            graph: graph.clone(),
            x,
            y,
            z_left,
            z_right,
            budget: k as i64,
            balanced,
        }
    }

    pub fn is_live(&self) -> bool {
        self.budget >= 0
    }

    /// Spanning forests of `Z_L` and `Z_R` are paid for in every completion.
    pub fn lower_bound(&self) -> usize {
        self.graph.sf_size(&self.z_left) + self.graph.sf_size(&self.z_right)
    }

    /// Contracts every edge from `center` to `targets` into one vertex that
    /// joins `Z_L` (or `Z_R`), charging one unit of budget per edge.
    pub(crate) fn contract_star(&mut self, center: Vertex, targets: &VertexSet, into_left: bool) {
        let mut cur = center;
        for t in targets {
            let keep = self
                .graph
                .contract_in_place(cur, t)
                .expect("star edges exist in the working graph");
            self.trace.record(keep, cur + t - keep);
            cur = keep;
        }
        self.budget -= targets.len() as i64;
        for set in [
            &mut self.x,
            &mut self.y,
            &mut self.z_left,
            &mut self.z_right,
        ] {
            set.remove(center);
            set.difference_with(targets);
        }
        if into_left {
            self.z_left.insert(cur);
        } else {
            self.z_right.insert(cur);
        }
    }

    /// Original-graph bipartition whose image in the working graph is
    /// `⟨left, right⟩`.
    pub fn lift(&self, left: &VertexSet, right: &VertexSet) -> Bipartition {
        debug_assert!(left.union(right) == *self.graph.vertices());
        Bipartition::new(self.trace.preimage(left), self.trace.preimage(right))
    }

    fn z(&self) -> VertexSet {
        self.z_left.union(&self.z_right)
    }

    pub(crate) fn branching_candidate(&self) -> Option<Vertex> {
        let z = self.z();
        self.y.iter().find(|&v| {
            let n = self.graph.neighbors(v);
            n.intersects(&self.z_left) && n.intersects(&self.z_right) && n.intersection_len(&z) > 2
        })
    }

    pub(crate) fn preprocessing_candidate(&self) -> Option<Vertex> {
        self.y.iter().find(|&v| {
            let n = self.graph.neighbors(v);
            n.len() == 2 && n.intersects(&self.z_left) && n.intersects(&self.z_right)
        })
    }
}

/// Branching rule: a free vertex with neighbors on both sides of the
/// modulator and more than two modulator neighbors either joins the left
/// (contract all its edges into `Z_L`) or the right (into `Z_R`).
pub fn apply_branching_rule_1(
    ctx: &CaseContext,
    v: Vertex,
) -> Result<(CaseContext, CaseContext), FptError> {
    let n = ctx.graph.neighbors(v);
    let to_left = n.intersection(&ctx.z_left);
    let to_right = n.intersection(&ctx.z_right);
    if !ctx.y.contains(v) {
        return Err(FptError::RulePrecondition {
            vertex: v,
            reason: "not a free vertex",
        });
    }
    if to_left.is_empty() || to_right.is_empty() || to_left.len() + to_right.len() <= 2 {
        return Err(FptError::RulePrecondition {
            vertex: v,
            reason: "needs neighbors in both Z_L and Z_R and more than two in total",
        });
    }
    let mut left = ctx.clone();
    left.contract_star(v, &to_left, true);
    let mut right = ctx.clone();
    right.contract_star(v, &to_right, false);
    Ok((left, right))
}

/// Preprocessing rule: a free vertex of degree two with one neighbor in
/// each of `Z_L`, `Z_R` can be moved to the left at the same cost, so its
/// left edge is contracted.
pub fn apply_preprocessing_rule_1(ctx: &CaseContext, v: Vertex) -> Result<CaseContext, FptError> {
    let n = ctx.graph.neighbors(v);
    let to_left = n.intersection(&ctx.z_left);
    if !ctx.y.contains(v) || n.len() != 2 || to_left.len() != 1 || !n.intersects(&ctx.z_right) {
        return Err(FptError::RulePrecondition {
            vertex: v,
            reason: "needs a free vertex of degree two with one neighbor in each of Z_L and Z_R",
        });
    }
    let mut out = ctx.clone();
    out.contract_star(v, &to_left, true);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// `v = 0` adjacent to `a` vertices of `Z_L` and `b` of `Z_R`.
    fn fan(a: usize, b: usize) -> CaseContext {
        let mut g = Graph::new(1 + a + b);
        for i in 1..=a + b {
            g.add_edge(0, i).unwrap();
        }
        let zl: VertexSet = (1..=a).collect();
        let zr: VertexSet = (a + 1..=a + b).collect();
        CaseContext::new(&g, VertexSet::new(), set(&[0]), zl, zr, 10, false)
    }

    #[test]
    fn branching_costs_follow_neighbor_counts() {
        for (a, b) in [(2, 1), (1, 2), (3, 3)] {
            let ctx = fan(a, b);
            assert_eq!(ctx.branching_candidate(), Some(0));
            let (l, r) = apply_branching_rule_1(&ctx, 0).unwrap();
            assert_eq!((10 - l.budget, 10 - r.budget), (a as i64, b as i64));
            assert!(l.y.is_empty() && r.y.is_empty());
            assert_eq!(l.z_left.len(), 1);
            assert_eq!(l.z_right.len(), b);
            assert_eq!(r.z_right.len(), 1);
            assert_eq!(r.z_left.len(), a);
            assert_eq!(l.graph.n(), 1 + b);
        }
    }

    #[test]
    fn branching_rejects_degree_two() {
        let ctx = fan(1, 1);
        assert_eq!(ctx.branching_candidate(), None);
        assert!(apply_branching_rule_1(&ctx, 0).is_err());
    }

    #[test]
    fn preprocessing_merges_into_left_neighbor() {
        let ctx = fan(1, 1);
        assert_eq!(ctx.preprocessing_candidate(), Some(0));
        let out = apply_preprocessing_rule_1(&ctx, 0).unwrap();
        assert_eq!(out.budget, 9);
        assert_eq!(out.z_left, set(&[0]));
        assert_eq!(out.trace.steps(), &[(0, 1)]);
        assert_eq!(out.lift(&set(&[0]), &set(&[2])).left, set(&[0, 1]));
        assert!(apply_preprocessing_rule_1(&fan(2, 1), 0).is_err());
    }

    #[test]
    fn preprocessing_chain() {
        // Two degree-two vertices 0 and 1 between z_l = 2 and z_r = 3.
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let mut ctx = CaseContext::new(
            &g,
            VertexSet::new(),
            set(&[0, 1]),
            set(&[2]),
            set(&[3]),
            2,
            true,
        );
        let mut applied = 0;
        while let Some(v) = ctx.preprocessing_candidate() {
            ctx = apply_preprocessing_rule_1(&ctx, v).unwrap();
            applied += 1;
        }
        assert_eq!(applied, 2);
        assert_eq!(ctx.budget, 0);
        assert_eq!(ctx.graph.n(), 2);
        // The resulting partition ⟨{0,1,2}, {3}⟩ is K_{1,1}: balanced, cost 2.
        let p = ctx.lift(&ctx.z_left, &ctx.z_right);
        assert!(crate::certify::check_valid_balanced_partition(&g, &p, 2)
            .unwrap()
            .is_valid());
        assert!(crate::oracle::oracle_bbc(&g, 2).unwrap().answer);
    }

    #[test]
    fn no_candidate_when_rules_do_not_apply() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let ctx = CaseContext::new(
            &g,
            VertexSet::new(),
            set(&[0]),
            set(&[1, 2]),
            VertexSet::new(),
            1,
            false,
        );
        assert_eq!(ctx.preprocessing_candidate(), None);
        assert_eq!(ctx.branching_candidate(), None);
    }
}
