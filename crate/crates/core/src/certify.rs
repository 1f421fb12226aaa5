//! Partition certificates and their relation to contraction solutions.
//!
//! A graph contracts to a biclique within budget `k` exactly when its vertex
//! set splits into `⟨L, R⟩` such that the spanning forests of `G[L]` and
//! `G[R]` have at most `k` edges in total and every component of `G[L]` is
//! adjacent to every component of `G[R]`. The balanced problem additionally
//! asks for equally many components on both sides.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{is_balanced_biclique, is_biclique, Edge, Graph, GraphError, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
}

/// Ordered pair `⟨L, R⟩` of disjoint vertex sets. Either side may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    pub fn new(left: VertexSet, right: VertexSet) -> Self {
        Bipartition { left, right }
    }

    pub fn swapped(&self) -> Self {
        Bipartition::new(self.right.clone(), self.left.clone())
    }

    /// Checks that the two sides are disjoint and cover exactly `V(g)`.
    pub fn validate(&self, g: &Graph) -> Result<(), CertifyError> {
        if self.left.intersects(&self.right) {
            let v = self.left.intersection(&self.right).first().unwrap();
            return Err(CertifyError::MalformedPartition(format!(
                "vertex {v} appears on both sides"
            )));
        }
        let all = self.left.union(&self.right);
        if let Some(v) = all.difference(g.vertices()).first() {
            return Err(CertifyError::MalformedPartition(format!(
                "vertex {v} is not in the graph"
            )));
        }
        if let Some(v) = g.vertices().difference(&all).first() {
            return Err(CertifyError::MalformedPartition(format!(
                "vertex {v} is not covered"
            )));
        }
        Ok(())
    }
}

/// A set of edges whose contraction should yield a (balanced) biclique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionSolution {
    pub edges: Vec<Edge>,
    pub balanced: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FailedCondition {
    Budget,
    Adjacency,
    Balance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionVerdict {
    pub sf_total: usize,
    pub left_components: usize,
    pub right_components: usize,
    /// First failing condition, checked in the order budget, adjacency, balance.
    pub failed_condition: Option<FailedCondition>,
    /// A component of `G[L]` and a component of `G[R]` with no edge between them.
    pub witness_components: Option<(VertexSet, VertexSet)>,
}

impl PartitionVerdict {
    pub fn is_valid(&self) -> bool {
        self.failed_condition.is_none()
    }
}

/// Checks both conditions of a `k`-constrained valid partition.
pub fn check_valid_partition(
    g: &Graph,
    p: &Bipartition,
    k: usize,
) -> Result<PartitionVerdict, CertifyError> {
    check(g, p, k, false)
}

/// As [`check_valid_partition`], plus equal component counts on both sides.
pub fn check_valid_balanced_partition(
    g: &Graph,
    p: &Bipartition,
    k: usize,
) -> Result<PartitionVerdict, CertifyError> {
    check(g, p, k, true)
}

pub fn check_partition(
    g: &Graph,
    p: &Bipartition,
    k: usize,
    balanced: bool,
) -> Result<PartitionVerdict, CertifyError> {
    check(g, p, k, balanced)
}

fn check(
    g: &Graph,
    p: &Bipartition,
    k: usize,
    balanced: bool,
) -> Result<PartitionVerdict, CertifyError> {
    p.validate(g)?;
    let left = g.components(&p.left);
    let right = g.components(&p.right);
    let sf_total = p.left.len() - left.len() + p.right.len() - right.len();

    // Label right-side components, then scan each left component's
    // neighborhood once.
    let mut label = vec![usize::MAX; g.id_bound()];
    for (i, c) in right.iter().enumerate() {
        for v in c {
            label[v] = i;
        }
    }
    let mut witness = None;
    let mut seen = vec![false; right.len()];
    'outer: for cl in &left {
        seen.iter_mut().for_each(|s| *s = false);
        for v in g.open_neighborhood(cl).intersection(&p.right).iter() {
            seen[label[v]] = true;
        }
        if let Some(j) = seen.iter().position(|s| !s) {
            witness = Some((cl.clone(), right[j].clone()));
            break 'outer;
        }
    }

    let failed_condition = if sf_total > k {
        Some(FailedCondition::Budget)
    } else if witness.is_some() {
        Some(FailedCondition::Adjacency)
    } else if balanced && left.len() != right.len() {
        Some(FailedCondition::Balance)
    } else {
        None
    };
    Ok(PartitionVerdict {
        sf_total,
        left_components: left.len(),
        right_components: right.len(),
        failed_condition,
        witness_components: witness,
    })
}

/// Spanning-forest edges of `G[L]` together with those of `G[R]`.
pub fn solution_from_partition(g: &Graph, p: &Bipartition, balanced: bool) -> ContractionSolution {
    let mut edges = g.spanning_forest(&p.left);
    edges.extend(g.spanning_forest(&p.right));
    edges.sort_unstable();
    ContractionSolution { edges, balanced }
}

/// Contracts `f` and, if the result is a biclique, maps its bipartition back
/// to the original vertices. `None` when `G/F` is not a biclique.
pub fn partition_from_solution(g: &Graph, f: &[Edge]) -> Result<Option<Bipartition>, GraphError> {
    let c = g.contract_edges(f)?;
    Ok(is_biclique(&c.graph).map(|parts| {
        Bipartition::new(
            c.trace.preimage(&parts.left),
            c.trace.preimage(&parts.right),
        )
    }))
}

/// `|F| ≤ k` and `G/F` is a biclique (balanced when requested).
pub fn verify_solution(g: &Graph, s: &ContractionSolution, k: usize) -> bool {
    if s.edges.len() > k {
        return false;
    }
    let Ok(c) = g.contract_edges(&s.edges) else {
        return false;
    };
    if s.balanced {
        is_balanced_biclique(&c.graph)
    } else {
        is_biclique(&c.graph).is_some()
    }
}
