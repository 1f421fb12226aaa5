use super::{Graph, GraphError, Vertex, VertexSet};

/// Bookkeeping for a sequence of contractions applied to an original graph.
///
/// Each step records `(survivor, absorbed)`. The survivor is always the
/// smaller id, so the final representative of a merged class is its minimum
/// original id no matter in which order the class was assembled.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContractionTrace {
    steps: Vec<(Vertex, Vertex)>,
    parent: Vec<Vertex>,
}

impl ContractionTrace {
    pub fn new(id_bound: usize) -> Self {
        ContractionTrace {
            steps: Vec::new(),
            parent: (0..id_bound).collect(),
        }
    }

    pub fn steps(&self) -> &[(Vertex, Vertex)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub(crate) fn record(&mut self, survivor: Vertex, absorbed: Vertex) {
        debug_assert!(survivor < absorbed);
        self.steps.push((survivor, absorbed));
        self.parent[absorbed] = survivor;
    }

    /// The current vertex that `v` has been merged into.
    pub fn representative(&self, mut v: Vertex) -> Vertex {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Points every id directly at its representative.
    pub fn compress(&mut self) {
        for v in 0..self.parent.len() {
            let r = self.representative(v);
            self.parent[v] = r;
        }
    }

    /// Original ids mapped onto `set` (a set of current representatives).
    pub fn preimage(&self, set: &VertexSet) -> VertexSet {
        (0..self.parent.len())
            .filter(|&v| set.contains(self.representative(v)))
            .collect()
    }

    /// Replays the recorded steps on `original`.
    pub fn replay(&self, original: &Graph) -> Result<Graph, GraphError> {
        let mut g = original.clone();
        for &(keep, gone) in &self.steps {
            g.contract_in_place(keep, gone)?;
        }
        Ok(g)
    }
}

/// Result of [`Graph::contract_edges`].
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    pub trace: ContractionTrace,
    /// Edges whose endpoints were already merged when their turn came.
    pub skipped: Vec<(Vertex, Vertex)>,
}
