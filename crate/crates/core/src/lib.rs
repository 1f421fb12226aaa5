//! Biclique contraction: contract at most `k` edges so that the graph
//! becomes a complete bipartite graph, optionally with equal parts.

pub mod certify;
pub mod fpt;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod reductions;
pub mod verdict;

pub use certify::{Bipartition, ContractionSolution};
pub use graph::{Graph, Vertex, VertexSet};
pub use verdict::{Certificate, Verdict};
