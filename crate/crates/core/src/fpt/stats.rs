use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

/// Branch counters, shared across worker threads.
#[derive(Debug, Default)]
pub struct FptStats {
    pub modulator_nodes: AtomicU64,
    pub z_splits: AtomicU64,
    pub z_splits_pruned: AtomicU64,
    pub nodes: AtomicU64,
    pub branching_rule: AtomicU64,
    pub preprocessing_rule: AtomicU64,
    pub terminals: AtomicU64,
    pub candidates: AtomicU64,
}

impl FptStats {
    pub(crate) fn bump(counter: &AtomicU64) {
        counter.fetch_add(1, Ordering::Relaxed);
    }

    pub fn snapshot(&self) -> FptStatsSnapshot {
        let get = |c: &AtomicU64| c.load(Ordering::Relaxed);
        FptStatsSnapshot {
            modulator_size: 0,
            modulator_nodes: get(&self.modulator_nodes),
            z_splits: get(&self.z_splits),
            z_splits_pruned: get(&self.z_splits_pruned),
            nodes: get(&self.nodes),
            branching_rule: get(&self.branching_rule),
            preprocessing_rule: get(&self.preprocessing_rule),
            terminals: get(&self.terminals),
            candidates: get(&self.candidates),
            exhaustive_fallback: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FptStatsSnapshot {
    pub modulator_size: usize,
    pub modulator_nodes: u64,
    pub z_splits: u64,
    pub z_splits_pruned: u64,
    pub nodes: u64,
    pub branching_rule: u64,
    pub preprocessing_rule: u64,
    pub terminals: u64,
    pub candidates: u64,
    /// Whether the small-`X ∪ Y` case enumerated every bipartition.
    pub exhaustive_fallback: bool,
}
