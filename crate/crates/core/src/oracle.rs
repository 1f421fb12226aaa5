//! Brute-force ground truth by enumerating bipartitions.
//!
//! The search assigns vertices in id order, the smallest vertex always on
//! the left, and abandons a branch as soon as the spanning forests of the
//! two partial sides already exceed the budget (spanning-forest size never
//! shrinks when a side gains vertices). Leaves are checked for the
//! component-adjacency condition and, for the balanced problem, equal
//! component counts.

use rayon::prelude::*;
use thiserror::Error;

use crate::certify::{check_partition, Bipartition};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_LIMIT: usize = 24;
/// Hard cap from the `u64` masks used internally.
pub const MAX_LIMIT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub limit: usize,
    /// Split the top of the search tree across the rayon pool.
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            limit: DEFAULT_LIMIT,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub answer: bool,
    /// First valid bipartition in enumeration order (left-before-right on
    /// each vertex, in id order).
    pub certificate: Option<Bipartition>,
    /// Smallest budget with a yes answer, when it was computed.
    pub min_k: Option<usize>,
}

pub fn oracle_bc(g: &Graph, k: usize) -> Result<OracleResult, OracleError> {
    Oracle::new(OracleConfig::default()).decide(g, k, false)
}

pub fn oracle_bbc(g: &Graph, k: usize) -> Result<OracleResult, OracleError> {
    Oracle::new(OracleConfig::default()).decide(g, k, true)
}

/// Minimum budget over all structurally valid bipartitions, `None` when no
/// bipartition meets the adjacency (and balance) conditions at any budget.
pub fn oracle_min_k(g: &Graph, balanced: bool) -> Result<Option<usize>, OracleError> {
    Oracle::new(OracleConfig::default()).min_k(g, balanced)
}

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    config: OracleConfig,
}

impl Oracle {
    pub fn new(config: OracleConfig) -> Self {
        Oracle { config }
    }

    pub fn decide(&self, g: &Graph, k: usize, balanced: bool) -> Result<OracleResult, OracleError> {
        let search = Search::new(g, self.config)?;
        let found = search.first_valid(k, balanced, self.config.parallel);
        let certificate = found.map(|mask| search.bipartition(mask));
        if let Some(p) = &certificate {
            debug_assert!(check_partition(g, p, k, balanced).unwrap().is_valid());
        }
        Ok(OracleResult {
            answer: certificate.is_some(),
            certificate,
            min_k: None,
        })
    }

    pub fn min_k(&self, g: &Graph, balanced: bool) -> Result<Option<usize>, OracleError> {
        let search = Search::new(g, self.config)?;
        let mut best = None;
        // Iterative deepening keeps the pruned search reusable.
        for k in 0..search.n.max(1) {
            if search.first_valid(k, balanced, false).is_some() {
                best = Some(k);
                break;
            }
        }
        Ok(best)
    }
}

struct Search {
    n: usize,
    order: Vec<usize>,
    adj: Vec<u64>,
}

#[derive(Clone)]
struct Side {
    comps: Vec<u64>,
    sf: usize,
}

impl Side {
    fn add(&mut self, v: usize, nbrs: u64) {
        let mut merged = 1u64 << v;
        let mut touched = 0;
        self.comps.retain(|&c| {
            if c & nbrs != 0 {
                merged |= c;
                touched += 1;
                false
            } else {
                true
            }
        });
        self.comps.push(merged);
        self.sf += touched;
    }
}

impl Search {
    fn new(g: &Graph, config: OracleConfig) -> Result<Self, OracleError> {
        let limit = config.limit.min(MAX_LIMIT);
        if g.n() > limit {
            return Err(OracleError::TooLarge { n: g.n(), limit });
        }
        let order = g.vertices().to_vec();
        let mut index = vec![0; g.id_bound()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << index[w]))
            .collect();
        Ok(Search {
            n: order.len(),
            order,
            adj,
        })
    }

    fn bipartition(&self, left_mask: u64) -> Bipartition {
        let mut left = VertexSet::new();
        let mut right = VertexSet::new();
        for (i, &v) in self.order.iter().enumerate() {
            if left_mask >> i & 1 == 1 {
                left.insert(v);
            } else {
                right.insert(v);
            }
        }
        Bipartition::new(left, right)
    }

    fn leaf_ok(&self, l: &Side, r: &Side, balanced: bool) -> bool {
        if balanced && l.comps.len() != r.comps.len() {
            return false;
        }
        l.comps.iter().all(|&cl| {
            let reach = self.neighborhood(cl);
            r.comps.iter().all(|&cr| reach & cr != 0)
        })
    }

    fn neighborhood(&self, set: u64) -> u64 {
        let mut out = 0;
        let mut rest = set;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[i];
        }
        out
    }

    fn first_valid(&self, k: usize, balanced: bool, parallel: bool) -> Option<u64> {
        let empty = Side {
            comps: Vec::new(),
            sf: 0,
        };
        if self.n == 0 {
            return self.leaf_ok(&empty, &empty, balanced).then_some(0);
        }
        let mut left = empty.clone();
        left.add(0, self.adj[0]);
        let right = empty;
        const SPLIT: usize = 6;
        if !parallel || self.n <= SPLIT + 8 {
            return self.dfs(1, self.n, left, right, 1, k, balanced);
        }
        // Expand the first few levels sequentially, then search the
        // prefixes in parallel; `find_map_first` keeps enumeration order.
        let mut prefixes = vec![(left, right, 1u64)];
        for i in 1..=SPLIT {
            let mut next = Vec::with_capacity(prefixes.len() * 2);
            for (l, r, mask) in prefixes {
                let mut l2 = l.clone();
                l2.add(i, self.adj[i] & mask_below(i));
                if l2.sf + r.sf <= k {
                    next.push((l2, r.clone(), mask | 1 << i));
                }
                let mut r2 = r;
                r2.add(i, self.adj[i] & !mask & mask_below(i));
                if l.sf + r2.sf <= k {
                    next.push((l, r2, mask));
                }
            }
            prefixes = next;
        }
        prefixes
            .into_par_iter()
            .find_map_first(|(l, r, mask)| self.dfs(SPLIT + 1, self.n, l, r, mask, k, balanced))
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        i: usize,
        n: usize,
        l: Side,
        r: Side,
        mask: u64,
        k: usize,
        balanced: bool,
    ) -> Option<u64> {
        if i == n {
            return self.leaf_ok(&l, &r, balanced).then_some(mask);
        }
        let below = mask_below(i);
        let mut l2 = l.clone();
        l2.add(i, self.adj[i] & mask & below);
        if l2.sf + r.sf <= k {
            if let Some(found) = self.dfs(i + 1, n, l2, r.clone(), mask | 1 << i, k, balanced) {
                return Some(found);
            }
        }
        let mut r2 = r;
        r2.add(i, self.adj[i] & !mask & below);
        if l.sf + r2.sf <= k {
            return self.dfs(i + 1, n, l, r2, mask, k, balanced);
        }
        None
    }
}

fn mask_below(i: usize) -> u64 {
    if i >= 64 {
        u64::MAX
    } else {
        (1u64 << i) - 1
    }
}
