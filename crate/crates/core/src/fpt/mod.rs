//! Single-exponential solver for (balanced) biclique contraction.
//!
//! A yes-instance has a biclique modulator of size at most `2k` (one vertex
//! per contracted edge endpoint). With `Z` in hand and `G - Z` split into
//! biclique parts `X`, `Y`, the solver tries every ordered split of `Z`
//! and, per split, the six ways `X` and `Y` can meet the two sides.

mod cases;
mod context;
mod modulator;
mod stats;

use rayon::prelude::*;

pub use context::{apply_branching_rule_1, apply_preprocessing_rule_1, CaseContext, FptError};
pub use modulator::{find_biclique_modulator, find_minimum_modulator, Modulator};
pub use stats::{FptStats, FptStatsSnapshot};

use crate::certify::{solution_from_partition, Bipartition};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{Oracle, OracleConfig, MAX_LIMIT};
use crate::verdict::{Certificate, Verdict};
use cases::Search;

#[derive(Clone, Copy, Debug, Default)]
pub struct FptConfig {
    /// Stop with [`Verdict::BudgetExceeded`] after this many search nodes.
    pub node_limit: Option<u64>,
    /// Spread the splits of `Z` over the rayon pool.
    pub parallel: bool,
}

pub fn fpt_bc(g: &Graph, k: usize) -> Result<Verdict, FptError> {
    FptSolver::new(FptConfig::default())
        .solve(g, k, false)
        .map(|(v, _)| v)
}

pub fn fpt_bbc(g: &Graph, k: usize) -> Result<Verdict, FptError> {
    FptSolver::new(FptConfig::default())
        .solve(g, k, true)
        .map(|(v, _)| v)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct FptSolver {
    config: FptConfig,
}

impl FptSolver {
    pub fn new(config: FptConfig) -> Self {
        FptSolver { config }
    }

    pub fn solve(
        &self,
        g: &Graph,
        k: usize,
        balanced: bool,
    ) -> Result<(Verdict, FptStatsSnapshot), FptError> {
        if !g.is_connected() {
            return Err(FptError::Disconnected);
        }
        let stats = FptStats::default();
        let Some(modulator) = find_minimum_modulator(g, 2 * k, &stats.modulator_nodes) else {
            return Ok((Verdict::No, stats.snapshot()));
        };
        let search = Search::new(g, k, balanced, &stats, self.config.node_limit);
        let mut exhaustive = false;
        let mut found = self.over_splits(&search, &modulator);
        if found.is_none() && !search.is_aborted() && needs_exhaustive(&modulator, k) {
            // Both parts meet both sides: all but one edge of E(X, Y) is
            // contracted, so the whole graph is small.
            if g.n() > MAX_LIMIT {
                return Err(FptError::TooLarge {
                    n: g.n(),
                    limit: MAX_LIMIT,
                });
            }
            exhaustive = true;
            let oracle = Oracle::new(OracleConfig {
                limit: MAX_LIMIT,
                parallel: self.config.parallel,
            });
            found = oracle
                .decide(g, k, balanced)
                .expect("size checked above")
                .certificate;
        }
        let mut snap = stats.snapshot();
        snap.modulator_size = modulator.z.len();
        snap.exhaustive_fallback = exhaustive;
        let verdict = match found {
            Some(partition) => Verdict::Yes(Certificate {
                solution: solution_from_partition(g, &partition, balanced),
                partition,
            }),
            None if search.is_aborted() => Verdict::BudgetExceeded,
            None => Verdict::No,
        };
        Ok((verdict, snap))
    }

    fn over_splits(&self, search: &Search, m: &Modulator) -> Option<Bipartition> {
        let z = m.z.to_vec();
        assert!(z.len() < 64, "modulator too large to enumerate");
        let splits = 1u64 << z.len();
        let run = |mask: u64| {
            if search.is_aborted() {
                return None;
            }
            let z_left: VertexSet = z
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let z_right = m.z.difference(&z_left);
            let ctx = CaseContext::new(
                search.original,
                m.x.clone(),
                m.y.clone(),
                z_left,
                z_right,
                search.k,
                search.balanced,
            );
            FptStats::bump(&search.stats.z_splits);
            if ctx.lower_bound() > search.k {
                FptStats::bump(&search.stats.z_splits_pruned);
                return None;
            }
            solve_split(search, ctx)
        };
        if self.config.parallel {
            (0..splits).into_par_iter().find_map_first(run)
        } else {
            (0..splits).find_map(run)
        }
    }
}

fn solve_split(search: &Search, ctx: CaseContext) -> Option<Bipartition> {
    if ctx.x.is_empty() && ctx.y.is_empty() {
        return search.case_z_only(&ctx);
    }
    if ctx.x.is_empty() {
        return search.case_1a(&ctx).or_else(|| search.case_1b(ctx));
    }
    search
        .case_2a(&ctx)
        .or_else(|| search.case_2b(&ctx))
        .or_else(|| search.case_3a(&ctx))
}

fn needs_exhaustive(m: &Modulator, k: usize) -> bool {
    m.x.len() >= 2 && m.y.len() >= 2 && m.x.len() + m.y.len() <= k + 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::verify_solution;
    use crate::graph::generators::*;

    fn answer(v: Verdict) -> bool {
        v.is_yes()
    }

    #[test]
    fn named_examples() {
        assert!(answer(fpt_bc(&complete(3), 1).unwrap()));
        assert!(!answer(fpt_bc(&cycle(5), 0).unwrap()));
        assert!(answer(fpt_bbc(&path(3), 1).unwrap()));
        assert!(!answer(fpt_bbc(&star(3), 1).unwrap()));
        assert!(answer(fpt_bbc(&cycle(5), 1).unwrap()));
    }

    #[test]
    fn rejects_disconnected_input() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(fpt_bc(&g, 2).unwrap_err(), FptError::Disconnected);
    }

    #[test]
    fn certificates_verify() {
        for g in [cycle(7), path(6), complete(4)] {
            for k in 0..=4 {
                for balanced in [false, true] {
                    let (v, _) = FptSolver::default().solve(&g, k, balanced).unwrap();
                    if let Verdict::Yes(c) = v {
                        assert!(c.solution.edges.len() <= k);
                        assert!(verify_solution(&g, &c.solution, k));
                    }
                }
            }
        }
    }

    #[test]
    fn node_limit_reports_budget_exceeded() {
        let solver = FptSolver::new(FptConfig {
            node_limit: Some(0),
            parallel: false,
        });
        // C8 has a modulator with four vertices; the X = ∅ branch needs nodes.
        let (v, _) = solver.solve(&cycle(8), 2, true).unwrap();
        assert!(matches!(v, Verdict::BudgetExceeded | Verdict::Yes(_)));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = cycle(9);
        for k in 0..=5 {
            let seq = FptSolver::default().solve(&g, k, false).unwrap().0;
            let par = FptSolver::new(FptConfig {
                node_limit: None,
                parallel: true,
            })
            .solve(&g, k, false)
            .unwrap()
            .0;
            assert_eq!(seq, par);
        }
    }
}
