//! The parameterized solver against the oracle on random connected graphs
//! larger than the exhaustive range.

mod common;

use biclique_core::certify::verify_solution;
use biclique_core::fpt::{FptConfig, FptSolver};
use biclique_core::graph::Graph;
use biclique_core::oracle::{Oracle, OracleConfig};
use biclique_core::Verdict;
use common::{near_biclique, random_connected};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(g: &Graph, k: usize, balanced: bool) -> Result<(), String> {
    let oracle = Oracle::new(OracleConfig::default())
        .decide(g, k, balanced)
        .unwrap();
    let (got, stats) = FptSolver::new(FptConfig::default())
        .solve(g, k, balanced)
        .unwrap();
    if let Verdict::Yes(c) = &got {
        if !verify_solution(g, &c.solution, k) {
            return Err(format!("bad certificate {g:?} k={k} balanced={balanced}"));
        }
    }
    if got.is_yes() != oracle.answer {
        return Err(format!(
            "{g:?} k={k} balanced={balanced} oracle={} stats={stats:?}",
            oracle.answer
        ));
    }
    Ok(())
}

#[test]
fn random_sparse_and_dense_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..300 {
        let n = rng.gen_range(7..=11);
        let p = [0.15, 0.35, 0.6][round % 3];
        let g = random_connected(&mut rng, n, p);
        if !g.is_connected() {
            continue;
        }
        for k in 0..=4 {
            for balanced in [false, true] {
                check(&g, k, balanced).unwrap();
            }
        }
    }
}

#[test]
fn perturbed_bicliques() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let a = rng.gen_range(1..=5);
        let b = rng.gen_range(a..=8);
        let flips = rng.gen_range(1..=4);
        let g = near_biclique(&mut rng, a, b, flips);
        if !g.is_connected() {
            continue;
        }
        for k in 0..=4 {
            for balanced in [false, true] {
                check(&g, k, balanced).unwrap();
            }
        }
    }
}
