//! Instance generators from three source problems, each paired with a
//! brute-force solver for the source so generated instances carry a known
//! answer.
//!
//! * Red-Blue Dominating Set to biclique contraction.
//! * Hypergraph 2-coloring to balanced biclique contraction.
//! * Independent set to biclique contraction with a target-size parameter.

mod h2c;
mod is;
mod rbds;

use thiserror::Error;

pub use h2c::{gen_bbc_from_h2c, solve_h2c_brute, H2cReduction, Hypergraph};
pub use is::{gen_bc_from_is, solve_is_brute, IsReduction};
pub use rbds::{gen_bc_from_rbds, solve_rbds_brute, RbdsInstance, RbdsReduction};

/// Largest source instance the brute-force solvers accept.
pub const BRUTE_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("{what} has size {size}, above the brute-force limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
}

fn check_limit(what: &'static str, size: usize) -> Result<(), ReductionError> {
    if size > BRUTE_LIMIT {
        return Err(ReductionError::TooLarge {
            what,
            size,
            limit: BRUTE_LIMIT,
        });
    }
    Ok(())
}
