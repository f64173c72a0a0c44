//! Exact brute-force decision procedures. They serve as subroutines of the
//! colouring pipeline at small scale and as ground truth in tests.

mod biclique;
mod bounds;
mod chromatic;
mod clique;
mod stable;

pub use biclique::{find_biclique_in, find_biclique_subgraph, Biclique};
pub use bounds::{check_kst_dichotomy, check_ramsey_bound, KstBranch, KstReport, RamseyReport};
pub use chromatic::{
    chromatic_number_exact, chromatic_number_exact_with_limit, is_proper, ChromaticResult,
    DEFAULT_EXACT_CHI_LIMIT,
};
pub use clique::{
    clique_number, clique_number_of, has_clique_of_size, lex_first_clique, max_clique_in,
    CliqueResult,
};
pub use stable::{
    find_balanced_stable, find_induced_double_star, find_induced_double_star_through,
    find_stable_set, BalancedStable, DoubleStarWitness,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph on {n} vertices exceeds the exact-search limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is not H_{s}-free: induced copy at {witness:?}")]
    NotHsFree { s: usize, witness: DoubleStarWitness },
}
