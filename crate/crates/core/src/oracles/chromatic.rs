//! Exact chromatic number by iterative deepening from the clique bound.

use serde::Serialize;

use super::clique::clique_number;
use super::OracleError;
use crate::graph::Graph;

pub const DEFAULT_EXACT_CHI_LIMIT: usize = 18;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub value: usize,
    /// `witness[v]` is the colour of vertex `v`, in `0..value`.
    pub witness: Vec<usize>,
}

pub fn chromatic_number_exact(g: &Graph) -> Result<ChromaticResult, OracleError> {
    chromatic_number_exact_with_limit(g, DEFAULT_EXACT_CHI_LIMIT)
}

pub fn chromatic_number_exact_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<ChromaticResult, OracleError> {
    if g.n() > limit {
        return Err(OracleError::TooLarge { n: g.n(), limit });
    }
    if g.n() == 0 {
        return Ok(ChromaticResult {
            value: 0,
            witness: vec![],
        });
    }
    // Highest degree first, ties by id.
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let lower = clique_number(g).value.max(1);
    for k in lower..=g.n() {
        let mut colour = vec![usize::MAX; g.n()];
        if try_colour(g, &order, 0, k, 0, &mut colour) {
            return Ok(ChromaticResult {
                value: k,
                witness: colour,
            });
        }
    }
    unreachable!("n colours always suffice")
}

fn try_colour(
    g: &Graph,
    order: &[usize],
    idx: usize,
    k: usize,
    used: usize,
    colour: &mut [usize],
) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    // New colours are opened one at a time to break palette symmetry.
    for c in 0..k.min(used + 1) {
        if g.nbrs(v).iter().any(|w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        if try_colour(g, order, idx + 1, k, used.max(c + 1), colour) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}

pub fn is_proper(g: &Graph, colour: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colour[u] != colour[v])
}
