//! Exact maximum clique by branch and bound with a greedy-colouring bound.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub value: usize,
    pub witness: Vec<usize>,
}

/// Clique number of `g` with the lexicographically smallest maximum clique.
pub fn clique_number(g: &Graph) -> CliqueResult {
    let w = max_clique_in(g, &g.vertices());
    debug_assert!(g.is_clique(&w));
    CliqueResult {
        value: w.len(),
        witness: w.to_vec(),
    }
}

/// `ω(G[p])`.
pub fn clique_number_of(g: &Graph, p: &VertexSet) -> usize {
    let mut best = 0;
    if !p.is_empty() {
        expand(g, p.clone(), 0, &mut best, usize::MAX);
    }
    best
}

/// Whether `G[p]` contains a clique of `size` vertices.
pub fn has_clique_of_size(g: &Graph, p: &VertexSet, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if p.len() < size {
        return false;
    }
    let mut best = 0;
    expand(g, p.clone(), 0, &mut best, size)
}

/// Among the maximum cliques of `G[p]`, the one whose sorted id list is
/// lexicographically smallest.
pub fn max_clique_in(g: &Graph, p: &VertexSet) -> VertexSet {
    let size = clique_number_of(g, p);
    lex_first_clique(g, p, size).expect("a clique of the computed size exists")
}

/// The lexicographically smallest clique of exactly `size` vertices in
/// `G[p]`, if any.
pub fn lex_first_clique(g: &Graph, p: &VertexSet, size: usize) -> Option<VertexSet> {
    let mut chosen = VertexSet::new(g.n());
    let mut cand = p.clone();
    let mut need = size;
    'outer: while need > 0 {
        for v in cand.iter() {
            let rest = cand.intersection(g.nbrs(v)).above(v);
            if has_clique_of_size(g, &rest, need - 1) {
                chosen.insert(v);
                cand = rest;
                need -= 1;
                continue 'outer;
            }
        }
        return None;
    }
    Some(chosen)
}

/// Greedy sequential colouring of `p`; returns vertices in colour-class
/// order along with the colour number (1-based) of each, non-decreasing.
fn colour_sort(g: &Graph, p: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncoloured = p.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut avail = uncoloured.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(g.nbrs(v));
            uncoloured.remove(v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

/// Returns true as soon as a clique of `target` vertices is found.
fn expand(g: &Graph, mut p: VertexSet, size: usize, best: &mut usize, target: usize) -> bool {
    let (order, bounds) = colour_sort(g, &p);
    for idx in (0..order.len()).rev() {
        if size + bounds[idx] <= *best {
            return false;
        }
        let v = order[idx];
        let np = p.intersection(g.nbrs(v));
        if np.is_empty() {
            if size + 1 > *best {
                *best = size + 1;
                if *best >= target {
                    return true;
                }
            }
        } else if expand(g, np, size + 1, best, target) {
            return true;
        }
        p.remove(v);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn examples() {
        assert_eq!(clique_number(&cycle(5)).value, 2);
        assert_eq!(clique_number(&cycle(5)).witness, vec![0, 1]);
        // K7 minus one edge.
        let mut edges = complete(7).edges();
        edges.retain(|&e| e != (0, 1));
        let g = Graph::build(7, &edges).unwrap();
        let r = clique_number(&g);
        assert_eq!(r.value, 6);
        assert_eq!(r.witness, vec![0, 2, 3, 4, 5, 6]);
        assert_eq!(clique_number(&petersen()).value, 2);
        assert_eq!(clique_number(&Graph::empty(0)).value, 0);
        assert_eq!(clique_number(&Graph::empty(4)).value, 1);
    }

    #[test]
    fn lex_first() {
        let g = complete_multipartite(&[2, 2, 2]);
        assert_eq!(max_clique_in(&g, &g.vertices()).to_vec(), vec![0, 2, 4]);
        let p = VertexSet::from_ids(6, [1, 3, 5]);
        assert_eq!(max_clique_in(&g, &p).to_vec(), vec![1, 3, 5]);
        assert!(lex_first_clique(&g, &g.vertices(), 4).is_none());
    }
}
