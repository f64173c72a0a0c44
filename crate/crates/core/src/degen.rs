//! Degenerate `(k,d)`-colourings: a partition into `k` parts, each of which
//! induces a subgraph of degeneracy at most `d`.
//!
//! Every part carries an elimination order as its certificate: each vertex
//! has at most `d` neighbours in its own part that occur later in the order.
//! Checking a colouring never recomputes degeneracy.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenColouring {
    pub k: usize,
    pub d: usize,
    /// Members of each part, sorted by id. Parts may be empty.
    pub parts: Vec<Vec<usize>>,
    /// Elimination order of each part; a permutation of `parts[i]`.
    pub orders: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum KdViolation {
    #[error("declared k = {k} but {found} parts present")]
    PartCount { k: usize, found: usize },
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("vertex {vertex} appears more than once")]
    Duplicate { vertex: usize },
    #[error("order of part {part} is not a permutation of its members")]
    OrderMismatch { part: usize },
    #[error("vertex {vertex} in part {part} has {count} later neighbours, above d = {d}")]
    LaterNeighbours {
        vertex: usize,
        part: usize,
        count: usize,
        d: usize,
    },
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DegenError {
    #[error("pieces have different widths ({0} vs {1})")]
    WidthMismatch(usize, usize),
    #[error("vertex {0} is covered by two pieces")]
    Overlap(usize),
    #[error("vertex {vertex} of piece {piece} has {count} neighbours in later pieces, above {cap}")]
    ForwardCap {
        vertex: usize,
        piece: usize,
        count: usize,
        cap: usize,
    },
    #[error("invalid colouring: {0}")]
    Invalid(#[from] KdViolation),
}

impl DegenColouring {
    pub fn empty(k: usize, d: usize) -> Self {
        DegenColouring {
            k,
            d,
            parts: vec![Vec::new(); k],
            orders: vec![Vec::new(); k],
        }
    }

    /// Builds a colouring from elimination orders, deriving the sorted parts.
    pub fn from_orders(d: usize, orders: Vec<Vec<usize>>) -> Self {
        let parts = orders
            .iter()
            .map(|o| {
                let mut p = o.clone();
                p.sort_unstable();
                p
            })
            .collect::<Vec<_>>();
        DegenColouring {
            k: orders.len(),
            d,
            parts,
            orders,
        }
    }

    /// One part per vertex; a `(|x|, 0)`-colouring.
    pub fn singletons(x: &VertexSet) -> Self {
        Self::from_orders(0, x.iter().map(|v| vec![v]).collect())
    }

    /// `(1, degeneracy(G[x]))` from the minimum-degree elimination order.
    pub fn by_degeneracy(g: &Graph, x: &VertexSet) -> Self {
        let (order, d) = g.degeneracy_order_of(x);
        Self::from_orders(d, vec![order])
    }

    pub fn covered(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.parts.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn covered_len(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// Pads with empty parts up to width `k`.
    pub fn padded(mut self, k: usize) -> Self {
        assert!(k >= self.k, "cannot pad width {} down to {k}", self.k);
        self.parts.resize(k, Vec::new());
        self.orders.resize(k, Vec::new());
        self.k = k;
        self
    }

    /// Same colouring with a larger declared degeneracy budget.
    pub fn relaxed(mut self, d: usize) -> Self {
        self.d = self.d.max(d);
        self
    }

    /// Drops the given vertices; sub-orders of certificates stay valid.
    pub fn without(mut self, removed: &VertexSet) -> Self {
        for p in self.parts.iter_mut().chain(self.orders.iter_mut()) {
            p.retain(|&v| !removed.contains(v));
        }
        self
    }

    /// Rewrites vertex ids through `map` (e.g. from an induced subgraph back
    /// to its host graph).
    pub fn relabel(mut self, map: &[usize]) -> Self {
        for p in self.parts.iter_mut().chain(self.orders.iter_mut()) {
            for v in p.iter_mut() {
                *v = map[*v];
            }
        }
        for p in self.parts.iter_mut() {
            p.sort_unstable();
        }
        self
    }

    /// Side-by-side union on disjoint vertex sets with disjoint palettes:
    /// widths add, the degeneracy budget is the maximum.
    pub fn stack<I: IntoIterator<Item = DegenColouring>>(pieces: I) -> Self {
        let mut out = DegenColouring::empty(0, 0);
        for p in pieces {
            out.k += p.k;
            out.d = out.d.max(p.d);
            out.parts.extend(p.parts);
            out.orders.extend(p.orders);
        }
        out
    }

    /// Removes empty parts.
    pub fn compacted(mut self) -> Self {
        let keep: Vec<bool> = self.parts.iter().map(|p| !p.is_empty()).collect();
        let mut i = 0;
        self.parts.retain(|_| {
            i += 1;
            keep[i - 1]
        });
        let mut i = 0;
        self.orders.retain(|_| {
            i += 1;
            keep[i - 1]
        });
        self.k = self.parts.len();
        self
    }
}

/// Checks partition disjointness, certificate consistency and the
/// later-neighbour bound of every part against `g`.
pub fn verify_kd(g: &Graph, c: &DegenColouring) -> Result<(), KdViolation> {
    if c.parts.len() != c.k || c.orders.len() != c.k {
        return Err(KdViolation::PartCount {
            k: c.k,
            found: c.parts.len().max(c.orders.len()),
        });
    }
    let mut seen = VertexSet::new(g.n());
    for (i, (part, order)) in c.parts.iter().zip(&c.orders).enumerate() {
        for &v in part {
            if v >= g.n() {
                return Err(KdViolation::OutOfRange(v));
            }
            if !seen.insert(v) {
                return Err(KdViolation::Duplicate { vertex: v });
            }
        }
        let mut a = part.clone();
        let mut b = order.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(KdViolation::OrderMismatch { part: i });
        }
        let mut later = VertexSet::from_ids(g.n(), order.iter().copied());
        for &v in order {
            later.remove(v);
            let count = g.nbrs(v).intersection_len(&later);
            if count > c.d {
                return Err(KdViolation::LaterNeighbours {
                    vertex: v,
                    part: i,
                    count,
                    d: c.d,
                });
            }
        }
    }
    Ok(())
}

/// Combines colourings of `V_1, …, V_n` into one colouring of their union.
///
/// Requires every vertex of `V_i` to have at most `d_prime` neighbours in
/// `V_{i+1} ∪ ⋯ ∪ V_n`. Part `j` of the result is the union of the parts `j`;
/// its elimination order lists piece 1's order first and piece `n`'s last,
/// so a vertex's later neighbours are at most `d` inside its own piece plus
/// at most `d_prime` in later pieces.
pub fn chain(g: &Graph, pieces: &[DegenColouring], d_prime: usize) -> Result<DegenColouring, DegenError> {
    let Some(first) = pieces.first() else {
        return Ok(DegenColouring::empty(0, d_prime));
    };
    let k = first.k;
    let mut d = 0;
    let mut sets = Vec::with_capacity(pieces.len());
    let mut union = VertexSet::new(g.n());
    for p in pieces {
        if p.k != k {
            return Err(DegenError::WidthMismatch(k, p.k));
        }
        verify_kd(g, p)?;
        d = d.max(p.d);
        let set = VertexSet::from_ids(g.n(), p.parts.iter().flatten().copied());
        if let Some(v) = set.intersection(&union).first() {
            return Err(DegenError::Overlap(v));
        }
        union.union_with(&set);
        sets.push(set);
    }
    let mut later = union;
    for (i, set) in sets.iter().enumerate() {
        later.difference_with(set);
        for v in set.iter() {
            let count = g.nbrs(v).intersection_len(&later);
            if count > d_prime {
                return Err(DegenError::ForwardCap {
                    vertex: v,
                    piece: i,
                    count,
                    cap: d_prime,
                });
            }
        }
    }
    let mut orders = vec![Vec::new(); k];
    for p in pieces {
        for (j, o) in p.orders.iter().enumerate() {
            orders[j].extend_from_slice(o);
        }
    }
    Ok(DegenColouring::from_orders(d + d_prime, orders))
}

/// Largest number of neighbours any vertex of piece `i` has in the union of
/// the later pieces. This is the smallest `d_prime` [`chain`] accepts.
pub fn max_forward_degree(g: &Graph, sets: &[VertexSet]) -> usize {
    let Some(first) = sets.first() else { return 0 };
    let mut later = VertexSet::new(first.universe());
    for s in sets {
        later.union_with(s);
    }
    let mut best = 0;
    for s in sets {
        later.difference_with(s);
        for v in s.iter() {
            best = best.max(g.nbrs(v).intersection_len(&later));
        }
    }
    best
}

/// A proper colouring of the vertices covered by a degenerate colouring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProperColouring {
    pub colour: BTreeMap<usize, usize>,
}

impl ProperColouring {
    /// Number of distinct colours used.
    pub fn num_colours(&self) -> usize {
        let mut cs: Vec<usize> = self.colour.values().copied().collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colour.iter().all(|(&v, &c)| {
            g.nbrs(v)
                .iter()
                .all(|w| self.colour.get(&w).is_none_or(|&cw| cw != c))
        })
    }
}

/// Greedy colouring of each part along its reversed elimination order using
/// palette `j·(d+1) .. (j+1)·(d+1)` for part `j`; at most `k(d+1)` colours.
pub fn to_proper(g: &Graph, c: &DegenColouring) -> Result<ProperColouring, KdViolation> {
    verify_kd(g, c)?;
    let mut colour = BTreeMap::new();
    let width = c.d + 1;
    for (j, order) in c.orders.iter().enumerate() {
        let mut local: BTreeMap<usize, usize> = BTreeMap::new();
        for &v in order.iter().rev() {
            let taken: Vec<usize> = g.nbrs(v).iter().filter_map(|w| local.get(&w).copied()).collect();
            let free = (0..width)
                .find(|x| !taken.contains(x))
                .expect("certificate leaves a free colour");
            local.insert(v, free);
        }
        for (v, x) in local {
            colour.insert(v, j * width + x);
        }
    }
    Ok(ProperColouring { colour })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn verify_examples() {
        let k4 = complete(4);
        let single = DegenColouring::singletons(&k4.vertices());
        assert_eq!((single.k, single.d), (4, 0));
        assert!(verify_kd(&k4, &single).is_ok());
        let one = DegenColouring::from_orders(2, vec![vec![0, 1, 2, 3]]);
        assert!(matches!(
            verify_kd(&k4, &one),
            Err(KdViolation::LaterNeighbours { vertex: 0, count: 3, .. })
        ));
        // Path on 10 vertices, leaf-first order.
        let tree = path(10);
        let c = DegenColouring::from_orders(1, vec![(0..10).collect()]);
        assert!(verify_kd(&tree, &c).is_ok());
    }

    #[test]
    fn verify_structural_errors() {
        let g = path(3);
        let dup = DegenColouring::from_orders(0, vec![vec![0], vec![0]]);
        assert_eq!(verify_kd(&g, &dup), Err(KdViolation::Duplicate { vertex: 0 }));
        let mut bad = DegenColouring::from_orders(1, vec![vec![0, 1]]);
        bad.orders[0] = vec![0, 2];
        assert_eq!(verify_kd(&g, &bad), Err(KdViolation::OrderMismatch { part: 0 }));
        let oob = DegenColouring::from_orders(1, vec![vec![5]]);
        assert_eq!(verify_kd(&g, &oob), Err(KdViolation::OutOfRange(5)));
        let mut count = DegenColouring::from_orders(1, vec![vec![0]]);
        count.k = 2;
        assert!(matches!(verify_kd(&g, &count), Err(KdViolation::PartCount { .. })));
    }

    #[test]
    fn chain_examples() {
        let g = path(6);
        let a = DegenColouring::from_orders(1, vec![vec![0, 1, 2]]);
        assert_eq!(chain(&g, std::slice::from_ref(&a), 0).unwrap(), a);

        let two = disjoint_union(&complete(2), &complete(2));
        let p = DegenColouring::singletons(&VertexSet::from_ids(4, [0, 1]));
        let q = DegenColouring::singletons(&VertexSet::from_ids(4, [2, 3]));
        let u = chain(&two, &[p, q], 0).unwrap();
        assert_eq!((u.k, u.d), (2, 0));
        assert!(verify_kd(&two, &u).is_ok());

        let b = DegenColouring::from_orders(1, vec![vec![3, 4, 5]]);
        let c = chain(&g, &[a.clone(), b.clone()], 1).unwrap();
        assert_eq!((c.k, c.d), (1, 2));
        assert_eq!(c.orders[0], vec![0, 1, 2, 3, 4, 5]);
        assert!(verify_kd(&g, &c).is_ok());
        assert!(matches!(
            chain(&g, &[a.clone(), b.clone()], 0),
            Err(DegenError::ForwardCap { vertex: 2, .. })
        ));
        let wide = b.clone().padded(2);
        assert_eq!(chain(&g, &[a.clone(), wide], 1), Err(DegenError::WidthMismatch(1, 2)));
        assert_eq!(chain(&g, &[a.clone(), a], 1), Err(DegenError::Overlap(0)));
    }

    #[test]
    fn to_proper_examples() {
        let k4 = complete(4);
        let p = to_proper(&k4, &DegenColouring::singletons(&k4.vertices())).unwrap();
        assert_eq!(p.num_colours(), 4);
        assert!(p.is_proper(&k4));

        let tree = path(7);
        let p = to_proper(&tree, &DegenColouring::by_degeneracy(&tree, &tree.vertices())).unwrap();
        assert!(p.num_colours() <= 2 && p.is_proper(&tree));

        let pet = petersen();
        let c = DegenColouring::by_degeneracy(&pet, &pet.vertices());
        assert_eq!(c.d, 3);
        let p = to_proper(&pet, &c).unwrap();
        assert!(p.num_colours() <= 4 && p.is_proper(&pet));

        let bad = DegenColouring::from_orders(0, vec![vec![0, 1]]);
        assert!(to_proper(&k4, &bad).is_err());
    }

    #[test]
    fn helpers() {
        let g = path(4);
        let c = DegenColouring::stack([
            DegenColouring::singletons(&VertexSet::from_ids(4, [0])),
            DegenColouring::by_degeneracy(&g, &VertexSet::from_ids(4, [1, 2, 3])),
        ]);
        assert_eq!((c.k, c.d), (2, 1));
        assert!(verify_kd(&g, &c).is_ok());
        let w = c.clone().without(&VertexSet::from_ids(4, [0]));
        assert_eq!(w.clone().compacted().k, 1);
        assert!(verify_kd(&g, &w).is_ok());
        let r = DegenColouring::from_orders(0, vec![vec![1, 0]]).relabel(&[7, 3]);
        assert_eq!(r.parts[0], vec![3, 7]);
        assert_eq!(r.orders[0], vec![3, 7]);
        let sets = [VertexSet::from_ids(4, [0, 1]), VertexSet::from_ids(4, [2, 3])];
        assert_eq!(max_forward_degree(&g, &sets), 1);
    }
}
