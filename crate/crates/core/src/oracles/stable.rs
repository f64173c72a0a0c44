//! Stable-set searches and induced double-star detection.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Lexicographically first stable subset of `x` with exactly `size` members.
pub fn find_stable_set(g: &Graph, x: &VertexSet, size: usize) -> Option<VertexSet> {
    let mut chosen = VertexSet::new(g.n());
    if stable_rec(g, x.clone(), size, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn stable_rec(g: &Graph, mut cand: VertexSet, need: usize, chosen: &mut VertexSet) -> bool {
    if need == 0 {
        return true;
    }
    while let Some(v) = cand.first() {
        if cand.len() < need {
            return false;
        }
        cand.remove(v);
        let next = cand.difference(g.nbrs(v));
        chosen.insert(v);
        if stable_rec(g, next, need - 1, chosen) {
            return true;
        }
        chosen.remove(v);
    }
    false
}

/// A stable set `S ∪ T` with `S ⊆ a`, `T ⊆ b`, `|S| = |T| = s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedStable {
    pub left: VertexSet,
    pub right: VertexSet,
}

/// Searches for a stable set meeting `a` and `b` (disjoint) in exactly `s`
/// vertices each. When `must` is given it has to be one of the `a`-side
/// vertices. Deterministic: the `a`-side is enumerated in lexicographic order.
pub fn find_balanced_stable(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    s: usize,
    must: Option<usize>,
) -> Option<BalancedStable> {
    let mut left = VertexSet::new(g.n());
    let mut cand_a = a.clone();
    let mut cand_b = b.clone();
    let mut need = s;
    if let Some(m) = must {
        if !a.contains(m) || s == 0 {
            return None;
        }
        left.insert(m);
        cand_a.remove(m);
        cand_a.difference_with(g.nbrs(m));
        cand_b.difference_with(g.nbrs(m));
        need -= 1;
    }
    if cand_b.len() < s {
        return None;
    }
    let mut right = None;
    if balanced_rec(g, cand_a, &cand_b, need, s, &mut left, &mut right) {
        Some(BalancedStable {
            left,
            right: right.expect("set on success"),
        })
    } else {
        None
    }
}

fn balanced_rec(
    g: &Graph,
    mut cand_a: VertexSet,
    cand_b: &VertexSet,
    need: usize,
    s: usize,
    left: &mut VertexSet,
    right: &mut Option<VertexSet>,
) -> bool {
    if need == 0 {
        *right = find_stable_set(g, cand_b, s);
        return right.is_some();
    }
    while let Some(v) = cand_a.first() {
        if cand_a.len() < need {
            return false;
        }
        cand_a.remove(v);
        let next_b = cand_b.difference(g.nbrs(v));
        if next_b.len() < s {
            continue;
        }
        let next_a = cand_a.difference(g.nbrs(v));
        left.insert(v);
        if balanced_rec(g, next_a, &next_b, need - 1, s, left, right) {
            return true;
        }
        left.remove(v);
    }
    false
}

/// An induced copy of the double star `H_s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleStarWitness {
    pub centers: (usize, usize),
    pub leaves_u: Vec<usize>,
    pub leaves_x: Vec<usize>,
}

impl DoubleStarWitness {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = vec![self.centers.0, self.centers.1];
        v.extend(&self.leaves_u);
        v.extend(&self.leaves_x);
        v
    }

    /// Checks that the witness vertices induce exactly the double-star edges.
    pub fn verify(&self, g: &Graph, s: usize) -> bool {
        let (u, x) = self.centers;
        let all = self.vertices();
        if self.leaves_u.len() != s || self.leaves_x.len() != s {
            return false;
        }
        let set = match VertexSet::try_from_ids(g.n(), all.iter().copied()) {
            Ok(set) if set.len() == 2 * s + 2 => set,
            _ => return false,
        };
        let expected = |a: usize, b: usize| {
            let pair = |p: usize, q: usize| (a == p && b == q) || (a == q && b == p);
            pair(u, x)
                || self.leaves_u.iter().any(|&l| pair(u, l))
                || self.leaves_x.iter().any(|&l| pair(x, l))
        };
        set.iter()
            .all(|a| set.iter().filter(|&b| b > a).all(|b| g.adjacent(a, b) == expected(a, b)))
    }
}

/// Leaf candidates for center `u` against center `x`: adjacent to `u`, not to `x`.
fn leaf_candidates(g: &Graph, u: usize, x: usize) -> VertexSet {
    let mut c = g.nbrs(u).difference(g.nbrs(x));
    c.remove(x);
    c
}

fn try_centers(g: &Graph, u: usize, x: usize, s: usize, must_u: Option<usize>) -> Option<DoubleStarWitness> {
    let cu = leaf_candidates(g, u, x);
    let cx = leaf_candidates(g, x, u);
    if cu.len() < s || cx.len() < s {
        return None;
    }
    find_balanced_stable(g, &cu, &cx, s, must_u).map(|b| DoubleStarWitness {
        centers: (u, x),
        leaves_u: b.left.to_vec(),
        leaves_x: b.right.to_vec(),
    })
}

/// Exhaustive search for an induced `H_s` over all adjacent center pairs.
pub fn find_induced_double_star(g: &Graph, s: usize) -> Option<DoubleStarWitness> {
    assert!(s >= 1, "H_s needs s >= 1");
    for (u, x) in g.edges() {
        if g.degree(u) <= s || g.degree(x) <= s {
            continue;
        }
        if let Some(w) = try_centers(g, u, x, s, None) {
            return Some(w);
        }
    }
    None
}

/// An induced `H_s` that uses the edge `ab` (which must be present), if one
/// exists. Any induced `H_s` created by inserting `ab` into an `H_s`-free
/// graph is found by this search.
pub fn find_induced_double_star_through(
    g: &Graph,
    a: usize,
    b: usize,
    s: usize,
) -> Option<DoubleStarWitness> {
    assert!(g.adjacent(a, b), "edge {a}-{b} not present");
    if let Some(w) = try_centers(g, a, b, s, None) {
        return Some(w);
    }
    // `ab` as a leaf edge: one endpoint is a center, the other its leaf.
    for (center, leaf) in [(a, b), (b, a)] {
        let others = leaf_candidates(g, center, leaf);
        for x in others.iter() {
            if let Some(w) = try_centers(g, center, x, s, Some(leaf)) {
                return Some(w);
            }
        }
    }
    None
}
