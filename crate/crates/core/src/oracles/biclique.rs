//! `K_{t,t}` as a (not necessarily induced) subgraph.

use crate::graph::{Graph, VertexSet};

/// Two disjoint `t`-sets with every cross pair adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biclique {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Biclique {
    pub fn verify(&self, g: &Graph, t: usize) -> bool {
        self.left.len() == t
            && self.right.len() == t
            && self.left.is_disjoint(&self.right)
            && self.left.iter().all(|v| self.right.is_subset(g.nbrs(v)))
    }
}

pub fn find_biclique_subgraph(g: &Graph, t: usize) -> Option<Biclique> {
    find_biclique_in(g, &g.vertices(), t, None)
}

/// Searches inside `universe`. The left side is built in increasing id
/// order while tracking its common neighbourhood; when `min_left` is given
/// the left side's smallest vertex is fixed to it.
pub fn find_biclique_in(
    g: &Graph,
    universe: &VertexSet,
    t: usize,
    min_left: Option<usize>,
) -> Option<Biclique> {
    let n = g.n();
    if t == 0 {
        return Some(Biclique {
            left: VertexSet::new(n),
            right: VertexSet::new(n),
        });
    }
    let mut left = VertexSet::new(n);
    let starts: Vec<usize> = match min_left {
        Some(v) if universe.contains(v) => vec![v],
        Some(_) => return None,
        None => universe.to_vec(),
    };
    for v in starts {
        let common = universe.intersection(g.nbrs(v));
        if common.len() < t {
            continue;
        }
        left.insert(v);
        let cand = universe.above(v).intersection(&eligible(g, universe, t));
        if let Some(right) = extend(g, cand, common, t - 1, t, &mut left) {
            return Some(Biclique { left, right });
        }
        left.remove(v);
    }
    None
}

/// Vertices with at least `t` neighbours in `universe`; others cannot sit on
/// either side.
fn eligible(g: &Graph, universe: &VertexSet, t: usize) -> VertexSet {
    VertexSet::from_ids(
        g.n(),
        universe.iter().filter(|&v| g.nbrs(v).intersection_len(universe) >= t),
    )
}

fn extend(
    g: &Graph,
    mut cand: VertexSet,
    common: VertexSet,
    need: usize,
    t: usize,
    left: &mut VertexSet,
) -> Option<VertexSet> {
    if need == 0 {
        return Some(common.take_lowest(t));
    }
    while let Some(v) = cand.first() {
        if cand.len() < need {
            return None;
        }
        cand.remove(v);
        let next_common = common.intersection(g.nbrs(v));
        if next_common.len() < t {
            continue;
        }
        left.insert(v);
        if let Some(r) = extend(g, cand.clone(), next_common, need - 1, t, left) {
            return Some(r);
        }
        left.remove(v);
    }
    None
}
