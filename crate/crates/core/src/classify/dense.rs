//! Dense vertices, grouped by their first witness `(j, u)` and coloured
//! group by group through a recursion callback.

use std::collections::BTreeMap;

use serde::Serialize;

use super::ClassifiedNeighbourhood;
use crate::degen::DegenColouring;
use crate::graph::{Graph, VertexSet};
use crate::oracles::find_biclique_in;
use crate::profile::Thresholds;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenseGroup {
    pub j: usize,
    pub u: usize,
    pub size: usize,
    pub colours: usize,
    /// More colours were used than `partUpper^c`.
    pub over_cap: bool,
    /// A `K_{partUpper,partUpper}` inside the group, searched for only when
    /// `over_cap` holds.
    pub biclique: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenseUnion {
    pub colouring: DegenColouring,
    pub covered: VertexSet,
    pub groups: Vec<DenseGroup>,
}

pub fn dense_colouring<E>(
    g: &Graph,
    cn: &ClassifiedNeighbourhood,
    th: &Thresholds,
    vertices: &VertexSet,
    recurse: &mut dyn FnMut(&VertexSet) -> Result<DegenColouring, E>,
) -> Result<DenseUnion, E> {
    let mut by_witness: BTreeMap<(usize, usize), VertexSet> = BTreeMap::new();
    for v in vertices.iter() {
        if let Some(w) = cn.labels.get(&v).and_then(|l| l.dense) {
            by_witness
                .entry((w.j, w.u))
                .or_insert_with(|| VertexSet::new(g.n()))
                .insert(v);
        }
    }
    let mut pieces = Vec::new();
    let mut groups = Vec::new();
    let mut covered = VertexSet::new(g.n());
    let side = usize::try_from(th.part_upper).unwrap_or(usize::MAX);
    for ((j, u), members) in by_witness {
        let col = recurse(&members)?;
        let over_cap = col.k as u128 > th.kst_cap();
        let biclique = if over_cap && side.saturating_mul(2) <= members.len() {
            find_biclique_in(g, &members, side, None).map(|b| (b.left.to_vec(), b.right.to_vec()))
        } else {
            None
        };
        groups.push(DenseGroup {
            j,
            u,
            size: members.len(),
            colours: col.k,
            over_cap,
            biclique,
        });
        covered.union_with(&members);
        pieces.push(col);
    }
    Ok(DenseUnion {
        colouring: DegenColouring::stack(pieces),
        covered,
        groups,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::degen::verify_kd;
    use crate::template::Template;

    #[test]
    fn groups_by_witness() {
        // Parts {0,1},{2,3} complete to each other; 4 and 5 see everything
        // and each other.
        let mut edges = vec![(0, 2), (0, 3), (1, 2), (1, 3), (4, 5)];
        for x in [4, 5] {
            edges.extend((0..4).map(|v| (x, v)));
        }
        let g = Graph::build(6, &edges).unwrap();
        let t = Template::new(
            VertexSet::new(6),
            vec![VertexSet::from_ids(6, [0, 1]), VertexSet::from_ids(6, [2, 3])],
        );
        let th = crate::profile::ThresholdProfile::desk(1).at(4);
        let cn = classify(&g, &t, &th);
        let du = dense_colouring::<()>(&g, &cn, &th, &cn.dense(), &mut |s| Ok(DegenColouring::by_degeneracy(&g, s)))
            .unwrap();
        assert_eq!(du.groups.len(), 1);
        assert_eq!((du.groups[0].j, du.groups[0].u, du.groups[0].size), (0, 0, 2));
        assert!(!du.groups[0].over_cap);
        verify_kd(&g, &du.colouring).unwrap();
        assert_eq!(du.covered.to_vec(), vec![4, 5]);
    }
}
