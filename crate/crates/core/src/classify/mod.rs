//! Classification of the template neighbourhood `N(𝓛)` into pendant, dense
//! and pure vertices, and the colouring procedures built on it.
//!
//! Part indices in witnesses are 0-based positions in `Template::parts`.
//! Labels are sets: a vertex may carry several or none.

mod dense;
mod pure;

pub use dense::{dense_colouring, DenseGroup, DenseUnion};
pub use pure::{
    is_s_crowded, large_sets, large_sets_structure, large_union_colouring, small_union_colouring, LargeSetsReport,
    LargeUnion, LargeUnionReport, PairBranch, PairRow, SmallUnion,
};

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::oracles::{find_induced_double_star, find_stable_set, OracleError};
use crate::profile::Thresholds;
use crate::template::Template;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendantWitness {
    pub i: usize,
    pub j: usize,
    pub u: usize,
    /// Stable, inside `L_i`, all adjacent to `u`; `v` sees exactly one.
    pub stable: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DenseWitness {
    pub j: usize,
    pub u: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VertexLabels {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pendant: Option<PendantWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dense: Option<DenseWitness>,
    /// `I_v`: the parts in which `v` has a neighbour.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure: Option<Vec<usize>>,
}

impl VertexLabels {
    pub fn is_empty(&self) -> bool {
        self.pendant.is_none() && self.dense.is_none() && self.pure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedNeighbourhood {
    pub template: Template,
    pub omega: usize,
    pub s: usize,
    /// `N(𝓛)`.
    pub neighbourhood: VertexSet,
    /// One entry per vertex of `N(𝓛)`.
    pub labels: BTreeMap<usize, VertexLabels>,
    /// `I ↦ M_I` over the pure vertices.
    pub m_partition: BTreeMap<Vec<usize>, VertexSet>,
}

impl ClassifiedNeighbourhood {
    fn select(&self, f: impl Fn(&VertexLabels) -> bool) -> VertexSet {
        VertexSet::from_ids(
            self.neighbourhood.universe(),
            self.labels.iter().filter(|(_, l)| f(l)).map(|(&v, _)| v),
        )
    }

    pub fn pendant(&self) -> VertexSet {
        self.select(|l| l.pendant.is_some())
    }

    pub fn dense(&self) -> VertexSet {
        self.select(|l| l.dense.is_some())
    }

    pub fn pure(&self) -> VertexSet {
        self.select(|l| l.pure.is_some())
    }

    pub fn unlabelled(&self) -> VertexSet {
        self.select(VertexLabels::is_empty)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("vertex {u} in class {j} has outdegree {outdegree}, cap is below {cap}")]
    Outdegree {
        u: usize,
        j: usize,
        outdegree: usize,
        cap: u128,
    },
}

/// `N(𝓛)` inside `universe`: vertices outside `V(𝓛)` with a neighbour in
/// some part (neighbours in `L0` do not count).
pub fn template_neighbourhood(g: &Graph, universe: &VertexSet, t: &Template) -> VertexSet {
    let union = t.parts_union();
    VertexSet::from_ids(
        g.n(),
        universe
            .difference(&t.support())
            .iter()
            .filter(|&v| !g.nbrs(v).is_disjoint(&union)),
    )
}

pub fn classify(g: &Graph, t: &Template, th: &Thresholds) -> ClassifiedNeighbourhood {
    classify_within(g, &g.vertices(), t, th)
}

pub fn classify_within(g: &Graph, universe: &VertexSet, t: &Template, th: &Thresholds) -> ClassifiedNeighbourhood {
    let neighbourhood = template_neighbourhood(g, universe, t);
    let mut labels = BTreeMap::new();
    let mut m_partition: BTreeMap<Vec<usize>, VertexSet> = BTreeMap::new();
    for v in neighbourhood.iter() {
        let l = VertexLabels {
            pendant: find_pendant(g, t, th.s, v),
            dense: find_dense(g, t, th, v),
            pure: find_pure(g, t, th, v),
        };
        if let Some(index_set) = &l.pure {
            m_partition
                .entry(index_set.clone())
                .or_insert_with(|| VertexSet::new(g.n()))
                .insert(v);
        }
        labels.insert(v, l);
    }
    ClassifiedNeighbourhood {
        template: t.clone(),
        omega: th.omega,
        s: th.s,
        neighbourhood,
        labels,
        m_partition,
    }
}

fn find_pendant(g: &Graph, t: &Template, s: usize, v: usize) -> Option<PendantWitness> {
    let nv = g.nbrs(v);
    for (i, li) in t.parts.iter().enumerate() {
        for (j, lj) in t.parts.iter().enumerate() {
            if i == j {
                continue;
            }
            for u in lj.difference(nv).iter() {
                let seen_by_u = li.intersection(g.nbrs(u));
                for w in seen_by_u.intersection(nv).iter() {
                    let pool = seen_by_u.difference(nv).difference(g.nbrs(w));
                    if let Some(rest) = find_stable_set(g, &pool, s) {
                        let mut stable = rest;
                        stable.insert(w);
                        return Some(PendantWitness {
                            i,
                            j,
                            u,
                            stable: stable.to_vec(),
                        });
                    }
                }
            }
        }
    }
    None
}

fn find_dense(g: &Graph, t: &Template, th: &Thresholds, v: usize) -> Option<DenseWitness> {
    for (j, lj) in t.parts.iter().enumerate() {
        for u in lj.iter() {
            if dense_holds(g, t, th, v, j, u) {
                return Some(DenseWitness { j, u });
            }
        }
    }
    None
}

fn dense_holds(g: &Graph, t: &Template, th: &Thresholds, v: usize, j: usize, u: usize) -> bool {
    t.parts
        .iter()
        .enumerate()
        .all(|(i, li)| i == j || th.dense_cap.exceeds(li.intersection(g.nbrs(u)).difference_len(g.nbrs(v))))
}

fn find_pure(g: &Graph, t: &Template, th: &Thresholds, v: usize) -> Option<Vec<usize>> {
    let nv = g.nbrs(v);
    let mut index_set = Vec::new();
    for (i, li) in t.parts.iter().enumerate() {
        if li.is_disjoint(nv) {
            continue;
        }
        if !th.pure_cap.admits(li.difference_len(nv)) {
            return None;
        }
        index_set.push(i);
    }
    (t.k() - index_set.len() >= 2).then_some(index_set)
}

pub fn check_pendant(g: &Graph, t: &Template, s: usize, v: usize, w: &PendantWitness) -> bool {
    let (Some(li), Some(lj)) = (t.parts.get(w.i), t.parts.get(w.j)) else {
        return false;
    };
    let stable = VertexSet::from_ids(g.n(), w.stable.iter().copied());
    w.i != w.j
        && lj.contains(w.u)
        && stable.len() == s + 1
        && w.stable.len() == s + 1
        && stable.is_subset(li)
        && g.is_stable(&stable)
        && stable.is_subset(g.nbrs(w.u))
        && !g.adjacent(v, w.u)
        && stable.intersection_len(g.nbrs(v)) == 1
}

pub fn check_dense(g: &Graph, t: &Template, th: &Thresholds, v: usize, w: &DenseWitness) -> bool {
    t.parts.get(w.j).is_some_and(|lj| lj.contains(w.u)) && dense_holds(g, t, th, v, w.j, w.u)
}

pub fn check_pure(g: &Graph, t: &Template, th: &Thresholds, v: usize, index_set: &[usize]) -> bool {
    find_pure(g, t, th, v).as_deref() == Some(index_set)
}

/// Whether every label in `cn` re-verifies against its definition.
pub fn check_witnesses(g: &Graph, cn: &ClassifiedNeighbourhood, th: &Thresholds) -> bool {
    let t = &cn.template;
    cn.labels.iter().all(|(&v, l)| {
        cn.neighbourhood.contains(v)
            && l.pendant.as_ref().is_none_or(|w| check_pendant(g, t, cn.s, v, w))
            && l.dense.as_ref().is_none_or(|w| check_dense(g, t, th, v, w))
            && l.pure.as_ref().is_none_or(|i| check_pure(g, t, th, v, i))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendantBound {
    pub count: usize,
    /// Decimal; can be far beyond 64 bits.
    pub bound: String,
    pub holds: bool,
}

/// The pendant-count bound: `14^{s+2} ω^{s²+9s+14}` under the asymptotic constants,
/// `k²·partUpper^{s+2}·(s+1)·ω^s` otherwise.
pub fn pendant_bound_value(k: usize, th: &Thresholds, paper: bool) -> BigUint {
    let s = th.s as u32;
    let w = BigUint::from(th.omega);
    if paper {
        BigUint::from(14u32).pow(s + 2) * w.pow(s * s + 9 * s + 14)
    } else {
        BigUint::from(k).pow(2) * BigUint::from(th.part_upper).pow(s + 2) * BigUint::from(th.s + 1) * w.pow(s)
    }
}

pub fn count_pendant_bound(
    g: &Graph,
    cn: &ClassifiedNeighbourhood,
    th: &Thresholds,
    paper: bool,
) -> Result<PendantBound, OracleError> {
    if let Some(witness) = find_induced_double_star(g, th.s) {
        return Err(OracleError::NotHsFree { s: th.s, witness });
    }
    let count = cn.pendant().len();
    let bound = pendant_bound_value(cn.template.k(), th, paper);
    Ok(PendantBound {
        count,
        holds: BigUint::from(count) <= bound,
        bound: bound.to_string(),
    })
}
