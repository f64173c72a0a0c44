//! Colouring the pure vertices: the union of the small `M_I` by an acyclic
//! orientation argument, the union of the large ones by clique peeling and
//! recursion on graphs of smaller clique number.

use serde::Serialize;

use super::{ClassifiedNeighbourhood, ClassifyError};
use crate::degen::DegenColouring;
use crate::graph::{Graph, VertexSet};
use crate::oracles::{clique_number_of, find_balanced_stable, max_clique_in};
use crate::profile::Thresholds;

fn to_usize(x: u128) -> usize {
    usize::try_from(x).unwrap_or(usize::MAX)
}

/// No stable set meets `a` and `b` in exactly `s` vertices each.
pub fn is_s_crowded(g: &Graph, a: &VertexSet, b: &VertexSet, s: usize) -> bool {
    find_balanced_stable(g, a, b, s, None).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallUnion {
    pub colouring: DegenColouring,
    pub covered: VertexSet,
    pub max_outdegree: usize,
    /// Outdegrees must stay below `m + ω^{s+1}`.
    pub outdegree_cap: u128,
}

/// Colours `∪ M_I` over the `m`-small `I`. A vertex goes to class `j`, the
/// lowest part index outside `I_v`; inside a class, edges point from larger
/// `|I|` to smaller, ties from lower id to higher.
pub fn small_union_colouring(
    g: &Graph,
    cn: &ClassifiedNeighbourhood,
    th: &Thresholds,
) -> Result<SmallUnion, ClassifyError> {
    let k = cn.template.k();
    let m = th.small_cutoff;
    let cap = m.saturating_add(th.incomp_cap);
    let mut covered = VertexSet::new(g.n());
    let mut size_of = vec![0usize; g.n()];
    let mut classes = vec![VertexSet::new(g.n()); k];
    for (index_set, members) in &cn.m_partition {
        if members.len() as u128 > m {
            continue;
        }
        let j = (0..k).find(|j| !index_set.contains(j)).expect("pure index sets miss two parts");
        for v in members.iter() {
            size_of[v] = index_set.len();
        }
        classes[j].union_with(members);
        covered.union_with(members);
    }
    let mut max_outdegree = 0;
    let mut orders = Vec::new();
    let mut d = 0;
    for (j, class) in classes.iter().enumerate() {
        for u in class.iter() {
            let out = g
                .nbrs(u)
                .intersection(class)
                .iter()
                .filter(|&v| size_of[v] < size_of[u] || (size_of[v] == size_of[u] && v > u))
                .count();
            if out as u128 >= cap {
                return Err(ClassifyError::Outdegree {
                    u,
                    j,
                    outdegree: out,
                    cap,
                });
            }
            max_outdegree = max_outdegree.max(out);
        }
        if !class.is_empty() {
            let (order, dj) = g.degeneracy_order_of(class);
            debug_assert!(dj <= 2 * max_outdegree);
            d = d.max(dj);
            orders.push(order);
        }
    }
    Ok(SmallUnion {
        colouring: DegenColouring::from_orders(d, orders),
        covered,
        max_outdegree,
        outdegree_cap: cap,
    })
}

/// The `m`-large index sets, in lexicographic order.
pub fn large_sets(cn: &ClassifiedNeighbourhood, th: &Thresholds) -> Vec<Vec<usize>> {
    cn.m_partition
        .iter()
        .filter(|(_, m)| m.len() as u128 > th.small_cutoff)
        .map(|(i, _)| i.clone())
        .collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum PairBranch {
    /// `second ⊆ first`; `max_nbrs` is the most neighbours a vertex of
    /// `M_first` has in `M_second`.
    SecondInFirst { max_nbrs: usize },
    FirstInSecond { max_nbrs: usize },
    /// The sets cover every part index.
    Complementary { crowded: bool },
    Unrelated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRow {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub branch: PairBranch,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargeSetsReport {
    pub large: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    pub k: usize,
    /// At most `k - 1` large sets.
    pub count_holds: bool,
    pub pairs: Vec<PairRow>,
}

impl LargeSetsReport {
    pub fn holds(&self) -> bool {
        self.count_holds && self.pairs.iter().all(|p| p.holds)
    }
}

pub fn large_sets_structure(g: &Graph, cn: &ClassifiedNeighbourhood, th: &Thresholds) -> LargeSetsReport {
    let k = cn.template.k();
    let large = large_sets(cn, th);
    let set = |i: &Vec<usize>| &cn.m_partition[i];
    let max_nbrs = |from: &VertexSet, to: &VertexSet| from.iter().map(|v| g.nbrs(v).intersection_len(to)).max().unwrap_or(0);
    let mut pairs = Vec::new();
    for (x, first) in large.iter().enumerate() {
        for second in &large[x + 1..] {
            let (branch, holds) = if is_subset(second, first) {
                let n = max_nbrs(set(first), set(second));
                (PairBranch::SecondInFirst { max_nbrs: n }, (n as u128) < th.ramsey_cap)
            } else if is_subset(first, second) {
                let n = max_nbrs(set(second), set(first));
                (PairBranch::FirstInSecond { max_nbrs: n }, (n as u128) < th.ramsey_cap)
            } else if (0..k).all(|i| first.contains(&i) || second.contains(&i)) {
                let crowded = is_s_crowded(g, set(first), set(second), th.s);
                (PairBranch::Complementary { crowded }, crowded)
            } else {
                (PairBranch::Unrelated, false)
            };
            pairs.push(PairRow {
                first: first.clone(),
                second: second.clone(),
                branch,
                holds,
            });
        }
    }
    LargeSetsReport {
        sizes: large.iter().map(|i| set(i).len()).collect(),
        count_holds: large.is_empty() || large.len() < k,
        large,
        k,
        pairs,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LargeUnionReport {
    pub minimal: Option<Vec<usize>>,
    pub a_family: Vec<Vec<usize>>,
    pub b_family: Vec<Vec<usize>>,
    pub a_size: usize,
    pub b_size: usize,
    /// `A` was small enough to list as singletons.
    pub listed: bool,
    pub peeled: Vec<Vec<usize>>,
    pub t: usize,
    pub excluded: Vec<usize>,
    /// Clique-bound assertions that failed, in words.
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargeUnion {
    pub colouring: DegenColouring,
    pub covered: VertexSet,
    pub report: LargeUnionReport,
}

/// Colours `∪ M_I` over the `m`-large `I`. `recurse` must return a valid
/// colouring of the subgraph induced on the set it is given.
pub fn large_union_colouring<E>(
    g: &Graph,
    cn: &ClassifiedNeighbourhood,
    th: &Thresholds,
    recurse: &mut dyn FnMut(&VertexSet) -> Result<DegenColouring, E>,
) -> Result<LargeUnion, E> {
    let n = g.n();
    let omega = th.omega;
    let large = large_sets(cn, th);
    let mut report = LargeUnionReport::default();
    let mut covered = VertexSet::new(n);
    let Some(minimal) = large.iter().min_by_key(|i| (i.len(), (*i).clone())).cloned() else {
        return Ok(LargeUnion {
            colouring: DegenColouring::empty(0, 0),
            covered,
            report,
        });
    };
    let (a_family, b_family): (Vec<_>, Vec<_>) = large.iter().cloned().partition(|i| is_subset(&minimal, i));
    let union_of = |fam: &[Vec<usize>]| {
        let mut u = VertexSet::new(n);
        for i in fam {
            u.union_with(&cn.m_partition[i]);
        }
        u
    };
    let a = union_of(&a_family);
    let b = union_of(&b_family);
    covered.union_with(&a);
    covered.union_with(&b);
    report.minimal = Some(minimal);
    report.a_size = a.len();
    report.b_size = b.len();

    let check = |what: &str, set: &VertexSet, cap: usize, report: &mut LargeUnionReport| {
        let w = clique_number_of(g, set);
        if w > cap {
            report.violations.push(format!("clique number of {what} is {w}, above {cap}"));
        }
    };
    check("A", &a, omega.saturating_sub(1), &mut report);
    check("B", &b, omega.saturating_sub(1), &mut report);

    let mut rec = |set: &VertexSet| -> Result<DegenColouring, E> {
        if set.is_empty() {
            Ok(DegenColouring::empty(0, 0))
        } else {
            recurse(set)
        }
    };
    let peel = th.peel_count;
    let colouring = if (a.len() as u128) <= peel.saturating_mul(omega as u128) {
        report.listed = true;
        DegenColouring::stack([DegenColouring::singletons(&a), rec(&b)?])
    } else {
        let mut rest = a.clone();
        let mut x = VertexSet::new(n);
        let mut t = 0;
        for _ in 0..to_usize(peel) {
            if rest.is_empty() {
                break;
            }
            let clique = max_clique_in(g, &rest);
            t = clique.len();
            rest.difference_with(&clique);
            x.union_with(&clique);
            report.peeled.push(clique.to_vec());
        }
        report.t = t;
        let excluded = VertexSet::from_ids(
            n,
            b.iter().filter(|&v| {
                a_family.iter().any(|i| {
                    let missed = cn.m_partition[i].intersection(&x).difference_len(g.nbrs(v));
                    missed as u128 >= th.ramsey_cap
                })
            }),
        );
        let b_rest = b.difference(&excluded);
        check("A minus the peeled cliques", &rest, t, &mut report);
        check("B minus the excluded set", &b_rest, omega.saturating_sub(t), &mut report);
        report.excluded = excluded.to_vec();
        DegenColouring::stack([
            DegenColouring::singletons(&x),
            rec(&rest)?,
            DegenColouring::singletons(&excluded),
            rec(&b_rest)?,
        ])
    };
    report.a_family = a_family;
    report.b_family = b_family;
    Ok(LargeUnion {
        colouring,
        covered,
        report,
    })
}
