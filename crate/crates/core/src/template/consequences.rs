//! Structural facts that a maximum-value template satisfies, re-derived for
//! the thresholds at hand and checked on a concrete template.
//!
//! Each check first decides whether the exchange argument behind it goes
//! through with these constants (`applicable`). When it does and the fact
//! fails, the exchange itself yields a better template, returned as `fix`.

use serde::Serialize;

use super::{validate_template, Template};
use crate::graph::{Graph, VertexSet};
use crate::profile::Thresholds;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConsequenceKind {
    /// Every part has at least `bound` vertices.
    PartFloor,
    /// Every part vertex has at least `bound` non-neighbours in its own part.
    NonNeighbours,
    /// Fewer than `bound` outside vertices are nearly complete to every part.
    DenseOutside,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsequenceReport {
    pub kind: ConsequenceKind,
    pub applicable: bool,
    pub holds: bool,
    pub bound: u128,
    /// A part index or vertex where the fact fails.
    pub witness: Option<usize>,
    #[serde(skip)]
    pub fix: Option<Template>,
}

pub fn check_consequences(g: &Graph, universe: &VertexSet, t: &Template, th: &Thresholds) -> Vec<ConsequenceReport> {
    vec![part_floor(g, t, th), non_neighbours(g, t, th), dense_outside(g, universe, t, th)]
}

fn improves(g: &Graph, t: &Template, cand: Template, th: &Thresholds) -> Option<Template> {
    (cand.value(th) > t.value(th) && validate_template(g, &cand, th).is_ok()).then_some(cand)
}

fn part_floor(g: &Graph, t: &Template, th: &Thresholds) -> ConsequenceReport {
    // Absorbing every part below the floor into L0 shrinks each kept part
    // by at most ω·crossCap and gains l0Weight - partBonus - |part| per
    // absorbed part.
    let shave = (th.omega as u128).saturating_mul(th.cross_cap);
    let floor = th.l0_weight.saturating_sub(th.part_bonus).saturating_sub(shave);
    let applicable = th.l0_weight >= th.part_bonus.saturating_add(shave) && floor >= th.part_lower.saturating_add(shave);
    let small: Vec<usize> = (0..t.k()).filter(|&i| (t.parts[i].len() as u128) < floor).collect();
    let holds = !applicable || small.is_empty();
    let fix = if holds {
        None
    } else {
        let mut common = g.vertices();
        let mut x = VertexSet::new(g.n());
        for &i in &small {
            if let Some(v) = t.parts[i].intersection(&common).first() {
                x.insert(v);
                common.intersect_with(g.nbrs(v));
            }
        }
        let parts = (0..t.k())
            .filter(|i| !small.contains(i))
            .map(|i| t.parts[i].intersection(&common))
            .collect();
        improves(g, t, Template::new(t.l0.union(&x), parts), th)
    };
    ConsequenceReport {
        kind: ConsequenceKind::PartFloor,
        applicable,
        holds,
        bound: floor,
        witness: small.first().copied(),
        fix,
    }
}

fn non_neighbours(g: &Graph, t: &Template, th: &Thresholds) -> ConsequenceReport {
    let k = t.k() as u128;
    let applicable = t
        .parts
        .iter()
        .all(|p| (p.len() as u128) >= th.part_lower.saturating_add(th.cross_cap));
    let promote_bound = th
        .l0_weight
        .saturating_sub(1)
        .saturating_sub(k.saturating_sub(1).saturating_mul(th.cross_cap));
    let mut report = ConsequenceReport {
        kind: ConsequenceKind::NonNeighbours,
        applicable,
        holds: true,
        bound: promote_bound,
        witness: None,
        fix: None,
    };
    if !applicable {
        return report;
    }
    for p in &t.parts {
        let bound = promote_bound.min((p.len() as u128).saturating_sub(th.part_lower));
        for v in p.iter() {
            if (g.non_nbr_count(v, p) as u128) < bound {
                let mut l0 = t.l0.clone();
                l0.insert(v);
                let parts = t.parts.iter().map(|q| q.intersection(g.nbrs(v))).collect();
                report.holds = false;
                report.witness = Some(v);
                report.fix = improves(g, t, Template::new(l0, parts), th);
                return report;
            }
        }
    }
    report
}

fn dense_outside(g: &Graph, universe: &VertexSet, t: &Template, th: &Thresholds) -> ConsequenceReport {
    let union = t.parts_union();
    let dense = VertexSet::from_ids(
        g.n(),
        universe.difference(&t.support()).iter().filter(|&v| {
            !g.nbrs(v).is_disjoint(&union) && t.parts.iter().all(|p| th.z_cap.admits(p.difference_len(g.nbrs(v))))
        }),
    );
    // A part loses at most partUpper·zCap/(crossCap+1) vertices when an
    // outside set of size partUpper is appended.
    let loss = th
        .part_upper
        .saturating_mul(th.z_cap.num)
        .checked_div(th.z_cap.den.saturating_mul(th.cross_cap.saturating_add(1)))
        .unwrap_or(u128::MAX);
    let k = t.k() as u128;
    let min_part = t.parts.iter().map(|p| p.len() as u128).min().unwrap_or(u128::MAX);
    let gain = th.part_upper.saturating_add(th.part_bonus);
    let cost = k
        .saturating_mul(loss)
        .saturating_add(th.l0_weight.saturating_mul(t.l0.len() as u128));
    let applicable = min_part >= th.part_lower.saturating_add(loss) && gain > cost;
    let holds = !applicable || (dense.len() as u128) < th.part_upper;
    let fix = if holds {
        None
    } else {
        let m = dense.take_lowest(th.part_upper as usize);
        let mut parts: Vec<VertexSet> = t
            .parts
            .iter()
            .map(|p| {
                VertexSet::from_ids(
                    g.n(),
                    p.iter().filter(|&x| (m.difference_len(g.nbrs(x)) as u128) <= th.cross_cap),
                )
            })
            .collect();
        parts.push(m);
        improves(g, t, Template::new(VertexSet::new(g.n()), parts), th)
    };
    ConsequenceReport {
        kind: ConsequenceKind::DenseOutside,
        applicable,
        holds,
        bound: th.part_upper,
        witness: (!holds).then(|| dense.first()).flatten(),
        fix,
    }
}
