//! The four exchange moves, tried in a fixed order: absorb small parts into
//! `L0`, promote one vertex into `L0`, split a part in two, append an
//! external part.

use serde::Serialize;

use super::{validate_template, Template};
use crate::graph::{Graph, VertexSet};
use crate::profile::Thresholds;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// The listed parts were replaced by one transversal vertex each in `L0`.
    Absorb { parts: Vec<usize> },
    Promote { vertex: usize, part: usize },
    /// `part` was split around `vertex`.
    Split { part: usize, vertex: usize },
    Append { keep_l0: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Improvement {
    Improved { template: Template, by: Move },
    LocallyOptimal,
}

pub fn improve_template(g: &Graph, t: &Template, th: &Thresholds) -> Improvement {
    improve_within(g, &g.vertices(), t, th, 0)
}

/// As `improve_template`, with appended parts drawn from `universe` only and
/// candidates of length below `min_length` rejected.
pub fn improve_within(
    g: &Graph,
    universe: &VertexSet,
    t: &Template,
    th: &Thresholds,
    min_length: usize,
) -> Improvement {
    let base = t.value(th);
    let accept = |cand: &Template| {
        cand.k() >= min_length && cand.value(th) > base && validate_template(g, cand, th).is_ok()
    };
    let found = absorb(g, t, &accept)
        .or_else(|| promote(g, t, &accept))
        .or_else(|| split(g, t, th, &accept))
        .or_else(|| append(g, universe, t, th, &accept));
    match found {
        Some((template, by)) => Improvement::Improved { template, by },
        None => Improvement::LocallyOptimal,
    }
}

type Found = Option<(Template, Move)>;

fn absorb(g: &Graph, t: &Template, accept: &dyn Fn(&Template) -> bool) -> Found {
    let mut order: Vec<usize> = (0..t.k()).collect();
    order.sort_by_key(|&i| (t.parts[i].len(), i));
    for h in 1..=order.len() {
        let mut chosen: Vec<usize> = order[..h].to_vec();
        chosen.sort_unstable();
        let mut common = g.vertices();
        let mut x = VertexSet::new(g.n());
        let mut ok = true;
        for &i in &chosen {
            match t.parts[i].intersection(&common).first() {
                Some(v) => {
                    x.insert(v);
                    common.intersect_with(g.nbrs(v));
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let parts = (0..t.k())
            .filter(|i| !chosen.contains(i))
            .map(|i| t.parts[i].intersection(&common))
            .collect();
        let cand = Template::new(t.l0.union(&x), parts);
        if accept(&cand) {
            return Some((cand, Move::Absorb { parts: chosen }));
        }
    }
    None
}

fn promote(g: &Graph, t: &Template, accept: &dyn Fn(&Template) -> bool) -> Found {
    for (i, p) in t.parts.iter().enumerate() {
        for v in p.iter() {
            let mut l0 = t.l0.clone();
            l0.insert(v);
            let parts = t.parts.iter().map(|q| q.intersection(g.nbrs(v))).collect();
            let cand = Template::new(l0, parts);
            if accept(&cand) {
                return Some((cand, Move::Promote { vertex: v, part: i }));
            }
        }
    }
    None
}

/// Grows `A ∋ v` and shrinks `B ⊆ N(v)` inside one part until every vertex
/// of each side has at most `crossCap` non-neighbours on the other side.
pub(crate) fn split_around(g: &Graph, part: &VertexSet, v: usize, cap: u128) -> (VertexSet, VertexSet) {
    let ok = |count: usize| (count as u128) <= cap;
    let mut b = part.intersection(g.nbrs(v));
    loop {
        let outside = part.difference(&b);
        let a = VertexSet::from_ids(g.n(), outside.iter().filter(|&w| ok(b.difference_len(g.nbrs(w)))));
        let next_b = VertexSet::from_ids(g.n(), b.iter().filter(|&w| ok(a.difference_len(g.nbrs(w)))));
        if next_b == b {
            return (a, b);
        }
        b = next_b;
    }
}

fn split(g: &Graph, t: &Template, th: &Thresholds, accept: &dyn Fn(&Template) -> bool) -> Found {
    let lower = th.part_lower;
    for (i, p) in t.parts.iter().enumerate() {
        for v in p.iter() {
            if (p.intersection_len(g.nbrs(v)) as u128) < lower {
                continue;
            }
            let (a, b) = split_around(g, p, v, th.cross_cap);
            if (a.len() as u128) < lower || (b.len() as u128) < lower {
                continue;
            }
            let mut parts = t.parts.clone();
            parts[i] = a;
            parts.insert(i + 1, b);
            let cand = Template::new(t.l0.clone(), parts);
            if accept(&cand) {
                return Some((cand, Move::Split { part: i, vertex: v }));
            }
        }
    }
    None
}

fn append(
    g: &Graph,
    universe: &VertexSet,
    t: &Template,
    th: &Thresholds,
    accept: &dyn Fn(&Template) -> bool,
) -> Found {
    let ok = |count: usize| (count as u128) <= th.cross_cap;
    let pool = VertexSet::from_ids(
        g.n(),
        universe
            .difference(&t.support())
            .iter()
            .filter(|&v| t.parts.iter().all(|p| ok(p.difference_len(g.nbrs(v))))),
    );
    let upper = usize::try_from(th.part_upper).unwrap_or(usize::MAX);
    for keep_l0 in [true, false] {
        let (l0, eligible) = if keep_l0 {
            (t.l0.clone(), g.common_nbrs(&t.l0, &pool))
        } else {
            (VertexSet::new(g.n()), pool.clone())
        };
        let m = eligible.take_lowest(upper);
        if (m.len() as u128) < th.part_lower {
            continue;
        }
        let mut parts: Vec<VertexSet> = t
            .parts
            .iter()
            .map(|p| VertexSet::from_ids(g.n(), p.iter().filter(|&x| ok(m.difference_len(g.nbrs(x))))))
            .collect();
        parts.push(m);
        let cand = Template::new(l0, parts);
        if accept(&cand) {
            return Some((cand, Move::Append { keep_l0 }));
        }
    }
    None
}
