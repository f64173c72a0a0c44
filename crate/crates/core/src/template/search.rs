//! Heuristic search for a high-value template inside a vertex set.
//!
//! Candidates come from `K_{t,t}` seeds (`t = partLower`) grown to full
//! parts, plus an exhaustive branch-and-bound when the universe is tiny. Each
//! candidate is improved to a local optimum. The result is not guaranteed to
//! be a maximum-value template.

use super::moves::{improve_within, Improvement};
use super::{validate_template, Template};
use crate::graph::{Graph, VertexSet};
use crate::oracles::find_biclique_in;
use crate::profile::Thresholds;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Universes up to this size are also searched exhaustively.
    pub exhaustive_limit: usize,
    /// Node budget of the exhaustive search; on exhaustion the best template
    /// found so far is kept.
    pub node_budget: u64,
    /// Maximum number of biclique seeds grown per call.
    pub max_seeds: usize,
    /// Templates shorter than this are not admitted.
    pub min_length: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            exhaustive_limit: 14,
            node_budget: 2_000_000,
            max_seeds: 32,
            min_length: 2,
        }
    }
}

pub fn find_max_template(g: &Graph, universe: &VertexSet, th: &Thresholds) -> Option<Template> {
    find_max_template_with(g, universe, th, &SearchOptions::default())
}

pub fn find_max_template_with(
    g: &Graph,
    universe: &VertexSet,
    th: &Thresholds,
    opts: &SearchOptions,
) -> Option<Template> {
    let size = universe.len() as u128;
    if th.part_lower.saturating_mul(opts.min_length.max(1) as u128) > size {
        return None;
    }
    let admissible = |t: &Template| t.k() >= opts.min_length && t.value(th) >= th.min_value;
    let mut best: Option<Template> = None;
    let mut offer = |t: Template| {
        if admissible(&t) && best.as_ref().is_none_or(|b| t.value(th) > b.value(th)) {
            best = Some(t);
        }
    };

    if universe.len() <= opts.exhaustive_limit {
        if let Some(t) = exhaustive(g, universe, th, opts) {
            offer(t);
        }
    }

    let lower = th.part_lower as usize;
    let mut covered = VertexSet::new(g.n());
    let mut seeds = 0;
    for v in universe.iter() {
        if seeds >= opts.max_seeds {
            break;
        }
        if covered.contains(v) {
            continue;
        }
        let Some(b) = find_biclique_in(g, universe, lower, Some(v)) else {
            continue;
        };
        seeds += 1;
        let Some(mut t) = grow_seed(g, universe, th, b.left, b.right) else {
            continue;
        };
        while let Improvement::Improved { template, .. } = improve_within(g, universe, &t, th, opts.min_length) {
            t = template;
        }
        covered.union_with(&t.support());
        offer(t);
    }
    best
}

fn grow_seed(
    g: &Graph,
    universe: &VertexSet,
    th: &Thresholds,
    left: VertexSet,
    right: VertexSet,
) -> Option<Template> {
    let ok = |count: usize| (count as u128) <= th.cross_cap;
    let upper = usize::try_from(th.part_upper).unwrap_or(usize::MAX);
    let capped_to = |side: &VertexSet, exclude: &VertexSet| {
        VertexSet::from_ids(
            g.n(),
            universe
                .difference(exclude)
                .iter()
                .filter(|&u| ok(side.difference_len(g.nbrs(u)))),
        )
    };
    let fill = |core: &VertexSet, extra: &VertexSet| {
        let room = upper.saturating_sub(core.len());
        core.union(&extra.difference(core).take_lowest(room))
    };
    let b = fill(&right, &capped_to(&left, &left));
    let a = fill(&left, &capped_to(&b, &b));
    let mut b2 = VertexSet::from_ids(g.n(), b.iter().filter(|&u| ok(a.difference_len(g.nbrs(u)))));
    if (b2.len() as u128) < th.part_lower {
        b2 = right.clone();
    }
    let grown = Template::new(VertexSet::new(g.n()), vec![a, b2]);
    if validate_template(g, &grown, th).is_ok() {
        return Some(grown);
    }
    let plain = Template::new(VertexSet::new(g.n()), vec![left, right]);
    validate_template(g, &plain, th).is_ok().then_some(plain)
}

struct Exhaustive<'a> {
    g: &'a Graph,
    th: &'a Thresholds,
    verts: Vec<usize>,
    l0: VertexSet,
    parts: Vec<VertexSet>,
    per_vertex: u128,
    min_length: usize,
    nodes: u64,
    budget: u64,
    best_value: u128,
    best: Option<Template>,
}

fn exhaustive(g: &Graph, universe: &VertexSet, th: &Thresholds, opts: &SearchOptions) -> Option<Template> {
    let mut e = Exhaustive {
        g,
        th,
        verts: universe.to_vec(),
        l0: VertexSet::new(g.n()),
        parts: Vec::new(),
        per_vertex: th.l0_weight.max(th.part_bonus.saturating_add(1)),
        min_length: opts.min_length,
        nodes: 0,
        budget: opts.node_budget,
        best_value: th.min_value.saturating_sub(1),
        best: None,
    };
    e.go(0, 0);
    e.best
}

impl Exhaustive<'_> {
    fn go(&mut self, idx: usize, value: u128) {
        self.nodes += 1;
        if self.nodes > self.budget {
            return;
        }
        let rem = (self.verts.len() - idx) as u128;
        let lower = self.th.part_lower;
        let deficit: u128 = self.parts.iter().map(|p| lower.saturating_sub(p.len() as u128)).sum();
        if deficit > rem {
            return;
        }
        let missing_parts = self.min_length.saturating_sub(self.parts.len()) as u128;
        if missing_parts.saturating_mul(lower.max(1)).saturating_add(deficit) > rem {
            return;
        }
        if value.saturating_add(rem.saturating_mul(self.per_vertex)) <= self.best_value {
            return;
        }
        if idx == self.verts.len() {
            self.best_value = value;
            self.best = Some(Template::new(self.l0.clone(), self.parts.clone()));
            return;
        }
        let y = self.verts[idx];
        let ny = self.g.nbrs(y);
        let cap = self.th.cross_cap;
        let within = |c: usize| (c as u128) <= cap;

        let mut all = self.l0.clone();
        for p in &self.parts {
            all.union_with(p);
        }
        if all.is_subset(ny) {
            self.l0.insert(y);
            self.go(idx + 1, value.saturating_add(self.th.l0_weight));
            self.l0.remove(y);
        }
        if self.l0.is_subset(ny) {
            for p in 0..=self.parts.len() {
                let opening = p == self.parts.len();
                if !opening && (self.parts[p].len() as u128) >= self.th.part_upper {
                    continue;
                }
                let g = self.g;
                let fits = self.parts.iter().enumerate().all(|(q, lq)| {
                    q == p
                        || (within(lq.difference_len(ny))
                            && lq.difference(ny).iter().all(|x| {
                                let own = if opening { 0 } else { self.parts[p].difference_len(g.nbrs(x)) };
                                within(own + 1)
                            }))
                });
                if !fits {
                    continue;
                }
                let gain = if opening { 1 + self.th.part_bonus } else { 1 };
                if opening {
                    self.parts.push(VertexSet::from_ids(g.n(), [y]));
                } else {
                    self.parts[p].insert(y);
                }
                self.go(idx + 1, value.saturating_add(gain));
                if opening {
                    self.parts.pop();
                } else {
                    self.parts[p].remove(y);
                }
            }
        }
        self.go(idx + 1, value);
    }
}
