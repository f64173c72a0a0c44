//! `s`-templates: a clique `L0` joined to disjoint parts `L1..Lk`, each part
//! of bounded size and almost complete to every other part.

mod consequences;
mod moves;
mod search;

pub use consequences::{check_consequences, ConsequenceKind, ConsequenceReport};
pub use moves::{improve_template, improve_within, Improvement, Move};
pub use search::{find_max_template, find_max_template_with, SearchOptions};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::profile::Thresholds;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Template {
    pub l0: VertexSet,
    pub parts: Vec<VertexSet>,
}

/// The first clause a template violates.
#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum TemplateViolation {
    #[error("sets are over a universe of {found}, graph has {expected} vertices")]
    Universe { expected: usize, found: usize },
    #[error("vertex {vertex} lies in two of the sets")]
    Overlap { vertex: usize },
    #[error("L0 is not a clique: {u} and {v} are non-adjacent")]
    L0Clique { u: usize, v: usize },
    #[error("L0 join: {l0} is not adjacent to {v} in part {part}")]
    L0Join { l0: usize, v: usize, part: usize },
    #[error("part {part} has size {size}, outside [{lower}, {upper}]")]
    PartSize {
        part: usize,
        size: usize,
        lower: u128,
        upper: u128,
    },
    #[error("vertex {vertex} of part {from} has {count} non-neighbours in part {to}, above {cap}")]
    CrossCap {
        vertex: usize,
        from: usize,
        to: usize,
        count: usize,
        cap: u128,
    },
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TemplateError {
    #[error("no vertex of part {part} is adjacent to the transversal built so far")]
    TransversalFailed { part: usize },
    #[error("clique of size {size} from L0 and the transversal exceeds omega = {omega}")]
    CliqueBound { size: usize, omega: usize },
}

impl Template {
    pub fn new(l0: VertexSet, parts: Vec<VertexSet>) -> Self {
        Template { l0, parts }
    }

    pub fn empty(n: usize) -> Self {
        Template {
            l0: VertexSet::new(n),
            parts: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// `L1 ∪ ⋯ ∪ Lk`.
    pub fn parts_union(&self) -> VertexSet {
        let mut u = self.l0.clone();
        u.clear();
        for p in &self.parts {
            u.union_with(p);
        }
        u
    }

    /// `V(𝓛)`.
    pub fn support(&self) -> VertexSet {
        let mut u = self.parts_union();
        u.union_with(&self.l0);
        u
    }

    pub fn value(&self, th: &Thresholds) -> u128 {
        let sizes: u128 = self.parts.iter().map(|p| p.len() as u128).sum();
        sizes
            .saturating_add(th.l0_weight.saturating_mul(self.l0.len() as u128))
            .saturating_add(th.part_bonus.saturating_mul(self.k() as u128))
    }
}

pub fn template_value(t: &Template, th: &Thresholds) -> u128 {
    t.value(th)
}

fn within(count: usize, cap: u128) -> bool {
    (count as u128) <= cap
}

pub fn validate_template(g: &Graph, t: &Template, th: &Thresholds) -> Result<(), TemplateViolation> {
    let n = g.n();
    for set in std::iter::once(&t.l0).chain(&t.parts) {
        if set.universe() != n {
            return Err(TemplateViolation::Universe {
                expected: n,
                found: set.universe(),
            });
        }
    }
    let mut seen = t.l0.clone();
    for p in &t.parts {
        if let Some(vertex) = seen.intersection(p).first() {
            return Err(TemplateViolation::Overlap { vertex });
        }
        seen.union_with(p);
    }
    for u in t.l0.iter() {
        if let Some(v) = t.l0.above(u).difference(g.nbrs(u)).first() {
            return Err(TemplateViolation::L0Clique { u, v });
        }
    }
    for (i, p) in t.parts.iter().enumerate() {
        for l0 in t.l0.iter() {
            if let Some(v) = p.difference(g.nbrs(l0)).first() {
                return Err(TemplateViolation::L0Join { l0, v, part: i });
            }
        }
    }
    for (i, p) in t.parts.iter().enumerate() {
        let size = p.len() as u128;
        if size < th.part_lower || size > th.part_upper {
            return Err(TemplateViolation::PartSize {
                part: i,
                size: p.len(),
                lower: th.part_lower,
                upper: th.part_upper,
            });
        }
    }
    for (i, p) in t.parts.iter().enumerate() {
        for v in p.iter() {
            for (j, q) in t.parts.iter().enumerate() {
                if i == j {
                    continue;
                }
                let count = q.difference_len(g.nbrs(v));
                if !within(count, th.cross_cap) {
                    return Err(TemplateViolation::CrossCap {
                        vertex: v,
                        from: i,
                        to: j,
                        count,
                        cap: th.cross_cap,
                    });
                }
            }
        }
    }
    Ok(())
}

/// One vertex per part, pairwise adjacent, chosen greedily by lowest id.
/// With `omega` given, also asserts `k + |L0| ≤ ω`.
pub fn transversal_clique(g: &Graph, t: &Template, omega: Option<usize>) -> Result<Vec<usize>, TemplateError> {
    let mut chosen = Vec::with_capacity(t.k());
    let mut common = g.vertices();
    for (part, p) in t.parts.iter().enumerate() {
        let v = p.intersection(&common).first().ok_or(TemplateError::TransversalFailed { part })?;
        chosen.push(v);
        common.intersect_with(g.nbrs(v));
    }
    if let Some(omega) = omega {
        let size = chosen.len() + t.l0.len();
        if size > omega {
            return Err(TemplateError::CliqueBound { size, omega });
        }
    }
    Ok(chosen)
}
