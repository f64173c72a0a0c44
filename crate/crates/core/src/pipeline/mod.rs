//! The peeling algorithm: repeatedly take a high-value template inside the
//! remaining vertices, colour its layer `Y`, remove it, and chain the layer
//! colourings together. Subsets whose clique number is smaller are coloured
//! by recursing on the induced subgraph.

mod audit;

pub use audit::{bound_audit, bound_audit_profile, AuditReport, AuditRow};

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::classify::{
    classify_within, dense_colouring, large_sets_structure, large_union_colouring, pendant_bound_value,
    small_union_colouring, template_neighbourhood, ClassifiedNeighbourhood, DenseGroup, LargeSetsReport,
    LargeUnionReport, PendantBound,
};
use crate::degen::{chain, max_forward_degree, verify_kd, DegenColouring, DegenError};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::oracles::{clique_number, clique_number_of, find_induced_double_star, DoubleStarWitness};
use crate::profile::{ThresholdProfile, Thresholds};
use crate::template::{
    check_consequences, find_max_template_with, improve_within, ConsequenceReport, Improvement, SearchOptions,
    Template,
};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("graph is not H_{s}-free: induced copy at {witness:?}")]
    NotHsFree { s: usize, witness: DoubleStarWitness },
    #[error("graph has {n} vertices, above the H_s-freeness check limit {limit}; attest freeness to proceed")]
    Unverified { n: usize, limit: usize },
    #[error("template vertex {0} lies outside the peeling universe")]
    TemplateOutside(usize),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<DegenError> for PipelineError {
    fn from(e: DegenError) -> Self {
        PipelineError::Invariant(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZySets {
    pub z: VertexSet,
    pub n: VertexSet,
    pub y: VertexSet,
}

/// `Z_A`, `N_A` and `Y_A` of a template inside `a`.
pub fn z_y_sets(g: &Graph, t: &Template, a: &VertexSet, th: &Thresholds) -> Result<ZySets, PipelineError> {
    let support = t.support();
    if let Some(v) = support.difference(a).first() {
        return Err(PipelineError::TemplateOutside(v));
    }
    let outside = a.difference(&support);
    let mut z = t.l0.clone();
    for v in outside.iter() {
        if t.parts.iter().all(|p| th.z_cap.admits(p.difference_len(g.nbrs(v)))) {
            z.insert(v);
        }
    }
    let n = template_neighbourhood(g, a, t);
    let y = support.union(&n).difference(&z);
    Ok(ZySets { z, n, y })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ForwardAudit {
    pub cap: u128,
    /// `(vertex, neighbours in later layers)` for every vertex over the cap.
    pub failures: Vec<(usize, usize)>,
    /// Largest forward degree among vertices within the cap.
    pub max_passing: usize,
}

impl ForwardAudit {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For each layer `Y_i` and each of its vertices, counts neighbours in the
/// later layers.
pub fn audit_forward_degrees(g: &Graph, layers: &[VertexSet], cap: u128) -> ForwardAudit {
    let mut audit = ForwardAudit {
        cap,
        ..ForwardAudit::default()
    };
    let mut later = VertexSet::new(g.n());
    for layer in layers.iter().rev() {
        for v in layer.iter() {
            let count = g.nbrs(v).intersection_len(&later);
            if count as u128 > cap {
                audit.failures.push((v, count));
            } else {
                audit.max_passing = audit.max_passing.max(count);
            }
        }
        later.union_with(layer);
    }
    audit.failures.sort_unstable();
    audit
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColourOptions {
    pub attest_hfree: bool,
    /// Inputs up to this size are checked for an induced `H_s`.
    pub hfree_check_limit: usize,
    pub search: SearchOptions,
}

impl Default for ColourOptions {
    fn default() -> Self {
        ColourOptions {
            attest_hfree: false,
            hfree_check_limit: 400,
            search: SearchOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelCounts {
    pub neighbourhood: usize,
    pub pendant: usize,
    pub dense: usize,
    pub pure: usize,
    pub unlabelled: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepTrace {
    pub template: Template,
    pub value: u128,
    pub consequences: Vec<ConsequenceReport>,
    pub y: VertexSet,
    pub z: VertexSet,
    pub labels: LabelCounts,
    pub pendant_bound: PendantBound,
    /// `None` when the orientation bound failed and the small union was
    /// coloured by degeneracy instead.
    pub small_union_outdegree: Option<usize>,
    pub large_sets: LargeSetsReport,
    pub large_union: LargeUnionReport,
    pub dense_groups: Vec<DenseGroup>,
    pub colouring: DegenColouring,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelTrace {
    pub profile: String,
    pub s: usize,
    pub omega: usize,
    pub base_case: bool,
    pub steps: Vec<StepTrace>,
    pub residual: VertexSet,
    pub residual_colouring: DegenColouring,
    pub audit: ForwardAudit,
    pub d_prime: usize,
    pub final_colouring: DegenColouring,
    /// Counts of fallbacks and failed structural checks, including those of
    /// recursive calls.
    pub flags: BTreeMap<String, usize>,
    pub subcalls: usize,
    pub max_depth: usize,
}

impl PeelTrace {
    /// `Y_1, …, Y_n, Y_{n+1}`.
    pub fn layers(&self) -> Vec<VertexSet> {
        let mut l: Vec<VertexSet> = self.steps.iter().map(|s| s.y.clone()).collect();
        l.push(self.residual.clone());
        l
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColourOutcome {
    pub colouring: DegenColouring,
    pub trace: PeelTrace,
}

struct Ctx<'a> {
    profile: &'a ThresholdProfile,
    opts: &'a ColourOptions,
    flags: BTreeMap<String, usize>,
    subcalls: usize,
    max_depth: usize,
    depth_limit: usize,
}

impl Ctx<'_> {
    fn flag(&mut self, name: &str, count: usize) {
        if count > 0 {
            *self.flags.entry(name.to_string()).or_default() += count;
        }
    }
}

pub fn colour_graph(g: &Graph, profile: &ThresholdProfile, opts: &ColourOptions) -> Result<ColourOutcome, PipelineError> {
    let s = profile.s();
    if !opts.attest_hfree {
        if g.n() > opts.hfree_check_limit {
            return Err(PipelineError::Unverified {
                n: g.n(),
                limit: opts.hfree_check_limit,
            });
        }
        if let Some(witness) = find_induced_double_star(g, s) {
            return Err(PipelineError::NotHsFree { s, witness });
        }
    }
    let mut ctx = Ctx {
        profile,
        opts,
        flags: BTreeMap::new(),
        subcalls: 0,
        max_depth: 0,
        depth_limit: 0,
    };
    let (colouring, mut trace) = colour_rec(g, &mut ctx, 0)?;
    verify_kd(g, &colouring).map_err(|e| PipelineError::Invariant(format!("final colouring: {e}")))?;
    trace.flags = ctx.flags;
    trace.subcalls = ctx.subcalls;
    trace.max_depth = ctx.max_depth;
    Ok(ColourOutcome { colouring, trace })
}

fn colour_rec(g: &Graph, ctx: &mut Ctx, depth: usize) -> Result<(DegenColouring, PeelTrace), PipelineError> {
    let omega = clique_number(g).value;
    if depth == 0 {
        ctx.depth_limit = omega;
    } else if depth > ctx.depth_limit {
        return Err(PipelineError::Invariant(format!("recursion depth {depth} exceeds omega {}", ctx.depth_limit)));
    }
    ctx.max_depth = ctx.max_depth.max(depth);
    let th = ctx.profile.at(omega);
    if th.check(&ctx.profile.name).is_err() {
        ctx.flag("profile-check", 1);
    }
    let all = g.vertices();
    let name = ctx.profile.name.clone();
    let empty_trace = |colouring: DegenColouring, residual: VertexSet, base_case: bool| PeelTrace {
        profile: name.clone(),
        s: th.s,
        omega,
        base_case,
        steps: Vec::new(),
        residual,
        residual_colouring: colouring.clone(),
        audit: ForwardAudit {
            cap: th.out_nbr_cap,
            ..ForwardAudit::default()
        },
        d_prime: 0,
        final_colouring: colouring,
        flags: BTreeMap::new(),
        subcalls: 0,
        max_depth: 0,
    };
    if omega <= th.base_omega {
        let c = DegenColouring::by_degeneracy(g, &all);
        return Ok((c.clone(), empty_trace(c, all, true)));
    }

    let mut remaining = all.clone();
    let mut steps = Vec::new();
    while let Some(found) = find_max_template_with(g, &remaining, &th, &ctx.opts.search) {
        let (t, consequences) = settle(g, &remaining, found, &th, ctx);
        let zy = z_y_sets(g, &t, &remaining, &th)?;
        let step = colour_layer(g, ctx, depth, omega, &th, &remaining, t, consequences, &zy)?;
        remaining.difference_with(&zy.y);
        steps.push(step);
    }
    let residual_colouring = DegenColouring::by_degeneracy(g, &remaining);

    let mut layers: Vec<VertexSet> = steps.iter().map(|s: &StepTrace| s.y.clone()).collect();
    layers.push(remaining.clone());
    check_partition(g, &layers)?;
    let audit = audit_forward_degrees(g, &layers, th.out_nbr_cap);
    ctx.flag("forward-degree", audit.failures.len());
    let failing = VertexSet::from_ids(g.n(), audit.failures.iter().map(|&(v, _)| v));

    let mut pieces: Vec<DegenColouring> = steps
        .iter()
        .map(|s| s.colouring.clone())
        .chain(std::iter::once(residual_colouring.clone()))
        .map(|c| c.without(&failing))
        .collect();
    let width = pieces.iter().map(|p| p.k).max().unwrap_or(0);
    pieces = pieces.into_iter().map(|p| p.padded(width)).collect();
    let kept: Vec<VertexSet> = layers.iter().map(|l| l.difference(&failing)).collect();
    let d_prime = max_forward_degree(g, &kept);
    let chained = chain(g, &pieces, d_prime)?;
    let final_colouring = DegenColouring::stack([chained, DegenColouring::singletons(&failing)]);

    let trace = PeelTrace {
        steps,
        residual_colouring,
        audit,
        d_prime,
        final_colouring: final_colouring.clone(),
        ..empty_trace(DegenColouring::empty(0, 0), remaining, false)
    };
    Ok((final_colouring, trace))
}

fn check_partition(g: &Graph, layers: &[VertexSet]) -> Result<(), PipelineError> {
    let mut seen = VertexSet::new(g.n());
    for l in layers {
        if let Some(v) = seen.intersection(l).first() {
            return Err(PipelineError::Invariant(format!("vertex {v} lies in two layers")));
        }
        seen.union_with(l);
    }
    if seen != g.vertices() {
        return Err(PipelineError::Invariant("layers do not cover the graph".into()));
    }
    Ok(())
}

/// Re-checks the structural facts of the chosen template, applying any
/// exchange they expose and improving again until none applies.
fn settle(
    g: &Graph,
    universe: &VertexSet,
    mut t: Template,
    th: &Thresholds,
    ctx: &mut Ctx,
) -> (Template, Vec<ConsequenceReport>) {
    loop {
        let reports = check_consequences(g, universe, &t, th);
        let fix = reports
            .iter()
            .filter_map(|r| r.fix.clone())
            .find(|f| f.k() >= ctx.opts.search.min_length);
        match fix {
            Some(better) => {
                t = better;
                while let Improvement::Improved { template, .. } =
                    improve_within(g, universe, &t, th, ctx.opts.search.min_length)
                {
                    t = template;
                }
            }
            None => {
                for r in reports.iter().filter(|r| !r.holds) {
                    ctx.flag(&format!("consequence-{}", kind_name(r)), 1);
                }
                return (t, reports);
            }
        }
    }
}

fn kind_name(r: &ConsequenceReport) -> String {
    serde_json::to_value(r.kind)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// Colours `set` (a subset of `g`): by recursion on the induced subgraph when
/// its clique number is below `omega`, by degeneracy order otherwise.
fn colour_subset(
    g: &Graph,
    set: &VertexSet,
    omega: usize,
    ctx: &mut Ctx,
    depth: usize,
) -> Result<DegenColouring, PipelineError> {
    if set.is_empty() {
        return Ok(DegenColouring::empty(0, 0));
    }
    if clique_number_of(g, set) < omega {
        let (sub, map) = g.induced_subgraph(set)?;
        ctx.subcalls += 1;
        let (c, _) = colour_rec(&sub, ctx, depth + 1)?;
        Ok(c.relabel(&map))
    } else {
        ctx.flag("recursion-fallback", 1);
        Ok(DegenColouring::by_degeneracy(g, set))
    }
}

fn restrict(cn: &ClassifiedNeighbourhood, keep: &VertexSet) -> ClassifiedNeighbourhood {
    let mut out = cn.clone();
    out.neighbourhood.intersect_with(keep);
    out.labels.retain(|v, _| keep.contains(*v));
    for m in out.m_partition.values_mut() {
        m.intersect_with(keep);
    }
    out.m_partition.retain(|_, m| !m.is_empty());
    out
}

#[allow(clippy::too_many_arguments)]
fn colour_layer(
    g: &Graph,
    ctx: &mut Ctx,
    depth: usize,
    omega: usize,
    th: &Thresholds,
    universe: &VertexSet,
    t: Template,
    consequences: Vec<ConsequenceReport>,
    zy: &ZySets,
) -> Result<StepTrace, PipelineError> {
    let outer = zy.y.difference(&t.parts_union());
    let cn = restrict(&classify_within(g, universe, &t, th), &outer);

    let pure = cn.pure();
    let dense = cn.dense().difference(&pure);
    let pendant = cn.pendant().difference(&pure).difference(&dense);
    let unlabelled = outer.difference(&pure).difference(&dense).difference(&pendant);
    let labels = LabelCounts {
        neighbourhood: zy.n.len(),
        pendant: pendant.len(),
        dense: dense.len(),
        pure: pure.len(),
        unlabelled: unlabelled.len(),
    };
    ctx.flag("unlabelled", unlabelled.len());
    if ctx.profile.is_paper() && omega >= 200 {
        ctx.flag("trichotomy", unlabelled.len());
    }

    let pendant_count = cn.pendant().len();
    let bound = pendant_bound_value(t.k(), th, ctx.profile.is_paper());
    let pendant_bound = PendantBound {
        count: pendant_count,
        holds: num_bigint::BigUint::from(pendant_count) <= bound,
        bound: bound.to_string(),
    };
    ctx.flag("pendant-bound", usize::from(!pendant_bound.holds));

    let mut pieces = Vec::new();
    for p in &t.parts {
        pieces.push(colour_subset(g, p, omega, ctx, depth)?);
    }

    let large_sets = large_sets_structure(g, &cn, th);
    ctx.flag("large-sets", usize::from(!large_sets.holds()));
    let small_union_outdegree = match small_union_colouring(g, &cn, th) {
        Ok(su) => {
            pieces.push(su.colouring);
            Some(su.max_outdegree)
        }
        Err(_) => {
            ctx.flag("small-union-outdegree", 1);
            let small: VertexSet = {
                let mut u = VertexSet::new(g.n());
                for m in cn.m_partition.values().filter(|m| m.len() as u128 <= th.small_cutoff) {
                    u.union_with(m);
                }
                u
            };
            pieces.push(DegenColouring::by_degeneracy(g, &small));
            None
        }
    };
    let lu = large_union_colouring(g, &cn, th, &mut |set| colour_subset(g, set, omega, ctx, depth))?;
    ctx.flag("large-union-clique", lu.report.violations.len());
    pieces.push(lu.colouring);

    let du = dense_colouring(g, &cn, th, &dense, &mut |set| colour_subset(g, set, omega, ctx, depth))?;
    ctx.flag("dense-over-cap", du.groups.iter().filter(|gr| gr.over_cap).count());
    pieces.push(du.colouring);

    pieces.push(DegenColouring::singletons(&pendant));
    if !unlabelled.is_empty() {
        pieces.push(DegenColouring::by_degeneracy(g, &unlabelled));
    }
    let colouring = DegenColouring::stack(pieces).compacted();
    let covered = VertexSet::from_ids(g.n(), colouring.covered());
    if covered != zy.y {
        return Err(PipelineError::Invariant("layer colouring does not cover its layer".into()));
    }
    Ok(StepTrace {
        value: t.value(th),
        template: t,
        consequences,
        y: zy.y.clone(),
        z: zy.z.clone(),
        labels,
        pendant_bound,
        small_union_outdegree,
        large_sets,
        large_union: lu.report,
        dense_groups: du.groups,
        colouring,
    })
}
