//! Instance generators and the batch experiment runner behind `report.csv`.
//!
//! Every random choice flows from a `ChaCha8Rng`. Instance `i` of a run with
//! seed `S` draws its own seed from the stream `i` of `ChaCha8Rng(S)`, so
//! rows are independent of scheduling and of the other instances.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::degen::{to_proper, verify_kd};
use crate::graph::{families, Graph, GraphError};
use crate::oracles::{chromatic_number_exact_with_limit, find_induced_double_star, find_induced_double_star_through};
use crate::pipeline::{colour_graph, ColourOptions, PeelTrace, PipelineError};
use crate::profile::{ProfileError, ProfileSet};

pub const CSV_HEADER: [&str; 11] = ["n", "m", "s", "profile", "omega", "chi_exact", "k", "d", "colours", "ms", "flags"];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Gnp {
        n: usize,
        p: f64,
    },
    /// Complete multipartite graph with the given part sizes.
    MultipartiteBlowup {
        parts: Vec<usize>,
    },
    /// Random edges in random order, each kept only if it creates no
    /// induced `H_s`; the result is re-checked by the oracle.
    HfreeRejection {
        n: usize,
        p: f64,
        s: usize,
        #[serde(default = "default_max_tries")]
        max_tries: usize,
    },
}

fn default_max_tries() -> usize {
    8
}

#[derive(Debug, Error, PartialEq)]
pub enum GenerationError {
    #[error("edge probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("H_s needs s >= 1")]
    ZeroS,
    #[error("no H_{s}-free graph after {tries} tries")]
    Exhausted { s: usize, tries: usize },
}

pub fn generate(spec: &GeneratorSpec, seed: u64) -> Result<Graph, GenerationError> {
    generate_with(spec, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn generate_with<R: Rng + ?Sized>(spec: &GeneratorSpec, rng: &mut R) -> Result<Graph, GenerationError> {
    match *spec {
        GeneratorSpec::Gnp { n, p } => {
            check_p(p)?;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).expect("in range");
                    }
                }
            }
            Ok(g)
        }
        GeneratorSpec::MultipartiteBlowup { ref parts } => Ok(families::complete_multipartite(parts)),
        GeneratorSpec::HfreeRejection { n, p, s, max_tries } => {
            check_p(p)?;
            if s == 0 {
                return Err(GenerationError::ZeroS);
            }
            let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for _ in 0..max_tries {
                pairs.shuffle(rng);
                let mut g = Graph::empty(n);
                for &(u, v) in &pairs {
                    if !rng.gen_bool(p) {
                        continue;
                    }
                    g.add_edge(u, v).expect("in range");
                    if find_induced_double_star_through(&g, u, v, s).is_some() {
                        g.remove_edge(u, v).expect("in range");
                    }
                }
                if find_induced_double_star(&g, s).is_none() {
                    return Ok(g);
                }
            }
            Err(GenerationError::Exhausted { s, tries: max_tries })
        }
    }
}

fn check_p(p: f64) -> Result<(), GenerationError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenerationError::Probability(p))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

/// One config entry; expands to `count` instances. Exactly one of
/// `generator` and `graph` must be given.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub profile: String,
    #[serde(default = "one")]
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<EdgeList>,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub seed: u64,
    /// Profiles file; relative paths are taken from the config's directory.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profiles: Option<PathBuf>,
    #[serde(default = "default_chi_limit")]
    pub exact_chi_limit: usize,
    /// Embed full peeling traces in `report.json`.
    #[serde(default)]
    pub trace: bool,
    /// Fill the `ms` column. Off by default so reports are reproducible.
    #[serde(default)]
    pub timing: bool,
    /// Skip the H_s-freeness check on inputs above its size limit.
    #[serde(default)]
    pub attest_hfree: bool,
    #[serde(default)]
    pub instances: Vec<InstanceSpec>,
}

fn default_chi_limit() -> usize {
    crate::oracles::DEFAULT_EXACT_CHI_LIMIT
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub s: Option<usize>,
    pub profile: String,
    pub omega: Option<usize>,
    pub chi_exact: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub colours: Option<usize>,
    pub ms: Option<u128>,
    pub flags: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<PeelTrace>,
}

impl ReportRow {
    /// `χ ≤ colours ≤ k(d+1)` where the values are present.
    pub fn invariants_hold(&self) -> bool {
        let lower = match (self.chi_exact, self.colours) {
            (Some(chi), Some(c)) => chi <= c,
            _ => true,
        };
        let upper = match (self.k, self.d, self.colours) {
            (Some(k), Some(d), Some(c)) => c <= k * (d + 1),
            _ => true,
        };
        lower && upper
    }

    fn csv_record(&self) -> Vec<String> {
        fn opt<T: ToString>(x: Option<T>) -> String {
            x.map(|v| v.to_string()).unwrap_or_default()
        }
        vec![
            self.n.to_string(),
            self.m.to_string(),
            opt(self.s),
            self.profile.clone(),
            opt(self.omega),
            opt(self.chi_exact),
            opt(self.k),
            opt(self.d),
            opt(self.colours),
            opt(self.ms),
            self.flags.join(";"),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub seed: u64,
    pub exact_chi_limit: usize,
    pub rows: Vec<ReportRow>,
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let cfg: ExperimentConfig = serde_json::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))?;
        for (i, inst) in cfg.instances.iter().enumerate() {
            if inst.generator.is_some() == inst.graph.is_some() {
                return Err(HarnessError::Config(format!(
                    "instance {i}: give exactly one of `generator` and `graph`"
                )));
            }
        }
        Ok(cfg)
    }
}

fn instance_seed(seed: u64, index: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng.next_u64()
}

fn run_instance(cfg: &ExperimentConfig, profiles: &ProfileSet, index: usize, spec: &InstanceSpec) -> ReportRow {
    let seed = instance_seed(cfg.seed, index);
    let mut row = ReportRow {
        index,
        seed,
        n: 0,
        m: 0,
        s: None,
        profile: spec.profile.clone(),
        omega: None,
        chi_exact: None,
        k: None,
        d: None,
        colours: None,
        ms: None,
        flags: Vec::new(),
        trace: None,
    };
    let graph: Result<Graph, String> = match (&spec.generator, &spec.graph) {
        (Some(gen), _) => generate(gen, seed).map_err(|e| e.to_string()),
        (None, Some(el)) => Graph::build(el.n, &el.edges).map_err(|e: GraphError| e.to_string()),
        (None, None) => Err("no graph source".into()),
    };
    let g = match graph {
        Ok(g) => g,
        Err(_) => {
            row.flags.push("generation-error".into());
            return row;
        }
    };
    row.n = g.n();
    row.m = g.m();
    let profile = match profiles.resolve(&spec.profile) {
        Ok(p) => p,
        Err(_) => {
            row.flags.push("profile-error".into());
            return row;
        }
    };
    row.s = Some(profile.s());
    let opts = ColourOptions {
        attest_hfree: cfg.attest_hfree,
        ..ColourOptions::default()
    };
    let start = Instant::now();
    let outcome = colour_graph(&g, &profile, &opts);
    let elapsed = start.elapsed().as_millis();
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            row.flags.push(
                match e {
                    PipelineError::NotHsFree { .. } => "hfree-violation",
                    PipelineError::Unverified { .. } => "hfree-unverified",
                    _ => "internal-error",
                }
                .into(),
            );
            return row;
        }
    };
    if cfg.timing {
        row.ms = Some(elapsed);
    }
    let col = &outcome.colouring;
    row.omega = Some(outcome.trace.omega);
    row.k = Some(col.k);
    row.d = Some(col.d);
    if verify_kd(&g, col).is_err() {
        row.flags.push("kd-invalid".into());
    }
    match to_proper(&g, col) {
        Ok(p) if p.is_proper(&g) => row.colours = Some(p.num_colours()),
        _ => row.flags.push("improper".into()),
    }
    if g.n() <= cfg.exact_chi_limit {
        if let Ok(chi) = chromatic_number_exact_with_limit(&g, cfg.exact_chi_limit) {
            row.chi_exact = Some(chi.value);
        }
    }
    if !row.invariants_hold() {
        row.flags.push("row-invariant".into());
    }
    row.flags
        .extend(outcome.trace.flags.iter().map(|(name, count)| format!("{name}={count}")));
    if cfg.trace {
        row.trace = Some(outcome.trace);
    }
    row
}

/// Runs every instance; per-instance failures become flags.
pub fn run_experiment(cfg: &ExperimentConfig, profiles: &ProfileSet) -> ExperimentReport {
    let jobs: Vec<&InstanceSpec> = cfg
        .instances
        .iter()
        .flat_map(|spec| std::iter::repeat_n(spec, spec.count))
        .collect();
    let rows = jobs
        .par_iter()
        .enumerate()
        .map(|(i, spec)| run_instance(cfg, profiles, i, spec))
        .collect();
    ExperimentReport {
        seed: cfg.seed,
        exact_chi_limit: cfg.exact_chi_limit,
        rows,
    }
}

pub fn write_csv<W: Write>(report: &ExperimentReport, out: W) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in &report.rows {
        w.write_record(row.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

/// Loads a config file, runs it and writes `report.csv` and `report.json`
/// into `out_dir`.
pub fn run_config_file(config: &Path, out_dir: &Path) -> Result<ExperimentReport, HarnessError> {
    let cfg = ExperimentConfig::from_json(&std::fs::read_to_string(config)?)?;
    let profiles = match &cfg.profiles {
        Some(p) if p.is_relative() => ProfileSet::load(&config.parent().unwrap_or(Path::new(".")).join(p))?,
        Some(p) => ProfileSet::load(p)?,
        None => ProfileSet::default(),
    };
    let report = run_experiment(&cfg, &profiles);
    std::fs::create_dir_all(out_dir)?;
    write_csv(&report, std::fs::File::create(out_dir.join("report.csv"))?)?;
    let mut json = std::fs::File::create(out_dir.join("report.json"))?;
    serde_json::to_writer_pretty(&mut json, &report)?;
    json.write_all(b"\n")?;
    Ok(report)
}
