use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chibound::degen::{to_proper, verify_kd};
use chibound::graph::{read_graph_file, Graph};
use chibound::harness::run_config_file;
use chibound::oracles::{
    chromatic_number_exact_with_limit, clique_number, find_biclique_subgraph, find_induced_double_star,
    DEFAULT_EXACT_CHI_LIMIT,
};
use chibound::pipeline::{bound_audit, colour_graph, ColourOptions, PipelineError};
use chibound::profile::ProfileSet;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "chibound", version, about = "Degenerate colourings of double-star-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Omega,
    Chi,
    Hfree,
    Biclique,
}

#[derive(Subcommand)]
enum Command {
    /// Run one exact oracle and print its result as JSON.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[arg(long)]
        graph: PathBuf,
        /// Double-star parameter for `hfree`.
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Side length for `biclique`.
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Vertex limit for `chi`.
        #[arg(long, default_value_t = DEFAULT_EXACT_CHI_LIMIT)]
        limit: usize,
    },
    /// Colour a graph by template peeling and write the trace.
    Colour {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        profile: String,
        /// JSON file with extra profiles.
        #[arg(long)]
        profiles: Option<PathBuf>,
        /// Skip the H_s-freeness check on large inputs.
        #[arg(long)]
        attest_hfree: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate the bound inequalities exactly.
    Audit {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        omega: u64,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Run an experiment config, writing report.csv and report.json.
    Bench {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn load(path: &Path) -> Result<Graph, ExitCode> {
    read_graph_file(path).map_err(|e| fail(1, format!("{}: {e}", path.display())))
}

fn print(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

fn oracle(kind: OracleKind, g: &Graph, s: usize, t: usize, limit: usize) -> ExitCode {
    let out = match kind {
        OracleKind::Omega => {
            let r = clique_number(g);
            json!({"omega": r.value, "witness": r.witness})
        }
        OracleKind::Chi => match chromatic_number_exact_with_limit(g, limit) {
            Ok(r) => json!({"chi": r.value, "colouring": r.witness}),
            Err(e) => return fail(1, e),
        },
        OracleKind::Hfree => {
            if s == 0 {
                return fail(1, "--s must be at least 1");
            }
            match find_induced_double_star(g, s) {
                None => json!({"s": s, "hfree": true}),
                Some(w) => json!({"s": s, "hfree": false, "witness": w}),
            }
        }
        OracleKind::Biclique => match find_biclique_subgraph(g, t) {
            None => json!({"t": t, "found": false}),
            Some(b) => json!({"t": t, "found": true, "left": b.left.to_vec(), "right": b.right.to_vec()}),
        },
    };
    print(&out);
    ExitCode::SUCCESS
}

fn colour(
    g: &Graph,
    profile: &str,
    profiles: Option<&PathBuf>,
    attest_hfree: bool,
    out: &PathBuf,
) -> ExitCode {
    let set = match profiles.map(|p| ProfileSet::load(p)).transpose() {
        Ok(set) => set.unwrap_or_default(),
        Err(e) => return fail(1, e),
    };
    let profile = match set.resolve(profile) {
        Ok(p) => p,
        Err(e) => return fail(1, e),
    };
    let opts = ColourOptions {
        attest_hfree,
        ..ColourOptions::default()
    };
    let outcome = match colour_graph(g, &profile, &opts) {
        Ok(o) => o,
        Err(PipelineError::NotHsFree { s, witness }) => {
            print(&json!({"hfree": false, "s": s, "witness": witness}));
            return fail(2, format!("graph contains an induced H_{s}"));
        }
        Err(e @ PipelineError::Invariant(_)) => return fail(3, e),
        Err(e) => return fail(1, e),
    };
    if let Err(v) = verify_kd(g, &outcome.colouring) {
        return fail(3, format!("colouring failed verification: {v:?}"));
    }
    let proper = match to_proper(g, &outcome.colouring) {
        Ok(p) if p.is_proper(g) => p,
        _ => return fail(3, "proper colouring could not be derived"),
    };
    let summary = json!({
        "profile": profile.name,
        "omega": outcome.trace.omega,
        "k": outcome.colouring.k,
        "d": outcome.colouring.d,
        "colours": proper.num_colours(),
        "flags": outcome.trace.flags,
    });
    let doc = json!({
        "summary": summary,
        "colouring": outcome.colouring,
        "proper": proper.colour,
        "trace": outcome.trace,
    });
    let text = serde_json::to_string_pretty(&doc).expect("serialisable");
    if let Err(e) = std::fs::write(out, text + "\n") {
        return fail(1, format!("{}: {e}", out.display()));
    }
    print(&summary);
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Oracle {
            kind,
            graph,
            s,
            t,
            limit,
        } => match load(&graph) {
            Ok(g) => oracle(kind, &g, s, t, limit),
            Err(code) => code,
        },
        Command::Colour {
            graph,
            profile,
            profiles,
            attest_hfree,
            out,
        } => match load(&graph) {
            Ok(g) => colour(&g, &profile, profiles.as_ref(), attest_hfree, &out),
            Err(code) => code,
        },
        Command::Audit { s, c, omega, d } => {
            let report = bound_audit(s, c, omega, d);
            print(&json!({
                "hypotheses_hold": report.hypotheses_hold(),
                "inequalities_hold": report.inequalities_hold(),
                "report": report,
            }));
            ExitCode::SUCCESS
        }
        Command::Bench { config, out_dir } => match run_config_file(&config, &out_dir) {
            Ok(r) => {
                eprintln!("{} rows written to {}", r.rows.len(), out_dir.display());
                ExitCode::SUCCESS
            }
            Err(e) => fail(1, e),
        },
    }
}
