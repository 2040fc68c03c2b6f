//! Thin command-line front end over the bondagelab library.
//!
//! Exit codes: 0 success, 1 validation or usage error, 2 falsification
//! event (no configuration found, or no certificate within the bound, on a
//! graph inside the hypothesis class).

use bondagelab::bondage::{bondage_i, BondageValue};
use bondagelab::certifier::certify;
use bondagelab::configurations::{detect_edge_configs, detect_vertex_configs, find_configuration};
use bondagelab::discharging::{apply_rules, audit, initial_charges, Scheme};
use bondagelab::domination::gamma_i;
use bondagelab::error::CertifyError;
use bondagelab::{generate, plg, PlaneGraph};
use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use rayon::prelude::*;
use std::path::PathBuf;
use std::process::ExitCode;

const SOLVER_CAP: usize = 64;
const SUBSET_CAP: usize = 20;

#[derive(Parser)]
#[command(name = "bondagelab", about = "plane-graph domination toolkit", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Vertex,
    Face,
    Balanced,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Scheme {
        match s {
            SchemeArg::Vertex => Scheme::Vertex,
            SchemeArg::Face => Scheme::Face,
            SchemeArg::Balanced => Scheme::Balanced,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact independent domination number of a .plg graph
    GammaI { file: PathBuf },
    /// Smallest edge set whose deletion raises gamma_i, up to --limit
    BondageI {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        limit: usize,
        /// lift the default n <= 20 size cap (solver limit 64 still applies)
        #[arg(long)]
        force: bool,
    },
    /// Detect configurations (a)-(h)
    FindConfig {
        file: PathBuf,
        /// print only the first witness in scan order
        #[arg(long)]
        first: bool,
    },
    /// Initial charges, rules (vertex scheme only), and the charge audit
    Discharge {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SchemeArg::Vertex)]
        scheme: SchemeArg,
        /// print every transfer in the canonical ledger order
        #[arg(long)]
        ledger: bool,
    },
    /// Produce and verify a bondage certificate with at most 8 edges
    Certify {
        file: PathBuf,
        /// lift the default n <= 20 size cap (solver limit 64 still applies)
        #[arg(long)]
        force: bool,
    },
    /// Write a generated graph as .plg
    Gen {
        kind: String,
        params: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate a corpus and run detection, certification, and discharging
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        /// parallel workers (default: BONDAGELAB_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn read_graph(path: &PathBuf) -> Result<PlaneGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    plg::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn check_cap(g: &PlaneGraph, cap: usize, force: bool, what: &str) -> Result<(), String> {
    if g.n() > SOLVER_CAP {
        return Err(format!(
            "graph has {} vertices; the exact solver supports at most {SOLVER_CAP}",
            g.n()
        ));
    }
    if g.n() > cap && !force {
        return Err(format!(
            "graph has {} vertices; {what} defaults to n <= {cap} (use --force to override)",
            g.n()
        ));
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::GammaI { file } => {
            let g = read_graph(&file)?;
            check_cap(&g, SOLVER_CAP, false, "gamma-i")?;
            let (k, w) = gamma_i(&g);
            println!("gamma_i = {k}");
            println!("witness = {}", w.vertices.iter().join(","));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::BondageI { file, limit, force } => {
            let g = read_graph(&file)?;
            if limit == 0 {
                return Err("--limit must be at least 1".into());
            }
            check_cap(&g, SUBSET_CAP, force, "bondage-i")?;
            let r = bondage_i(&g, limit);
            match r.value {
                BondageValue::Finite(k) => {
                    let edges = r.witness_edges.iter().map(|(u, v)| format!("{u}-{v}")).join(",");
                    println!(
                        "bondage_i = {k} (gamma_i {} -> {}) edges={edges}",
                        r.gamma_i_before, r.gamma_i_after
                    );
                }
                BondageValue::ExceedsLimit => {
                    println!("bondage_i > {limit} (gamma_i = {})", r.gamma_i_before);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::FindConfig { file, first } => {
            let g = read_graph(&file)?;
            let witnesses = if first {
                find_configuration(&g).into_iter().collect::<Vec<_>>()
            } else {
                let mut all = detect_edge_configs(&g);
                all.extend(detect_vertex_configs(&g));
                all
            };
            if witnesses.is_empty() {
                if g.min_degree() >= 3 {
                    eprintln!("no configuration found on a graph with minimum degree >= 3");
                    return Ok(ExitCode::from(2));
                }
                println!("none");
                return Ok(ExitCode::SUCCESS);
            }
            for w in witnesses {
                println!("{}", w.to_line());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Discharge { file, scheme, ledger } => {
            let g = read_graph(&file)?;
            let scheme = Scheme::from(scheme);
            let st = initial_charges(&g, scheme);
            let finished = if scheme == Scheme::Vertex {
                apply_rules(&g, &st).map_err(|e| e.to_string())?
            } else {
                st
            };
            if ledger {
                for t in &finished.ledger {
                    println!("{} {} -> {} {}", t.rule, t.from, t.to, t.amount);
                }
            }
            print!("{}", audit(&finished).to_text());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Certify { file, force } => {
            let g = read_graph(&file)?;
            check_cap(&g, SUBSET_CAP, force, "certify")?;
            match certify(&g) {
                Ok(cert) => {
                    println!("{}", cert.to_line());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e @ (CertifyError::NoConfiguration | CertifyError::SearchExhausted(_)))
                    if g.min_degree() >= 3 =>
                {
                    eprintln!("falsification event: {e}");
                    Ok(ExitCode::from(2))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Cmd::Gen { kind, params, out, seed } => {
            let g = generate::by_name(&kind, &params, seed).map_err(|e| e.to_string())?;
            let text = plg::write(&g);
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Corpus { seed, count, max_n, jobs } => {
            let jobs = jobs.or_else(|| {
                std::env::var("BONDAGELAB_JOBS").ok().and_then(|s| s.parse().ok())
            });
            let run = || corpus_run(seed, count, max_n);
            let (lines, falsifications, certified) = match jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| e.to_string())?
                    .install(run),
                None => run(),
            };
            for line in &lines {
                println!("{line}");
            }
            println!("summary");
            println!("graphs {count}");
            println!("certificates_verified {certified}");
            println!("falsifications {falsifications}");
            if falsifications > 0 {
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// One record per graph; report assembly stays in corpus order regardless
/// of worker scheduling, so output is byte-deterministic for a fixed seed.
fn corpus_run(seed: u64, count: usize, max_n: usize) -> (Vec<String>, usize, usize) {
    let graphs = generate::corpus(seed, count, max_n.min(SOLVER_CAP));
    let records: Vec<(String, bool, bool)> = graphs
        .par_iter()
        .map(|(name, g)| corpus_record(name, g))
        .collect();
    let falsifications = records.iter().filter(|r| r.1).count();
    let certified = records.iter().filter(|r| r.2).count();
    (records.into_iter().map(|r| r.0).collect(), falsifications, certified)
}

fn corpus_record(name: &str, g: &PlaneGraph) -> (String, bool, bool) {
    let (gi, _) = gamma_i(g);
    let in_class = g.min_degree() >= 3;
    let config = find_configuration(g);
    let config_str = config.as_ref().map_or("none".to_string(), |w| w.kind.to_string());
    let mut falsified = in_class && config.is_none();

    let (cert_str, certified) = if in_class && g.n() <= SUBSET_CAP {
        match certify(g) {
            Ok(c) => (
                format!("kind={},|E|={},verified={},path={}", c.kind, c.edges.len(), c.verified, c.path),
                c.verified,
            ),
            Err(e @ (CertifyError::NoConfiguration | CertifyError::SearchExhausted(_))) => {
                falsified = true;
                (format!("failed:{e}"), false)
            }
            Err(e) => (format!("error:{e}"), false),
        }
    } else {
        ("skipped".to_string(), false)
    };

    let (st, report) = bondagelab::discharging::discharge(g);
    debug_assert_eq!(st.total(), report.total);
    let line = format!(
        "{name} n={} m={} delta={} gamma_i={gi} config={config_str} cert={cert_str} total={} conserved={}",
        g.n(),
        g.m(),
        g.min_degree(),
        report.total,
        report.conserved,
    );
    (line, falsified, certified)
}
