mod config;
mod experiments;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use twistlab::farey::Slope;
use twistlab::Side;

use config::{ExperimentConfig, Format, Kind};

/// Exact twist-coset experiments: cyclically-cofinite topology probes,
/// Heegaard homology scans, torus curve-graph distances.
///
/// Exit status: 0 when every assertion holds, 2 when one fails, 1 on bad input.
#[derive(Parser)]
#[command(name = "twistlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Common {
    /// JSON or TOML experiment config; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Window radius N: scans run over [-N, N].
    #[arg(long)]
    window: Option<i64>,
    /// Seed for the ChaCha8 generator.
    #[arg(long)]
    seed: Option<u64>,
    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Openness, collapse and transport probes on a built-in group.
    Topology {
        #[command(flatten)]
        common: Common,
        /// Catalog key such as d4, z2, f2.
        #[arg(long)]
        group: Option<String>,
        /// cofinite-identity, identity, whole or empty.
        #[arg(long)]
        subset: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Presentation-matrix scan along a twist coset of a Heegaard gluing.
    Heegaard {
        #[command(flatten)]
        common: Common,
        /// Lens space L(p, q) as `p,q`.
        #[arg(long)]
        lens: Option<String>,
        /// Random splitting of this genus, drawn from the seed.
        #[arg(long)]
        random_genus: Option<usize>,
        /// Comma-separated primes for the F_p columns.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[arg(long, value_parser = parse_side)]
        side: Option<Side>,
    },
    /// Distances d(a, D_c^n b) in the Farey graph.
    Farey {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        a: Option<Slope>,
        #[arg(long)]
        b: Option<Slope>,
        #[arg(long)]
        c: Option<Slope>,
    },
    /// Fixed homology classes along f T_c^n.
    FixedClass {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        genus: Option<usize>,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        #[command(flatten)]
        common: Common,
        /// Matrix as JSON rows, e.g. "[[2,4],[6,8]]".
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Built-in groups, disk systems and chain curves.
    List {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_side(s: &str) -> Result<Side, String> {
    match s {
        "right" => Ok(Side::Right),
        "left" => Ok(Side::Left),
        _ => Err(format!("expected right or left, got {s:?}")),
    }
}

fn base_config(common: &Common) -> Result<ExperimentConfig> {
    let mut cfg = match &common.config {
        Some(p) => ExperimentConfig::load(p)?,
        None => ExperimentConfig::default(),
    };
    if let Some(n) = common.window {
        cfg.window.radius = n;
    }
    if let Some(s) = common.seed {
        cfg.seed = s;
    }
    if let Some(o) = &common.out {
        cfg.out = Some(o.clone());
    }
    if let Some(f) = common.format {
        cfg.format = f;
    }
    Ok(cfg)
}

fn execute(command: Command) -> Result<bool> {
    let (kind, cfg) = match command {
        Command::List { out } => {
            let text = format!("{}\n", serde_json::to_string_pretty(&experiments::list_builtins())?);
            match out {
                Some(p) => std::fs::write(p, text)?,
                None => print!("{text}"),
            }
            return Ok(true);
        }
        Command::Topology { common, group, subset, samples } => {
            let mut cfg = base_config(&common)?;
            if let Some(g) = group {
                cfg.topology.group = g;
            }
            if let Some(s) = subset {
                cfg.topology.subset = s;
            }
            if let Some(n) = samples {
                cfg.topology.samples = n;
            }
            (Kind::TopologyProbe, cfg)
        }
        Command::Heegaard { common, lens, random_genus, primes, side } => {
            let mut cfg = base_config(&common)?;
            if let Some(l) = lens {
                cfg.heegaard.lens = experiments::parse_pair(&l)?;
                cfg.heegaard.splitting = None;
                cfg.heegaard.random_genus = None;
            }
            if let Some(g) = random_genus {
                cfg.heegaard.random_genus = Some(g);
                cfg.heegaard.splitting = None;
            }
            if let Some(p) = primes {
                cfg.heegaard.primes = p;
            }
            if let Some(s) = side {
                cfg.heegaard.side = s;
            }
            (Kind::HeegaardScan, cfg)
        }
        Command::Farey { common, a, b, c } => {
            let mut cfg = base_config(&common)?;
            cfg.farey.a = a.or(cfg.farey.a);
            cfg.farey.b = b.or(cfg.farey.b);
            cfg.farey.c = c.or(cfg.farey.c);
            (Kind::FareyScan, cfg)
        }
        Command::FixedClass { common, genus } => {
            let mut cfg = base_config(&common)?;
            if let Some(g) = genus {
                cfg.fixed_class.genus = g;
            }
            (Kind::FixedClassScan, cfg)
        }
        Command::Snf { common, matrix } => {
            let mut cfg = base_config(&common)?;
            if let Some(m) = matrix {
                cfg.snf.matrix = Some(experiments::parse_matrix(&m)?);
            }
            (Kind::Snf, cfg)
        }
    };
    let report = experiments::run(kind, &cfg)?;
    report.write(cfg.format, cfg.out.as_deref())?;
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
