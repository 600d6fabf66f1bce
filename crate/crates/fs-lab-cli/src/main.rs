//! Command-line front end: build graphs and witness pairs, run censuses,
//! classify targets, test exchangeability, and drive the claim suites.
//!
//! Exit codes: 0 success (and no counterexample), 1 a claim suite found a
//! genuine counterexample, 2 usage or I/O failure. All results are JSON on
//! stdout unless `--out` redirects them; diagnostics go to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fs_lab::classify::classify;
use fs_lab::constructions::{
    complete, complete_bipartite, cycle, path, prop_1_6_pair, random_bipartite_subgraph,
    random_graph_min_degree, star, star_plus, theta_zero, thm_1_11_pair, LowerBoundPair,
};
use fs_lab::engine::{CensusJson, EngineConfig, FsInstance};
use fs_lab::graph::Graph;
use fs_lab::perm::{Bijection, SwapSequence};
use fs_lab::verify::{run_claim, ClaimId, ClaimParams, SuiteOptions};

#[derive(Parser)]
#[command(
    name = "fs-lab",
    version,
    about = "Friends-and-strangers graphs: censuses, classification, claim suites"
)]
struct Cli {
    /// Census worker threads (default: FS_LAB_THREADS, then the global pool)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Census size guard: largest n whose n! states a census may allocate
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph or witness pair as JSON
    Construct(ConstructArgs),
    /// Exact connected-component census of FS(X, Y)
    Components(ComponentsArgs),
    /// Wilson-class report for one graph
    Classify(ClassifyArgs),
    /// Can values u and v ever swap, starting from a given bijection?
    Exchangeable(ExchangeableArgs),
    /// Run a claim suite and print its verification report
    Verify(ClaimArgs),
    /// Randomized counterexample search (meant for open conjectures)
    Search(ClaimArgs),
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    #[value(name = "star")]
    Star,
    #[value(name = "star_plus")]
    StarPlus,
    #[value(name = "cycle")]
    Cycle,
    #[value(name = "path")]
    Path,
    #[value(name = "complete")]
    Complete,
    #[value(name = "complete_bipartite")]
    CompleteBipartite,
    #[value(name = "theta0")]
    Theta0,
    #[value(name = "prop_1_6")]
    Prop16,
    #[value(name = "thm_1_11")]
    Thm111,
    #[value(name = "random")]
    Random,
    #[value(name = "random_bipartite")]
    RandomBipartite,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    d1: Option<usize>,
    #[arg(long)]
    d2: Option<usize>,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Resample until connected (random family only)
    #[arg(long)]
    connected: bool,
    /// Output stem; single graphs write <out>, pairs write <out>.x.json,
    /// <out>.y.json and <out>.sigma.json
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComponentsArgs {
    x: PathBuf,
    y: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    graph: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExchangeableArgs {
    x: PathBuf,
    y: PathBuf,
    #[arg(long)]
    u: usize,
    #[arg(long)]
    v: usize,
    /// Start bijection: a JSON image array or a pair sidecar file
    /// (identity if omitted)
    #[arg(long)]
    sigma: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClaimArgs {
    /// Claim id, e.g. THM_1_10 or PROP_2_3
    claim: String,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d1: Option<usize>,
    #[arg(long)]
    d2: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let engine = engine_config(&cli);
    match cli.command {
        Command::Construct(args) => {
            log_run(&engine, args.seed);
            construct(args)
        }
        Command::Components(args) => {
            log_run(&engine, None);
            components(args, engine)
        }
        Command::Classify(args) => {
            log_run(&engine, None);
            classify_graph(args)
        }
        Command::Exchangeable(args) => {
            log_run(&engine, None);
            exchangeable(args, engine)
        }
        Command::Verify(args) | Command::Search(args) => {
            log_run(&engine, Some(args.seed.unwrap_or(0)));
            claim_suite(args, engine)
        }
    }
}

fn engine_config(cli: &Cli) -> EngineConfig {
    let mut cfg = EngineConfig::default();
    cfg.threads = cli.threads.or_else(env_threads);
    if let Some(cap) = cli.cap {
        cfg.census_cap = cap;
    }
    cfg
}

fn env_threads() -> Option<usize> {
    std::env::var("FS_LAB_THREADS").ok()?.trim().parse().ok()
}

fn log_run(engine: &EngineConfig, seed: Option<u64>) {
    let threads = engine
        .threads
        .map_or_else(|| "default".to_string(), |t| t.to_string());
    let seed = seed.map_or_else(|| "-".to_string(), |s| s.to_string());
    eprintln!(
        "fs-lab: cap={} threads={threads} seed={seed}",
        engine.census_cap
    );
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> anyhow::Result<()> {
    let mut text = serde_json::to_string(value)?;
    text.push('\n');
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn need(flag: &'static str, value: Option<usize>) -> anyhow::Result<usize> {
    value.with_context(|| format!("{flag} is required for this family"))
}

fn construct(args: ConstructArgs) -> anyhow::Result<ExitCode> {
    let out = args.out.as_deref();
    match args.family {
        Family::Star => emit(&star(need("--n", args.n)?)?, out)?,
        Family::StarPlus => emit(&star_plus(need("--n", args.n)?)?, out)?,
        Family::Cycle => emit(&cycle(need("--n", args.n)?)?, out)?,
        Family::Path => emit(&path(need("--n", args.n)?)?, out)?,
        Family::Complete => emit(&complete(need("--n", args.n)?)?, out)?,
        Family::CompleteBipartite => {
            let r = need("--r", args.r)?;
            let k = args.k.unwrap_or(r);
            emit(&complete_bipartite(r, k)?, out)?;
        }
        Family::Theta0 => emit(&theta_zero(), out)?,
        Family::Prop16 => {
            let pair = prop_1_6_pair(need("--n", args.n)?, need("--k", args.k)?)?;
            write_pair(&pair, out)?;
        }
        Family::Thm111 => {
            let pair = thm_1_11_pair(
                need("--r", args.r)?,
                need("--d1", args.d1)?,
                need("--d2", args.d2)?,
            )?;
            write_pair(&pair, out)?;
        }
        Family::Random => {
            let g = random_graph_min_degree(
                need("--n", args.n)?,
                args.min_degree.unwrap_or(0),
                args.connected,
                args.seed.unwrap_or(0),
            )?;
            emit(&g, out)?;
        }
        Family::RandomBipartite => {
            let g = random_bipartite_subgraph(
                need("--r", args.r)?,
                args.min_degree.unwrap_or(0),
                args.seed.unwrap_or(0),
            )?;
            emit(&g, out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_pair(pair: &LowerBoundPair, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(stem) => {
            let stem = stem.with_extension("");
            let base = stem.display();
            emit(&pair.x, Some(&PathBuf::from(format!("{base}.x.json"))))?;
            emit(&pair.y, Some(&PathBuf::from(format!("{base}.y.json"))))?;
            emit(&pair.sidecar(), Some(&PathBuf::from(format!("{base}.sigma.json"))))?;
            eprintln!("fs-lab: wrote {base}.x.json, {base}.y.json, {base}.sigma.json");
        }
        None => {
            #[derive(Serialize)]
            struct PairOut<'a> {
                x: &'a Graph,
                y: &'a Graph,
                sigma: &'a Bijection,
                meta: fs_lab::constructions::PairMeta,
            }
            emit(
                &PairOut {
                    x: &pair.x,
                    y: &pair.y,
                    sigma: &pair.sigma,
                    meta: pair.meta,
                },
                None,
            )?;
        }
    }
    Ok(())
}

fn components(args: ComponentsArgs, engine: EngineConfig) -> anyhow::Result<ExitCode> {
    let x = load_graph(&args.x)?;
    let y = load_graph(&args.y)?;
    let inst = FsInstance::with_config(x, y, engine)?;
    let census = inst.component_census()?;
    emit(&CensusJson::from(&census), args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn classify_graph(args: ClassifyArgs) -> anyhow::Result<ExitCode> {
    let g = load_graph(&args.graph)?;
    emit(&classify(&g), args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn exchangeable(args: ExchangeableArgs, engine: EngineConfig) -> anyhow::Result<ExitCode> {
    let x = load_graph(&args.x)?;
    let y = load_graph(&args.y)?;
    let inst = FsInstance::with_config(x, y, engine)?;
    let sigma = match &args.sigma {
        Some(p) => load_bijection(p)?,
        None => Bijection::identity(inst.n())?,
    };
    let reach = inst.exchangeable(&sigma, args.u, args.v)?;

    #[derive(Serialize)]
    struct ExchangeOut {
        n: usize,
        u: usize,
        v: usize,
        exchangeable: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        swaps: Option<SwapSequence>,
    }
    emit(
        &ExchangeOut {
            n: inst.n(),
            u: args.u,
            v: args.v,
            exchangeable: reach.is_connected(),
            swaps: reach.sequence().cloned(),
        },
        args.out.as_deref(),
    )?;
    Ok(ExitCode::SUCCESS)
}

/// Accepts either a bare image array or a construct sidecar file.
fn load_bijection(path: &Path) -> anyhow::Result<Bijection> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if let Ok(sidecar) = serde_json::from_str::<fs_lab::constructions::Sidecar>(&text) {
        return Ok(sidecar.sigma);
    }
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn claim_suite(args: ClaimArgs, engine: EngineConfig) -> anyhow::Result<ExitCode> {
    let claim: ClaimId = args.claim.parse()?;
    let params = ClaimParams {
        r: args.r,
        n: args.n,
        k: args.k,
        d1: args.d1,
        d2: args.d2,
    };
    let opts = SuiteOptions {
        trials: args.trials.unwrap_or(100),
        seed: args.seed.unwrap_or(0),
        engine,
    };
    let report = run_claim(claim, &params, &opts)?;
    emit(&report, args.out.as_deref())?;
    Ok(ExitCode::from(report.exit_code() as u8))
}
