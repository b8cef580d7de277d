use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use induced_cover::approx::{self, BfsLevels, Centroid, SeparatorProvider};
use induced_cover::bounds::{best_lower_bound_with, NeighborhoodSearch};
use induced_cover::exact::{exact_dual, exact_opt, SearchLimits};
use induced_cover::io::{self, DualReport, RunReport};
use induced_cover::reduction::reduce_3partition;
use induced_cover::{generators, validate_cover, Error, Graph};

const SEED_ENV: &str = "ICOVER_SEED";

#[derive(Parser)]
#[command(name = "icover", version, about = "Cover graphs with k induced subgraphs of small maximum order")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Exact,
    Caterpillar,
    BoundedDegree,
    Degenerate,
    Separator,
    Clique,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Caterpillar => "caterpillar",
            Algorithm::BoundedDegree => "bounded-degree",
            Algorithm::Degenerate => "degenerate",
            Algorithm::Separator => "separator",
            Algorithm::Clique => "clique",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Provider {
    Centroid,
    Bfs,
}

#[derive(clap::Args)]
struct Limits {
    /// Search-node budget for exact searches
    #[arg(long, default_value_t = SearchLimits::default().max_nodes)]
    max_nodes: u64,
    /// Wall-clock budget for exact searches, in seconds
    #[arg(long, default_value_t = SearchLimits::default().time_budget.as_secs_f64())]
    time_limit: f64,
}

impl Limits {
    fn get(&self) -> Result<SearchLimits, Error> {
        if self.max_nodes == 0 || !(self.time_limit > 0.0) {
            return Err(Error::Parameter("search limits must be positive".into()));
        }
        Ok(SearchLimits {
            max_nodes: self.max_nodes,
            time_budget: Duration::from_secs_f64(self.time_limit),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Cover a graph with one of the algorithms
    Solve {
        #[arg(long, value_enum)]
        alg: Algorithm,
        #[arg(short)]
        k: usize,
        /// Seed for randomised bound searches (default: $ICOVER_SEED or 0)
        #[arg(long)]
        seed: Option<u64>,
        /// Separator provider for --alg separator (default: centroid on forests, bfs otherwise)
        #[arg(long, value_enum)]
        separator: Option<Provider>,
        #[command(flatten)]
        limits: Limits,
        file: PathBuf,
    },
    /// Report every lower bound
    Bounds {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        seed: Option<u64>,
        file: PathBuf,
    },
    /// Fewest subsets of at most M vertices
    Dual {
        #[arg(short)]
        m: usize,
        #[command(flatten)]
        limits: Limits,
        file: PathBuf,
    },
    /// Validate a cover file against a graph
    Check {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        file: PathBuf,
    },
    /// Reduce a 3-Partition instance to a covering instance
    Reduce {
        #[arg(long = "three-partition")]
        three_partition: PathBuf,
    },
    /// Generate a graph
    Gen {
        #[command(subcommand)]
        shape: Shape,
    },
}

#[derive(Subcommand)]
enum Shape {
    Path { n: usize },
    /// Caterpillar with one leaf count per spine vertex, e.g. `2,1,0`
    Caterpillar {
        #[arg(value_delimiter = ',', required = true)]
        leaves: Vec<usize>,
    },
    /// Disjoint paths with the given vertex counts, e.g. `3,3,4`
    Forest {
        #[arg(value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
    },
    Clique { n: usize },
    Ternary { height: u32 },
    Degenerate {
        n: usize,
        c: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

enum Failure {
    Usage(String),
    Absent(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::BudgetExhausted { .. } => Failure::Budget(msg),
            Error::NotACaterpillar
            | Error::NotATree
            | Error::Disconnected
            | Error::Infeasible(_)
            | Error::NoCertificate { .. } => Failure::Absent(msg),
            _ => Failure::Usage(msg),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    io::parse_graph(&read(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn default_seed(seed: Option<u64>) -> Result<u64, Failure> {
    match seed {
        Some(s) => Ok(s),
        None => match std::env::var(SEED_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("{SEED_ENV}: invalid seed `{v}`"))),
            Err(_) => Ok(0),
        },
    }
}

fn search_for(seed: u64) -> NeighborhoodSearch {
    NeighborhoodSearch {
        seed,
        ..NeighborhoodSearch::default()
    }
}

#[derive(Serialize)]
struct BoundsDocument {
    k: usize,
    trivial: usize,
    connected: Option<usize>,
    connectivity: Option<usize>,
    density: usize,
    neighborhood: usize,
    neighborhood_exact: bool,
    best: usize,
    kappa: Option<usize>,
    neighborhood_witness: Vec<usize>,
    seed: u64,
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    match cli.command {
        Command::Solve {
            alg,
            k,
            seed,
            separator,
            limits,
            file,
        } => {
            let g = load_graph(&file)?;
            let seed = default_seed(seed)?;
            let limits = limits.get()?;
            let started = Instant::now();
            let cover = match alg {
                Algorithm::Exact => exact_opt(&g, k, limits)?.cover,
                Algorithm::Caterpillar => approx::cover_caterpillar(&g, k)?,
                Algorithm::BoundedDegree => approx::cover_bounded_degree(&g, k)?,
                Algorithm::Degenerate => approx::cover_degenerate(&g, k)?,
                Algorithm::Separator => {
                    let provider: &dyn SeparatorProvider = match separator {
                        Some(Provider::Centroid) => &Centroid,
                        Some(Provider::Bfs) => &BfsLevels,
                        None if g.is_forest() => &Centroid,
                        None => &BfsLevels,
                    };
                    approx::cover_separator(&g, k, provider)?
                }
                Algorithm::Clique => {
                    if g.order() == 0 {
                        return Err(Failure::Absent("empty graph".into()));
                    }
                    approx::cover_clique(g.order(), k)?
                }
            };
            let elapsed = started.elapsed();
            let bounds = best_lower_bound_with(&g, k, &search_for(seed))?;
            let violations = validate_cover(&g, &cover)?;
            let mut report = RunReport::new(alg.name(), &cover, &bounds, &violations, Some(seed));
            report.elapsed = elapsed;
            eprintln!("{}: cost {} in {:.3?}", alg.name(), report.cost, elapsed);
            Ok((io::emit_report(&report), report.valid))
        }
        Command::Bounds { k, seed, file } => {
            let g = load_graph(&file)?;
            let seed = default_seed(seed)?;
            let r = best_lower_bound_with(&g, k, &search_for(seed))?;
            let doc = BoundsDocument {
                k,
                trivial: r.lb_trivial,
                connected: r.lb_connected,
                connectivity: r.lb_connectivity,
                density: r.lb_density,
                neighborhood: r.lb_neighborhood,
                neighborhood_exact: r.neighborhood_exact,
                best: r.best,
                kappa: r.witnesses.kappa,
                neighborhood_witness: r.witnesses.neighborhood_set.iter().map(|v| v + 1).collect(),
                seed,
            };
            Ok((io::emit_report(&doc), true))
        }
        Command::Dual { m, limits, file } => {
            let g = load_graph(&file)?;
            let res = exact_dual(&g, m, limits.get()?)?;
            let valid = validate_cover(&g, &res.cover)?.is_empty();
            Ok((io::emit_report(&DualReport::new(m, &res.cover, valid)), valid))
        }
        Command::Check {
            k,
            cover,
            seed,
            file,
        } => {
            let g = load_graph(&file)?;
            let seed = default_seed(seed)?;
            let c = io::parse_cover(&read(&cover)?, g.order())
                .map_err(|e| Failure::Usage(format!("{}: {e}", cover.display())))?;
            if c.k() != k {
                return Err(Failure::Usage(format!(
                    "cover has {} subsets, expected {k}",
                    c.k()
                )));
            }
            let bounds = best_lower_bound_with(&g, k, &search_for(seed))?;
            let violations = validate_cover(&g, &c)?;
            let report = RunReport::new("check", &c, &bounds, &violations, Some(seed))
                .with_violations(&violations);
            Ok((io::emit_report(&report), report.valid))
        }
        Command::Reduce { three_partition } => {
            let inst = io::parse_three_partition(&read(&three_partition)?)?;
            let red = reduce_3partition(&inst);
            let text = format!(
                "c k {}\nc target {}\n{}",
                red.k,
                red.target,
                io::write_graph(&red.graph)
            );
            Ok((text, true))
        }
        Command::Gen { shape } => {
            let g = match shape {
                Shape::Path { n } => generators::gen_path(n),
                Shape::Caterpillar { leaves } => generators::gen_caterpillar(leaves.len(), &leaves)?,
                Shape::Forest { lengths } => generators::gen_forest_of_paths(&lengths)?,
                Shape::Clique { n } => generators::gen_clique(n),
                Shape::Ternary { height } => generators::gen_ternary_tree(height)?,
                Shape::Degenerate { n, c, seed } => {
                    generators::gen_random_degenerate(n, c, default_seed(seed)?)
                }
            };
            Ok((io::write_graph(&g), true))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            ExitCode::from(if ok { 0 } else { 2 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Absent(msg)) => {
            eprintln!("no result: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("gave up: {msg}");
            ExitCode::from(3)
        }
    }
}
