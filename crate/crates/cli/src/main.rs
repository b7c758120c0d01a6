//! Command-line front end: construct, verify, solve, bounds, experiment,
//! enumerate. Exit codes: 0 success, 1 violation or unresolved bracket,
//! 2 argument or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use krank_core::bounds::{
    bound_report, experiment_csv, random_chi2_experiment, sample_gnp, summarize, ExperimentConfig,
    ProbabilityRule,
};
use krank_core::construct::{
    rank_cycle_product, rank_hypercube, rank_rook, rank_rook_pow2, rank_triangle_cycle,
};
use krank_core::enumerate::{enumerate_optimal_chi2, EnumerateError};
use krank_core::graph::{self, Graph};
use krank_core::io::{read_graph, read_matrix, read_ranking, write_graph, write_matrix, write_ranking};
use krank_core::matrix::RankMatrix;
use krank_core::solve::{solve_chi2, solve_chi_k, solve_star_chromatic, Budget, SolveOutcome};
use krank_core::subcubic::rank_subcubic_seeded;
use krank_core::verify::{ranking_from_matrix, verify_k_ranking, Ranking};

#[derive(Parser)]
#[command(name = "krank", version, about = "Rankings of graphs: build, check, minimize")]
struct Cli {
    /// Emit machine-readable JSON instead of prose.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a ranking (or rank matrix) for a named family.
    Construct(ConstructArgs),
    /// Check a ranking against a graph, or a rank matrix on its own.
    Verify(VerifyArgs),
    /// Exact minimum rank count by exhaustive search.
    Solve(SolveArgs),
    /// Bound report: degeneracy floor, harmonic floor, construction, solver.
    Bounds(BoundsArgs),
    /// Random-graph sweep: sample, solve, tabulate.
    Experiment(ExperimentArgs),
    /// Every minimum 2-ranking of a small graph, up to symmetry.
    Enumerate(EnumerateArgs),
}

/// One graph source: a named family with its parameters, or an edge-list
/// file.
#[derive(Args, Clone)]
struct SourceArgs {
    /// hypercube | cycle-product | km-kn | km-kn-pow2 | c3-cn |
    /// subcubic-file | petersen | heawood | wagner | gnp
    #[arg(long)]
    family: Option<String>,
    /// Dimension for hypercube.
    #[arg(long)]
    d: Option<u32>,
    /// Comma-separated cycle lengths for cycle-product, e.g. "4,8".
    #[arg(long)]
    lengths: Option<String>,
    /// Rows for km-kn / km-kn-pow2.
    #[arg(long)]
    m: Option<usize>,
    /// Columns for km-kn / km-kn-pow2, cycle length for c3-cn, vertex
    /// count for gnp.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for gnp.
    #[arg(long)]
    p: Option<f64>,
    /// Edge-list file: the graph source, or the input for subcubic-file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Seed for randomized pieces (gnp sampling, subcubic restarts).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Write the ranking (or matrix) here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write the graph as an edge list.
    #[arg(long)]
    graph_out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Edge-list file of the graph.
    #[arg(long, required_unless_present = "matrix", conflicts_with = "matrix")]
    graph: Option<PathBuf>,
    /// Ranking file ("vertex rank" lines).
    #[arg(long, required_unless_present = "matrix", conflicts_with = "matrix")]
    ranking: Option<PathBuf>,
    /// Rank matrix file (rows of integers); checked by the two-property
    /// characterization, no separate graph needed.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Maximum path length to check.
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Allow k above 4 (path enumeration grows exponentially with k).
    #[arg(long)]
    force_k: bool,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Maximum path length constrained (2 = default notion).
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Solve the star chromatic number instead of a ranking number.
    #[arg(long)]
    star: bool,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
    /// Write the witness ranking here.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Also run the exact solver and include its bracket.
    #[arg(long)]
    solve: bool,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Comma-separated vertex counts, e.g. "8,10,12".
    #[arg(long)]
    n_values: String,
    /// Edge probability: a constant like "0.35" or "sqrtlog:C" for
    /// C*sqrt(ln n / n).
    #[arg(long)]
    p: String,
    #[arg(long, default_value_t = 10)]
    trials: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
    /// Write per-trial rows as CSV.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
}

fn budget(nodes: Option<u64>, seconds: Option<f64>) -> Budget {
    Budget { max_nodes: nodes, max_seconds: seconds }
}

/// What a family construction yields.
enum Construction {
    Ranked(Graph, Ranking),
    Matrix(RankMatrix),
    Plain(Graph),
}

fn parse_lengths(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|part| part.trim().parse::<usize>().context("bad cycle length"))
        .collect()
}

impl SourceArgs {
    fn family(&self) -> Result<&str> {
        self.family.as_deref().ok_or_else(|| anyhow!("--family is required here"))
    }

    fn need<T: Copy>(&self, field: Option<T>, name: &str) -> Result<T> {
        let fam = self.family.as_deref().unwrap_or("?");
        field.ok_or_else(|| anyhow!("--{name} is required for family {fam}"))
    }

    /// Builds the family's graph and its construction, when one exists.
    fn construct(&self) -> Result<Construction> {
        Ok(match self.family()? {
            "hypercube" => {
                let d = self.need(self.d, "d")?;
                let g = graph::hypercube(d)?;
                Construction::Ranked(g, rank_hypercube(d)?)
            }
            "cycle-product" => {
                let lengths = parse_lengths(
                    self.lengths.as_deref().ok_or_else(|| anyhow!("--lengths is required"))?,
                )?;
                let g = graph::cycle_product(&lengths)?;
                Construction::Ranked(g, rank_cycle_product(&lengths)?)
            }
            "km-kn" => {
                Construction::Matrix(rank_rook(self.need(self.m, "m")?, self.need(self.n, "n")?)?)
            }
            "km-kn-pow2" => Construction::Matrix(rank_rook_pow2(
                self.need(self.m, "m")?,
                self.need(self.n, "n")?,
            )?),
            "c3-cn" => {
                let n = self.need(self.n, "n")?;
                let g = krank_core::construct::triangle_cycle_graph(n)?;
                Construction::Ranked(g, rank_triangle_cycle(n)?)
            }
            "subcubic-file" => {
                let path =
                    self.graph.as_ref().ok_or_else(|| anyhow!("--graph is required"))?;
                let g = load_graph(path)?;
                let r = rank_subcubic_seeded(&g, self.seed)?;
                Construction::Ranked(g, r)
            }
            "petersen" => {
                let g = graph::petersen();
                let r = rank_subcubic_seeded(&g, self.seed)?;
                Construction::Ranked(g, r)
            }
            "heawood" => {
                let g = graph::heawood();
                let r = rank_subcubic_seeded(&g, self.seed)?;
                Construction::Ranked(g, r)
            }
            "wagner" => {
                let g = graph::wagner_c8_antipodal();
                let r = rank_subcubic_seeded(&g, self.seed)?;
                Construction::Ranked(g, r)
            }
            "gnp" => {
                let n = self.need(self.n, "n")?;
                let p = self.need(self.p, "p")?;
                Construction::Plain(sample_gnp(n as u32, p, self.seed)?)
            }
            other => bail!("unknown family '{other}'"),
        })
    }

    /// Just the graph, from either source. Unlike `construct`, this works
    /// for parameters where no closed-form ranking exists (odd c3-cn, gnp).
    fn graph(&self) -> Result<(String, Graph)> {
        if let Some(path) = &self.graph {
            if self.family.is_none() {
                return Ok((path.display().to_string(), load_graph(path)?));
            }
        }
        if self.family.is_none() {
            bail!("need a graph source: --family or --graph");
        }
        let g = match self.family()? {
            "hypercube" => graph::hypercube(self.need(self.d, "d")?)?,
            "cycle-product" => {
                let lengths = parse_lengths(
                    self.lengths.as_deref().ok_or_else(|| anyhow!("--lengths is required"))?,
                )?;
                graph::cycle_product(&lengths)?
            }
            "km-kn" | "km-kn-pow2" => {
                graph::rook_graph(self.need(self.m, "m")?, self.need(self.n, "n")?)?
            }
            "c3-cn" => krank_core::construct::triangle_cycle_graph(self.need(self.n, "n")?)?,
            "subcubic-file" => {
                load_graph(self.graph.as_ref().ok_or_else(|| anyhow!("--graph is required"))?)?
            }
            "petersen" => graph::petersen(),
            "heawood" => graph::heawood(),
            "wagner" => graph::wagner_c8_antipodal(),
            "gnp" => {
                sample_gnp(self.need(self.n, "n")? as u32, self.need(self.p, "p")?, self.seed)?
            }
            other => bail!("unknown family '{other}'"),
        };
        Ok((self.describe(), g))
    }

    fn describe(&self) -> String {
        let mut s = self.family.as_deref().unwrap_or("file").to_string();
        for (flag, val) in [
            ("d", self.d.map(|v| v.to_string())),
            ("lengths", self.lengths.clone()),
            ("m", self.m.map(|v| v.to_string())),
            ("n", self.n.map(|v| v.to_string())),
            ("p", self.p.map(|v| v.to_string())),
        ] {
            if let Some(v) = val {
                s.push_str(&format!(" {flag}={v}"));
            }
        }
        s
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(read_graph(&text)?)
}

fn load_ranking(path: &PathBuf) -> Result<Ranking> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(read_ranking(&text)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.cmd {
        Cmd::Construct(args) => cmd_construct(cli, args),
        Cmd::Verify(args) => cmd_verify(cli, args),
        Cmd::Solve(args) => cmd_solve(cli, args),
        Cmd::Bounds(args) => cmd_bounds(cli, args),
        Cmd::Experiment(args) => cmd_experiment(cli, args),
        Cmd::Enumerate(args) => cmd_enumerate(cli, args),
    }
}

fn cmd_construct(cli: &Cli, args: &ConstructArgs) -> Result<ExitCode> {
    let built = args.source.construct()?;
    match built {
        Construction::Ranked(g, r) => {
            if let Some(path) = &args.graph_out {
                std::fs::write(path, write_graph(&g))?;
            }
            let body = write_ranking(&r);
            if let Some(path) = &args.output {
                std::fs::write(path, body)?;
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "construct",
                        "family": args.source.family()?,
                        "n": g.n(),
                        "edges": g.edge_count(),
                        "rank_count": r.rank_count(),
                        "ranks": r.ranks(),
                    })
                );
            } else {
                let summary = format!(
                    "{}: {} vertices, {} edges, {} ranks",
                    args.source.describe(),
                    g.n(),
                    g.edge_count(),
                    r.rank_count()
                );
                // Keep stdout clean for piping when the ranking goes there.
                if args.output.is_none() {
                    print!("{}", write_ranking(&r));
                    eprintln!("{summary}");
                } else {
                    println!("{summary}");
                }
            }
        }
        Construction::Matrix(mx) => {
            if let Some(path) = &args.graph_out {
                let g = graph::rook_graph(mx.rows(), mx.cols())?;
                std::fs::write(path, write_graph(&g))?;
            }
            if let Some(path) = &args.output {
                std::fs::write(path, write_matrix(&mx))?;
            }
            if cli.json {
                let rows: Vec<Vec<u32>> = (0..mx.rows())
                    .map(|i| (0..mx.cols()).map(|j| mx.get(i, j)).collect())
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "construct",
                        "family": args.source.family()?,
                        "rows": mx.rows(),
                        "cols": mx.cols(),
                        "rank_count": mx.rank_count(),
                        "matrix": rows,
                    })
                );
            } else {
                let summary = format!(
                    "{}: {}x{} matrix, {} ranks",
                    args.source.describe(),
                    mx.rows(),
                    mx.cols(),
                    mx.rank_count()
                );
                if args.output.is_none() {
                    print!("{}", write_matrix(&mx));
                    eprintln!("{summary}");
                } else {
                    println!("{summary}");
                }
            }
        }
        Construction::Plain(g) => {
            let body = write_graph(&g);
            if let Some(path) = &args.graph_out {
                std::fs::write(path, &body)?;
            }
            if let Some(path) = &args.output {
                std::fs::write(path, &body)?;
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "construct",
                        "family": args.source.family()?,
                        "n": g.n(),
                        "edges": g.edge_count(),
                    })
                );
            } else {
                let summary =
                    format!("{}: {} vertices, {} edges", args.source.describe(), g.n(), g.edge_count());
                if args.output.is_none() && args.graph_out.is_none() {
                    print!("{body}");
                    eprintln!("{summary}");
                } else {
                    println!("{summary}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode> {
    if args.k > 4 && !args.force_k {
        bail!("k = {} is expensive (exponential in k); pass --force-k to allow it", args.k);
    }
    if let Some(path) = &args.matrix {
        let text = std::fs::read_to_string(path)?;
        let mx = read_matrix(&text)?;
        return match mx.check_valid() {
            Ok(()) => {
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "command": "verify", "mode": "matrix", "valid": true,
                            "rows": mx.rows(), "cols": mx.cols(),
                            "rank_count": mx.rank_count(),
                        })
                    );
                } else {
                    println!(
                        "ok: {}x{} matrix is a valid 2-ranking, {} ranks",
                        mx.rows(),
                        mx.cols(),
                        mx.rank_count()
                    );
                }
                Ok(ExitCode::SUCCESS)
            }
            Err(v) => {
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "command": "verify", "mode": "matrix", "valid": false,
                            "violation": v.to_string(),
                        })
                    );
                } else {
                    println!("violation: {v}");
                }
                Ok(ExitCode::from(1))
            }
        };
    }
    let g = load_graph(args.graph.as_ref().expect("clap enforces"))?;
    let r = load_ranking(args.ranking.as_ref().expect("clap enforces"))?;
    let verdict = verify_k_ranking(&g, &r, args.k)?;
    if let Some(v) = verdict.violation() {
        if cli.json {
            println!(
                "{}",
                serde_json::json!({
                    "command": "verify", "mode": "ranking", "valid": false,
                    "k": args.k, "path": v.path(),
                })
            );
        } else {
            let path: Vec<String> = v.path().iter().map(|x| x.to_string()).collect();
            println!("violation: path {}", path.join("-"));
        }
        return Ok(ExitCode::from(1));
    }
    if cli.json {
        println!(
            "{}",
            serde_json::json!({
                "command": "verify", "mode": "ranking", "valid": true,
                "k": args.k, "n": g.n(), "rank_count": r.rank_count(),
            })
        );
    } else {
        println!("ok: valid {}-ranking of {} vertices, {} ranks", args.k, g.n(), r.rank_count());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(cli: &Cli, args: &SolveArgs) -> Result<ExitCode> {
    let (name, g) = args.source.graph()?;
    let b = budget(args.budget_nodes, args.budget_seconds);
    let (what, outcome) = if args.star {
        ("star chromatic number", solve_star_chromatic(&g, &b))
    } else if args.k == 2 {
        ("minimum 2-ranking ranks", solve_chi2(&g, &b))
    } else {
        ("minimum ranking ranks", solve_chi_k(&g, args.k, &b))
    };
    match outcome {
        SolveOutcome::Solved(res) => {
            if let Some(path) = &args.witness_out {
                std::fs::write(path, write_ranking(&res.witness))?;
            }
            let secs = (res.seconds * 1000.0).round() / 1000.0;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "solve", "graph": name, "star": args.star,
                        "k": if args.star { serde_json::Value::Null } else { args.k.into() },
                        "exact": true, "value": res.chi,
                        "nodes": res.nodes, "seconds": secs,
                        "witness": res.witness.ranks(),
                    })
                );
            } else {
                println!(
                    "{name}: {what} = {} ({} nodes, {secs}s)",
                    res.chi, res.nodes
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        SolveOutcome::BudgetExceeded(br) => {
            let secs = (br.seconds * 1000.0).round() / 1000.0;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "solve", "graph": name, "star": args.star,
                        "k": if args.star { serde_json::Value::Null } else { args.k.into() },
                        "exact": false, "lower": br.lower, "upper": br.upper,
                        "nodes": br.nodes, "seconds": secs,
                    })
                );
            } else {
                println!(
                    "{name}: budget exceeded, {what} in [{}, {}] ({} nodes, {secs}s)",
                    br.lower, br.upper, br.nodes
                );
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_bounds(cli: &Cli, args: &BoundsArgs) -> Result<ExitCode> {
    let (name, g) = args.source.graph()?;
    // The family's own construction, when there is one, gives the upper
    // bound and the multiplicity histogram.
    let construction = match args.source.family.as_deref() {
        Some("gnp") | None => None,
        Some(_) => match args.source.construct() {
            Ok(Construction::Ranked(_, r)) => Some(r),
            Ok(Construction::Matrix(mx)) => Some(ranking_from_matrix(&mx)),
            Ok(Construction::Plain(_)) => None,
            Err(_) => None,
        },
    };
    let solver = if args.solve {
        let b = budget(args.budget_nodes, args.budget_seconds);
        Some(solve_chi2(&g, &b).bounds())
    } else {
        None
    };
    let report = bound_report(&name, &g, construction.as_ref(), solver);
    if cli.json {
        println!(
            "{}",
            serde_json::json!({
                "command": "bounds",
                "graph": report.graph,
                "n": report.n,
                "degeneracy": report.degeneracy,
                "degeneracy_lower": report.degeneracy_lower,
                "harmonic": report.harmonic.as_ref().map(|h| serde_json::json!({
                    "numer": *h.exact.numer(), "denom": *h.exact.denom(), "ceil": h.ceil,
                })),
                "construction_ranks": report.construction_ranks,
                "solver_lower": report.solver.map(|s| s.0),
                "solver_upper": report.solver.map(|s| s.1),
                "lower": report.lower(),
                "upper": report.upper(),
                "multiplicity_histogram": report.multiplicity_histogram,
            })
        );
    } else {
        println!("{}: {} vertices", report.graph, report.n);
        println!("  degeneracy {} -> at least {} ranks", report.degeneracy, report.degeneracy_lower);
        if let Some(h) = &report.harmonic {
            println!("  harmonic floor {}/{} -> at least {} ranks", h.exact.numer(), h.exact.denom(), h.ceil);
        }
        if let Some(c) = report.construction_ranks {
            println!("  construction achieves {c} ranks");
        }
        if let Some((lo, hi)) = report.solver {
            if lo == hi {
                println!("  solver: exactly {lo}");
            } else {
                println!("  solver: in [{lo}, {hi}]");
            }
        }
        if let Some(hist) = &report.multiplicity_histogram {
            let parts: Vec<String> =
                hist.iter().map(|(mult, count)| format!("{count} ranks x{mult}")).collect();
            println!("  rank usage: {}", parts.join(", "));
        }
        println!("  overall: [{}, {}]", report.lower(), report.upper().map_or("?".to_string(), |u| u.to_string()));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_experiment(cli: &Cli, args: &ExperimentArgs) -> Result<ExitCode> {
    let n_values: Vec<u32> = args
        .n_values
        .split(',')
        .map(|s| s.trim().parse::<u32>().context("bad n value"))
        .collect::<Result<_>>()?;
    let rule = ProbabilityRule::parse(&args.p)?;
    let cfg = ExperimentConfig {
        n_values,
        rule,
        trials: args.trials,
        seed: args.seed,
        budget: budget(args.budget_nodes, args.budget_seconds),
    };
    let rows = random_chi2_experiment(&cfg)?;
    let csv = experiment_csv(&rows);
    if let Some(path) = &args.output {
        std::fs::write(path, &csv)?;
    }
    let summary = summarize(&rows);
    let bracketed = rows.iter().filter(|r| r.chi2_lo != r.chi2_hi).count();
    if cli.json {
        let summary_json: Vec<serde_json::Value> = summary
            .iter()
            .map(|s| {
                serde_json::json!({
                    "n": s.n, "p": s.p, "trials": s.trials, "solved": s.solved,
                    "mean_chi2_lo": s.mean_chi2_lo, "mean_chi2_hi": s.mean_chi2_hi,
                    "mean_max_degree": s.mean_max_degree,
                    "mean_degeneracy": s.mean_degeneracy,
                })
            })
            .collect();
        let rows_json: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "n": r.n, "p": r.p, "trial": r.trial,
                    "chi2_lo": r.chi2_lo, "chi2_hi": r.chi2_hi,
                    "max_degree": r.max_degree, "degeneracy": r.degeneracy,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::json!({
                "command": "experiment", "rows": rows_json, "summary": summary_json,
                "bracketed": bracketed,
            })
        );
    } else {
        if args.output.is_none() {
            print!("{csv}");
        }
        for s in &summary {
            println!(
                "n={} p={:.4} trials={} solved={} mean chi2 [{:.2}, {:.2}] mean max degree {:.2} mean degeneracy {:.2}",
                s.n, s.p, s.trials, s.solved, s.mean_chi2_lo, s.mean_chi2_hi,
                s.mean_max_degree, s.mean_degeneracy
            );
        }
        if bracketed > 0 {
            println!("{bracketed} trials hit the budget and report brackets");
        }
    }
    Ok(if bracketed > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_enumerate(cli: &Cli, args: &EnumerateArgs) -> Result<ExitCode> {
    let (name, g) = args.source.graph()?;
    let b = budget(args.budget_nodes, args.budget_seconds);
    let w = match enumerate_optimal_chi2(&g, &b) {
        Ok(w) => w,
        // A budget hit while the minimum is still unknown is an incomplete
        // result, not a usage error.
        Err(EnumerateError::Budget { lower, upper }) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "enumerate", "graph": name, "complete": false,
                        "lower": lower, "upper": upper,
                    })
                );
            } else {
                println!("{name}: budget exceeded, minimum ranks in [{lower}, {upper}]");
            }
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e.into()),
    };
    if cli.json {
        let classes: Vec<&[u32]> = w.classes.iter().map(|r| r.ranks()).collect();
        println!(
            "{}",
            serde_json::json!({
                "command": "enumerate", "graph": name, "chi2": w.chi,
                "classes": w.classes.len(), "labeled": w.labeled_count,
                "complete": w.complete, "nodes": w.nodes,
                "representatives": classes,
            })
        );
    } else {
        println!(
            "{name}: minimum ranks {}, {} labeled witnesses in {} classes{}",
            w.chi,
            w.labeled_count,
            w.classes.len(),
            if w.complete { "" } else { " (budget hit: counts are floors)" }
        );
        for r in &w.classes {
            let parts: Vec<String> = r.ranks().iter().map(|x| x.to_string()).collect();
            println!("  {}", parts.join(" "));
        }
    }
    Ok(if w.complete { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
