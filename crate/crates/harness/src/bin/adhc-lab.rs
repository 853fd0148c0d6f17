use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use adhc_core::generators::{
    generate_extremal, generate_extremal_variant, random_oriented, ExtremalSpec, Family, RandomModel,
};
use adhc_core::graph::sigma_plus_minus;
use adhc_core::io::{comment_values, read_graph, write_graph_with_comments};
use adhc_core::solver::{find_adhc, find_adhp_between, Budget, SolverError};
use adhc_core::walk::Direction;
use adhc_core::Partition4;
use adhc_harness::analyze::{run_analysis, AnalyzeOp};
use adhc_harness::params::{parse_range, Params};
use adhc_harness::pool::{run_in_pool, threads_from_env};
use adhc_harness::{
    default_scales, run_crosscheck, run_crosscheck_exhaustive, run_sharpness, run_sweep, Report, Row, SweepConfig,
};
use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "adhc-lab", version, about = "Antidirected Hamilton cycle lab for oriented graphs")]
struct Cli {
    /// Base seed for random instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report format for experiment subcommands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// State budget per exact search (unlimited if omitted).
    #[arg(long, global = true)]
    budget_states: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an extremal or random oriented graph.
    Gen(GenArgs),
    /// Search for an antidirected Hamilton cycle, or a path with fixed ends.
    Solve(SolveArgs),
    /// Structural analysis of one graph.
    Analyze(AnalyzeArgs),
    /// Check the extremal families: σ₊₋ at the threshold and no cycle.
    VerifySharpness(SharpnessArgs),
    /// Compare the exact solver with the permutation oracle.
    Crosscheck(CrosscheckArgs),
    /// Degree statistics and solver verdicts over a random corpus.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Extremal family (a, b or c).
    #[arg(long, requires = "s", conflicts_with = "random")]
    family: Option<Family>,
    /// Scale parameter of the family.
    #[arg(long)]
    s: Option<usize>,
    /// Use random almost-regular tournaments inside the family, from this seed.
    #[arg(long, requires = "family")]
    variant_seed: Option<u64>,
    /// Random model as `n=..,p=..[,seed=..]`; the seed defaults to --seed.
    #[arg(long)]
    random: Option<String>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Search for a Hamilton path from X to Y instead of a cycle.
    #[arg(long, num_args = 2, value_names = ["X", "Y"])]
    path: Option<Vec<usize>>,
    /// Direction of the path's first arc.
    #[arg(long, default_value = "fwd", value_parser = parse_direction)]
    pattern: Direction,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// sigma | expander | nice-partition | classify | special-arcs
    #[arg(long)]
    op: AnalyzeOp,
    /// Operation parameters as `k=v,...`.
    #[arg(long, default_value = "")]
    params: Params,
}

#[derive(Args)]
struct SharpnessArgs {
    /// Families to check, e.g. `c,b`.
    #[arg(long, value_delimiter = ',')]
    families: Option<Vec<Family>>,
    /// Scale range `lo..hi` applied to every selected family.
    #[arg(long, value_parser = parse_range)]
    s_range: Option<(usize, usize)>,
}

#[derive(Args)]
struct CrosscheckArgs {
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 500)]
    count: usize,
    #[arg(long, value_delimiter = ',', default_value = "0.2,0.5,0.8")]
    p_grid: Vec<f64>,
    /// Check every labelled graph on n <= 5 vertices instead of sampling.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_parser = parse_range, default_value = "4..12")]
    n_range: (usize, usize),
    #[arg(long, value_delimiter = ',', default_value = "0.3,0.5,0.7,0.9,1.0")]
    p_grid: Vec<f64>,
    /// Instances per (n, p) cell.
    #[arg(long, default_value_t = 10)]
    reps: usize,
    /// γ = k/20 values for the semidegree implication.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6")]
    gamma_ks: Vec<u32>,
    /// Add the extremal instances whose order lies in the range.
    #[arg(long)]
    inject_extremal: bool,
    /// Skip solving instances that meet the degree threshold.
    #[arg(long)]
    no_solve: bool,
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    match s {
        "fwd" | "forward" => Ok(Direction::Forward),
        "bwd" | "backward" => Ok(Direction::Backward),
        other => Err(format!("unknown pattern {other:?} (expected fwd or bwd)")),
    }
}

fn budget(cli: &Cli) -> Budget {
    Budget { max_states: cli.budget_states, max_time: None }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_report<R: Row>(cli: &Cli, mut report: Report<R>) -> anyhow::Result<i32> {
    report.config.output_path = cli.out.as_ref().map(|p| p.display().to_string());
    let text = match cli.format {
        Format::Json => report.to_jsonl(),
        Format::Csv => report.to_csv()?,
    };
    emit(cli, &text)?;
    let s = report.summary();
    eprintln!("{} rows: {} pass, {} fail, {} inconclusive", s.total, s.pass, s.fail, s.inconclusive);
    Ok(s.exit_code())
}

fn read_input(path: &PathBuf) -> anyhow::Result<(String, adhc_core::OrientedGraph)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let g = read_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((text, g))
}

fn gen(cli: &Cli, args: &GenArgs) -> anyhow::Result<i32> {
    let (graph, comments) = if let Some(family) = args.family {
        let s = args.s.context("--s is required with --family")?;
        let spec = ExtremalSpec::new(family, s)?;
        let e = match args.variant_seed {
            Some(seed) => generate_extremal_variant(spec, seed)?,
            None => generate_extremal(spec)?,
        };
        let comments = vec![
            format!("family {family} s {s}"),
            format!("partition {}", e.partition.to_letters()),
            format!("sigma_pm {}", sigma_plus_minus(&e.graph)),
        ];
        (e.graph, comments)
    } else if let Some(spec) = &args.random {
        let p: Params = spec.parse()?;
        p.only(&["n", "p", "seed"])?;
        let model = RandomModel { n: p.require("n")?, arc_probability: p.require("p")?, seed: p.get_or("seed", cli.seed)? };
        let g = random_oriented(&model)?;
        let comments = vec![format!("random n={} p={} seed={}", model.n, model.arc_probability, model.seed)];
        (g, comments)
    } else {
        anyhow::bail!("gen needs --family/--s or --random");
    };
    emit(cli, &write_graph_with_comments(&graph, &comments))?;
    Ok(0)
}

fn solve(cli: &Cli, args: &SolveArgs) -> anyhow::Result<i32> {
    let (_, g) = read_input(&args.input)?;
    let result = match &args.path {
        Some(ends) => find_adhp_between(&g, ends[0], ends[1], args.pattern, budget(cli)),
        None => find_adhc(&g, budget(cli)),
    };
    let (body, code) = match result {
        Ok(r) => {
            let witness = r.witness.as_ref().map(|w| &w.vertices);
            let directions =
                r.witness.as_ref().map(|w| w.directions.iter().map(|d| d.short_name()).collect::<Vec<_>>());
            (
                json!({
                    "verdict": r.verdict,
                    "witness": witness,
                    "directions": directions,
                    "states": r.stats.states,
                    "millis": r.stats.millis,
                }),
                0,
            )
        }
        Err(SolverError::BudgetExceeded { states }) => (
            json!({ "verdict": "INCONCLUSIVE", "witness": null, "directions": null, "states": states }),
            2,
        ),
        Err(e) => return Err(e.into()),
    };
    emit(cli, &format!("{}\n", serde_json::to_string_pretty(&body)?))?;
    Ok(code)
}

fn analyze(cli: &Cli, args: &AnalyzeArgs) -> anyhow::Result<i32> {
    let (text, g) = read_input(&args.input)?;
    let file_partition = comment_values(&text, "partition")
        .first()
        .map(|letters| Partition4::from_letters(letters))
        .transpose()
        .context("bad `# partition` comment")?;
    let v = run_analysis(&g, args.op, &args.params, file_partition)?;
    emit(cli, &format!("{}\n", serde_json::to_string_pretty(&v)?))?;
    Ok(0)
}

fn sharpness_specs(args: &SharpnessArgs) -> anyhow::Result<Vec<ExtremalSpec>> {
    let families = args.families.clone().unwrap_or_else(|| vec![Family::C, Family::B, Family::A]);
    match args.s_range {
        Some((lo, hi)) => {
            let mut specs = Vec::new();
            for &f in &families {
                for s in lo..=hi {
                    specs.push(ExtremalSpec::new(f, s)?);
                }
            }
            Ok(specs)
        }
        None => Ok(default_scales().into_iter().filter(|s| families.contains(&s.family)).collect()),
    }
}

fn run(cli: &Cli) -> anyhow::Result<i32> {
    match &cli.command {
        Command::Gen(a) => gen(cli, a),
        Command::Solve(a) => solve(cli, a),
        Command::Analyze(a) => analyze(cli, a),
        Command::VerifySharpness(a) => {
            let specs = sharpness_specs(a)?;
            let report = run_in_pool(threads_from_env()?, || run_sharpness(&specs, budget(cli)))??;
            emit_report(cli, report)
        }
        Command::Crosscheck(a) => {
            let report = run_in_pool(threads_from_env()?, || {
                if a.exhaustive {
                    run_crosscheck_exhaustive(a.n)
                } else {
                    run_crosscheck(a.n, a.count, &a.p_grid, cli.seed)
                }
            })??;
            emit_report(cli, report)
        }
        Command::Sweep(a) => {
            let cfg = SweepConfig {
                n_min: a.n_range.0,
                n_max: a.n_range.1,
                p_grid: a.p_grid.clone(),
                reps: a.reps,
                seed: cli.seed,
                gamma_ks: a.gamma_ks.clone(),
                budget: budget(cli),
                inject_extremal: a.inject_extremal,
                solve_hypothesis: !a.no_solve,
            };
            let report = run_in_pool(threads_from_env()?, || run_sweep(&cfg))??;
            emit_report(cli, report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
