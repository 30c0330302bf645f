//! `chromatic`: exact chromatic polynomials, coefficient bounds, and the
//! verification harness, from the command line.
//!
//! Every command is deterministic: identical invocations produce
//! byte-identical output, including the seeded random corpus.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use chromatic_core::{
    bound_report, chromatic_polynomial, generate, run_suite, sweep, CorpusSpec, Graph, RandomSpec,
    SelectionMode, Suite, SuiteOutcome,
};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "chromatic",
    version,
    about = "Exact chromatic polynomials and coefficient bounds for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph's chromatic polynomial and coefficient magnitudes.
    Poly(PolyArgs),
    /// Compare exact coefficient magnitudes against both upper bounds.
    Bounds(BoundsArgs),
    /// Run one verification suite over the corpus.
    Verify(VerifyArgs),
    /// Write bound reports and a tightness summary for the whole corpus.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file: one `U V` pair per line, `#` comments, blank lines ok.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Generator spec: `complete:n=5`, `cycle:n=6`, `path:n=4`,
    /// `bipartite:a=3,b=3`, `petersen`, or `gnm:n=7,m=12,seed=3`.
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<String>,
    /// Seed for `gnm` when the spec itself does not carry one.
    #[arg(long)]
    seed: Option<u64>,
}

impl InputArgs {
    fn load(&self) -> anyhow::Result<(Graph, String)> {
        match (&self.input, &self.generator) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let name = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "graph".into());
                Ok((Graph::parse_edge_list(&text)?, name))
            }
            (None, Some(spec)) => Ok((generate::from_spec(spec, self.seed)?, spec.clone())),
            _ => bail!("provide exactly one of --input FILE or --gen SPEC"),
        }
    }
}

#[derive(Args)]
struct PolyArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Correction-edge selection: `fixed` (once) or `per-r` (per index).
    #[arg(long, default_value = "per-r")]
    mode: String,
    /// Pin the correction edge, as `U,V` in the input's vertex labels.
    #[arg(long, value_name = "U,V")]
    edge: Option<String>,
    /// Output format.
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
    /// Write here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: binomial, census, additivity, leading, bounds, chain, oracles.
    #[arg(long)]
    suite: String,
    /// `default` (named families + seeded random block) or `named`.
    #[arg(long, default_value = "default")]
    corpus: String,
    /// Random-block override, e.g. `n=4..8,m=5..12,count=50,seed=7`.
    #[arg(long, value_name = "SPEC")]
    random: Option<String>,
    /// Write the full JSON outcome here.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Output directory; receives `summary.json` and `reports/<id>.<ext>`.
    #[arg(long, value_name = "DIR")]
    out: PathBuf,
    /// Correction-edge selection: `fixed` or `per-r`.
    #[arg(long, default_value = "per-r")]
    mode: String,
    /// Per-graph report format.
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
    /// `default` (named families + seeded random block) or `named`.
    #[arg(long, default_value = "default")]
    corpus: String,
    /// Random-block override, e.g. `n=4..8,m=5..12,count=50,seed=7`.
    #[arg(long, value_name = "SPEC")]
    random: Option<String>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Poly(args) => cmd_poly(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

fn cmd_poly(args: PolyArgs) -> anyhow::Result<ExitCode> {
    let (graph, _) = args.input.load()?;
    let poly = chromatic_polynomial(&graph);
    println!("{}", poly.render());
    println!(
        "magnitudes: {}",
        serde_json::to_string(&poly.magnitude_strings())?
    );
    Ok(ExitCode::SUCCESS)
}

fn parse_edge_flag(graph: &Graph, text: &str) -> anyhow::Result<chromatic_core::EdgeId> {
    let (u, v) = text
        .split_once(',')
        .with_context(|| format!("--edge wants `U,V`, got `{text}`"))?;
    let u: usize = u.trim().parse().context("--edge endpoints must be integers")?;
    let v: usize = v.trim().parse().context("--edge endpoints must be integers")?;
    graph
        .edge_between(u, v)
        .with_context(|| format!("graph has no edge between {u} and {v}"))
}

fn cmd_bounds(args: BoundsArgs) -> anyhow::Result<ExitCode> {
    let (graph, name) = args.input.load()?;
    let mode: SelectionMode = args.mode.parse()?;
    let edge = args
        .edge
        .as_deref()
        .map(|text| parse_edge_flag(&graph, text))
        .transpose()?;
    let report = bound_report(&graph, mode, edge)?.with_name(&name);
    let rendered = match args.format.as_str() {
        "csv" => report.to_csv(),
        _ => report.to_json_string(),
    };
    match &args.out {
        Some(path) => std::fs::write(path, rendered)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn corpus_spec(corpus: &str, random: &Option<String>) -> anyhow::Result<CorpusSpec> {
    let mut spec = match corpus {
        "default" => CorpusSpec::default_corpus(),
        "named" => CorpusSpec::named_only(),
        other => bail!("unknown corpus `{other}` (expected `default` or `named`)"),
    };
    if let Some(text) = random {
        spec.random = Some(RandomSpec::parse(text)?);
    }
    Ok(spec)
}

/// Prints a bounded, deterministic digest of one suite outcome.
fn print_outcome(outcome: &SuiteOutcome) {
    println!("suite: {}", outcome.suite);
    println!(
        "graphs: {}  checks: {}  passed: {}  failed: {}  findings: {}  skipped: {}",
        outcome.graphs,
        outcome.checks,
        outcome.passed,
        outcome.failed,
        outcome.findings.len(),
        outcome.skipped.len(),
    );
    const SHOWN: usize = 25;
    for (label, list) in [("failure", &outcome.failures), ("finding", &outcome.findings)] {
        for w in list.iter().take(SHOWN) {
            let at = match (w.index, w.circuit_length) {
                (Some(r), _) => format!(" r={r}"),
                (None, Some(n)) => format!(" n={n}"),
                _ => String::new(),
            };
            let edge = w
                .edge
                .map(|(u, v)| format!(" edge={u}-{v}"))
                .unwrap_or_default();
            let values: Vec<String> =
                w.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!(
                "{label}: {} {}{at}{edge} [{}]",
                w.graph_id,
                w.check,
                values.join(" ")
            );
        }
        if list.len() > SHOWN {
            println!("{label}: ... and {} more", list.len() - SHOWN);
        }
    }
    for notice in &outcome.skipped {
        println!("skipped: {notice}");
    }
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let suite: Suite = args.suite.parse()?;
    let spec = corpus_spec(&args.corpus, &args.random)?;
    let outcome = run_suite(suite, &spec)?;
    print_outcome(&outcome);
    if let Some(path) = &args.out {
        std::fs::write(path, outcome.to_json_string())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if outcome.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_sweep(args: SweepArgs) -> anyhow::Result<ExitCode> {
    let mode: SelectionMode = args.mode.parse()?;
    let spec = corpus_spec(&args.corpus, &args.random)?;
    let reports_dir = args.out.join("reports");
    std::fs::create_dir_all(&reports_dir)
        .with_context(|| format!("creating {}", reports_dir.display()))?;
    let (reports, summary) = sweep(&spec, mode)?;
    for report in &reports {
        let (rendered, ext) = match args.format.as_str() {
            "csv" => (report.to_csv(), "csv"),
            _ => (report.to_json_string(), "json"),
        };
        let path = reports_dir.join(format!("{}.{ext}", report.graph_name));
        std::fs::write(&path, rendered)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let summary_path = args.out.join("summary.json");
    std::fs::write(&summary_path, summary.to_json_string())
        .with_context(|| format!("writing {}", summary_path.display()))?;
    println!(
        "sweep: {} graphs ({} acyclic skipped), {} rows, {} sound, {} dominant, {} forms agree",
        summary.graphs,
        summary.acyclic_skipped,
        summary.rows,
        summary.sound_rows,
        summary.dominant_rows,
        summary.forms_agree_rows,
    );
    for (band, stats) in &summary.tightness {
        println!(
            "tightness {band}: {} rows, {} tight, mean {}, min {}, max {}",
            stats.rows, stats.tight_rows, stats.mean_ratio, stats.min_ratio, stats.max_ratio
        );
    }
    println!(
        "soundness violations: {}  convention edge hits: {}",
        summary.witnesses.len(),
        summary.convention_edge_hits
    );
    println!("wrote {} and {} reports", summary_path.display(), reports.len());
    Ok(if summary.witnesses.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
