use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::bail;
use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde_json::{json, Value};

use orcops::bounds::digraph_lower_bounds;
use orcops::canon::canonical_form;
use orcops::claims::{run_checks, summary_table, CheckOptions, Status};
use orcops::families::{build_family, FamilyParams, FAMILY_IDS};
use orcops::game::{cop_number, solve_game, GameSpec, TraceExplorer, Variant};
use orcops::io::{parse_any, to_dot, to_edge_list, to_json_value};
use orcops::orientations::enumerate_orientations;
use orcops::transforms::{coreset_partition_with, contraction_sequence, line_digraph, SinkPolicy};
use orcops::Digraph;

#[derive(Parser)]
#[command(name = "orcops", version, about = "Cops and robber on oriented graphs")]
struct Cli {
    /// Seed for randomized families and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Standard,
    Active,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Standard => Variant::Standard,
            VariantArg::Active => Variant::FullyActive,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    All,
    Strong,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    Line,
    Coresets,
    ContractSeq,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the game on a digraph file (edge list or JSON).
    Solve {
        file: PathBuf,
        /// Number of cops; without it the cop number is computed first.
        #[arg(short)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
        variant: VariantArg,
        /// Largest k tried when computing the cop number.
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        /// Print the lexicographically first optimal play.
        #[arg(long)]
        trace: bool,
    },
    /// Build a named family member.
    Family {
        id: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
    },
    /// Enumerate orientations of the underlying graph of a file.
    Enumerate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Compute the cop number of every kept orientation.
        #[arg(long)]
        solve: bool,
        /// Largest k tried with --solve.
        #[arg(short, default_value_t = 3)]
        k: usize,
    },
    /// Line digraph, coreset partition or contraction sequence.
    Transform {
        #[arg(value_enum)]
        kind: TransformKind,
        file: PathBuf,
        /// Treat sinks as singleton coresets instead of failing.
        #[arg(long)]
        singleton_sinks: bool,
    },
    /// Structural lower bounds and undirected upper bounds.
    Bounds { file: PathBuf },
    /// Reproduce the published claims and report each one.
    Papercheck {
        #[arg(long)]
        only: Option<String>,
        /// Total time budget in seconds.
        #[arg(long)]
        budget: Option<u64>,
        /// Report every runtime as 0 so repeated runs are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
}

/// Errors reported with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(Usage(msg.into()).into())
}

fn read_digraph(path: &Path) -> anyhow::Result<Digraph> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage(format!("cannot read {}: {e}", path.display())),
    };
    match parse_any(&text) {
        Ok(d) => Ok(d),
        Err(e) => usage(format!("{}: {e}", path.display())),
    }
}

/// What a command produced; `ok = false` maps to exit code 1.
struct Report {
    json: Value,
    text: String,
    digraph: Option<Digraph>,
    ok: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Report { json, text, digraph: None, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(if e.is::<Usage>() { 2 } else { 1 });
        }
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).unwrap()),
        Format::Text => print!("{}", report.text),
        Format::Dot => match &report.digraph {
            Some(d) => print!("{}", to_dot(d)),
            None => {
                eprintln!("error: this command does not produce a digraph; use --format text or json");
                return ExitCode::from(2);
            }
        },
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Solve { file, k, variant, k_max, trace } => solve(&read_digraph(file)?, *k, (*variant).into(), *k_max, *trace),
        Command::Family { id, n, k, q } => family(id, *n, *k, *q, cli.seed),
        Command::Enumerate { file, filter, solve, k } => enumerate(&read_digraph(file)?, *filter, *solve, *k),
        Command::Transform { kind, file, singleton_sinks } => {
            let policy = if *singleton_sinks { SinkPolicy::Singleton } else { SinkPolicy::Reject };
            transform(&read_digraph(file)?, *kind, policy)
        }
        Command::Bounds { file } => bounds(&read_digraph(file)?),
        Command::Papercheck { only, budget, no_timing } => papercheck(only.as_deref(), *budget, *no_timing, cli.seed),
    }
}

fn names(d: &Digraph, vs: &[usize]) -> String {
    vs.iter().map(|&v| d.name(v)).join(",")
}

fn solve(d: &Digraph, k: Option<usize>, variant: Variant, k_max: usize, trace: bool) -> anyhow::Result<Report> {
    let mut json = serde_json::Map::new();
    let mut text = String::new();
    let k = match k {
        Some(k) => k,
        None => {
            let c = cop_number(d, variant, k_max)?;
            json.insert("cop_number".into(), json!(c));
            text += &format!("cop number: {c}\n");
            match c.exact() {
                Some(k) => k,
                None => return Ok(Report::new(Value::Object(json), text)),
            }
        }
    };
    if k == 0 {
        return usage("k must be at least 1");
    }
    let table = solve_game(d, &GameSpec::with_variant(k, variant))?;
    let summary = table.summary();
    text += &format!("cops: {k}\nwinner: {:?}\n", summary.winner);
    if let Some(t) = summary.capture_time {
        text += &format!("capture time: {t}\n");
        for (c, rs) in summary.initial_placements.iter().zip(&summary.robber_responses) {
            text += &format!("start [{}] robber best responses [{}]\n", names(d, c), names(d, rs));
        }
    }
    json.insert("summary".into(), json!(summary));
    if trace && summary.capture_time.is_some() {
        let t = TraceExplorer::new(&table)?.first_trace();
        for r in &t.records {
            text += &format!("round {:>3}: cops [{}] robber {}\n", r.round, names(d, &r.cops), d.name(r.robber));
        }
        json.insert("trace".into(), json!(t));
    }
    Ok(Report::new(Value::Object(json), text))
}

fn family(id: &str, n: Option<usize>, k: Option<usize>, q: Option<usize>, seed: u64) -> anyhow::Result<Report> {
    if !FAMILY_IDS.contains(&id) {
        return usage(format!("unknown family `{id}`; known: {}", FAMILY_IDS.join(", ")));
    }
    let params = FamilyParams { n, k, q, seed };
    let d = build_family(id, &params).map_err(|e| Usage(e.to_string()))?.into_digraph();
    Ok(Report { json: to_json_value(&d), text: to_edge_list(&d), digraph: Some(d), ok: true })
}

fn enumerate(d: &Digraph, filter: Filter, solve: bool, k: usize) -> anyhow::Result<Report> {
    let g = d.underlying();
    let strong = matches!(filter, Filter::Strong);
    let kept: Vec<Digraph> = enumerate_orientations(&g, |o| !strong || o.is_strongly_connected())?.collect();
    let classes: BTreeSet<_> = kept.iter().map(canonical_form).collect::<orcops::Result<_>>()?;
    let mut json = json!({
        "edges": g.edge_count(),
        "orientations": 1u64 << g.edge_count(),
        "kept": kept.len(),
        "isomorphism_classes": classes.len(),
    });
    let mut text = format!(
        "orientations: {}\nkept: {}\nisomorphism classes: {}\n",
        1u64 << g.edge_count(),
        kept.len(),
        classes.len()
    );
    if solve {
        use rayon::prelude::*;
        let cops: Vec<_> = kept.par_iter().map(|o| cop_number(o, Variant::Standard, k)).collect::<orcops::Result<_>>()?;
        let mut hist: BTreeMap<String, usize> = BTreeMap::new();
        for c in cops {
            *hist.entry(c.to_string()).or_default() += 1;
        }
        text += &hist.iter().map(|(c, m)| format!("cop number {c}: {m}\n")).join("");
        json["cop_numbers"] = json!(hist);
    }
    Ok(Report::new(json, text))
}

fn transform(d: &Digraph, kind: TransformKind, policy: SinkPolicy) -> anyhow::Result<Report> {
    Ok(match kind {
        TransformKind::Line => {
            let l = line_digraph(d)?.digraph;
            Report { json: to_json_value(&l), text: to_edge_list(&l), digraph: Some(l), ok: true }
        }
        TransformKind::Coresets => {
            let p = coreset_partition_with(d, policy)?;
            let text = p
                .blocks
                .iter()
                .map(|b| format!("{{{}}} -> {{{}}}\n", names(d, &b.members), names(d, &b.out_neighborhood)))
                .join("");
            Report::new(json!(p), text)
        }
        TransformKind::ContractSeq => {
            let s = contraction_sequence(d, None, policy)?;
            let text = format!(
                "sizes: {}\nlimit: {:?}\nlimit cop number: {}\n",
                s.sizes.iter().join(" -> "),
                s.limit_shape,
                s.limit_cop_number
            );
            let mut json = json!(s);
            json["limit"] = to_json_value(s.limit());
            Report { json, text, digraph: Some(s.limit().clone()), ok: true }
        }
    })
}

fn bounds(d: &Digraph) -> anyhow::Result<Report> {
    let r = digraph_lower_bounds(d, None);
    let mut rows = r.lower_bounds();
    rows.push(("domination_upper", &r.domination_upper));
    rows.push(("independence_upper", &r.independence_upper));
    let text = rows
        .iter()
        .map(|(name, b)| match b.get() {
            Some(v) => format!("{name:<20} {v:>4}  {}\n", b.reason),
            None => format!("{name:<20} {:>4}  {}\n", "-", b.reason),
        })
        .join("")
        + &format!("best lower bound: {}\n", r.best_lower());
    Ok(Report::new(json!(r), text))
}

fn papercheck(only: Option<&str>, budget: Option<u64>, no_timing: bool, seed: u64) -> anyhow::Result<Report> {
    let opts = CheckOptions { seed, budget: budget.map(Duration::from_secs) };
    let mut results = run_checks(only, &opts);
    if no_timing {
        results.iter_mut().for_each(|r| r.runtime_ms = 0);
    }
    if results.is_empty() {
        bail!(Usage(format!("unknown check `{}`", only.unwrap_or_default())));
    }
    let ok = results.iter().all(|r| matches!(r.status, Status::Pass | Status::Discrepancy));
    Ok(Report { json: json!(results), text: summary_table(&results), digraph: None, ok })
}
