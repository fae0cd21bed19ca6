use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use orient_turan::graph::{
    blow_up, make_directed_cycle, make_transitive_tournament, turan_edge_count,
};
use orient_turan::homomorphism::{compressibility, MAX_CATALOG_ORDER};
use orient_turan::io::{self, digraph6, OutputFormat, RunConfig};
use orient_turan::pattern::make_antidirected_complete_bipartite;
use orient_turan::search::{
    enumerate_oriented, exo_exact, ScanMode, DEFAULT_SAMPLES, DEFAULT_WITNESS_CAP,
};
use orient_turan::suite::{RandomSuite, DEFAULT_SEED};
use orient_turan::verify::{self, TheoremReport};
use orient_turan::{count_copies, count_profile, Error, OrientedGraph, PartSizes, Pattern};

#[derive(Parser)]
#[command(
    name = "orient-turan",
    version,
    about = "Oriented Turán numbers and supersaturation checks"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads
    #[arg(long, global = true, env = "ORIENT_TURAN_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Seed for every random stream
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Wall-clock budget, e.g. `90`, `90s`, `500ms`, `5m`
    #[arg(long, global = true, value_parser = parse_duration)]
    time_budget: Option<Duration>,
    /// Search-node budget
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    /// Write the result here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Include timings and node counts (makes output non-reproducible)
    #[arg(long, global = true)]
    stats: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exact copy counts of a pattern in each input graph
    Count {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, num_args = 1..=3, required = true)]
        pattern: Vec<String>,
    },
    /// Counts of TT_1 ..= TT_rmax in each input graph
    Profile {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        rmax: usize,
    },
    /// Exact oriented Turán number with extremal witnesses
    Exo {
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 1..=3, required = true)]
        pattern: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
        witnesses: usize,
    },
    /// Compressibility of a pattern
    Z {
        #[arg(long, num_args = 1..=3, required = true)]
        pattern: Vec<String>,
        #[arg(long, default_value_t = MAX_CATALOG_ORDER)]
        kmax: usize,
    },
    /// Build a standard graph
    #[command(subcommand)]
    Construct(Construct),
    /// Check an inequality and emit its report
    Verify(VerifyArgs),
    /// Stream every labelled oriented graph on n vertices as digraph6
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        arcs: Option<usize>,
        #[arg(long)]
        limit: Option<u64>,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Transitive tournament TT_N
    Tt { n: usize },
    /// Directed cycle C_K
    Cycle { k: usize },
    /// Blow-up of a tournament given as digraph6
    Blowup {
        base: String,
        #[arg(required = true)]
        sizes: Vec<usize>,
    },
    /// Arc count of the Turán graph T(N, K)
    TuranCount { n: usize, k: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Check {
    Omm,
    T16,
    T18,
    T19,
    P31a,
    P21,
    Ghs,
    Supersat,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    /// Order for t16, largest order for p21 and ghs
    #[arg(long)]
    n: Option<usize>,
    /// Samples when t16 is run above the exhaustive range
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: u64,
    /// Random suite size
    #[arg(long, default_value_t = 10_000)]
    count: u64,
    /// Largest transitive tournament checked for equality
    #[arg(long, default_value_t = 32)]
    tt_max: usize,
    /// Reference order of the supersaturation certificate
    #[arg(long, default_value_t = 6)]
    m: usize,
    /// Pattern for p21
    #[arg(long, num_args = 1..=3)]
    pattern: Option<Vec<String>>,
}

struct Outcome {
    kind: &'static str,
    body: Value,
    /// Pre-rendered output that bypasses the JSON envelope.
    raw: Option<String>,
    violations: bool,
    budget_exhausted: bool,
}

impl Outcome {
    fn new(kind: &'static str, body: Value) -> Self {
        Outcome {
            kind,
            body,
            raw: None,
            violations: false,
            budget_exhausted: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let message = e.to_string();
            let first = message
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            report_error("usage", first);
            return ExitCode::from(2);
        }
    };
    let config = RunConfig {
        seed: cli.global.seed,
        workers: cli.global.workers,
        node_budget: cli.global.node_budget,
        time_budget: cli.global.time_budget,
        output: cli.global.output.clone(),
        format: cli.global.format,
        stats: cli.global.stats,
    };
    match run(&config, cli.command) {
        Ok(outcome) => match emit(&config, &outcome) {
            Ok(()) if outcome.budget_exhausted => ExitCode::from(3),
            Ok(()) if outcome.violations => ExitCode::from(1),
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(&e),
        },
        Err(e) => fail(&e),
    }
}

fn fail(e: &Error) -> ExitCode {
    report_error(e.kind(), &e.to_string());
    match e {
        Error::Budget(_) => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn report_error(kind: &str, message: &str) {
    eprintln!("{}", json!({"error": kind, "message": message}));
}

fn emit(config: &RunConfig, outcome: &Outcome) -> orient_turan::Result<()> {
    let text = match (&outcome.raw, config.format) {
        (Some(raw), _) => raw.clone(),
        (None, OutputFormat::Json) => {
            let mut s = serde_json::to_string_pretty(&io::to_json(outcome.kind, &outcome.body))
                .expect("values serialise");
            s.push('\n');
            s
        }
        (None, OutputFormat::Text) => render_text(&outcome.body),
    };
    let written = match &config.output {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    written.map_err(|e| Error::InvalidInput(format!("cannot write output: {e}")))
}

fn render_text(value: &Value) -> String {
    let mut out = String::new();
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::String(s) => out += &format!("{k}: {s}\n"),
                    Value::Array(items) if items.iter().all(Value::is_object) => {
                        out += &format!("{k}:\n");
                        for item in items {
                            out += &format!("  {item}\n");
                        }
                    }
                    _ => out += &format!("{k}: {v}\n"),
                }
            }
        }
        other => out += &format!("{other}\n"),
    }
    out
}

fn run(config: &RunConfig, command: Command) -> orient_turan::Result<Outcome> {
    config.validate()?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build_global()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let started = Instant::now();
    let mut outcome = match command {
        Command::Count { input, pattern } => {
            let f = parse_pattern(&pattern)?;
            let graphs = io::read_graphs(&input)?;
            let mut rows = Vec::with_capacity(graphs.len());
            for g in &graphs {
                rows.push(json!({"graph": digraph6::encode(g), "count": count_copies(g, &f)?}));
            }
            Outcome::new(
                "counts",
                json!({"pattern": pattern_label(&f), "results": rows}),
            )
        }
        Command::Profile { input, rmax } => {
            let graphs = io::read_graphs(&input)?;
            let rows: Vec<Value> = graphs
                .iter()
                .map(|g| json!({"graph": digraph6::encode(g), "counts": count_profile(g, rmax).counts()}))
                .collect();
            Outcome::new("profiles", json!({"r_max": rmax, "results": rows}))
        }
        Command::Exo {
            n,
            pattern,
            witnesses,
        } => {
            let f = parse_pattern(&pattern)?;
            let cert = exo_exact(n, &f, &config.budget(), witnesses)?;
            let mut body = serde_json::to_value(&cert).expect("serialisable");
            if config.stats {
                body["nodes_explored"] = json!(cert.nodes_explored);
            }
            let mut o = Outcome::new("extremal_certificate", body);
            o.budget_exhausted = !cert.exact;
            o
        }
        Command::Z { pattern, kmax } => {
            let f = parse_pattern(&pattern)?;
            let z = compressibility(&f, kmax)?;
            let mut body = serde_json::to_value(&z).expect("serialisable");
            body["exceeds_k_max"] = json!(z.exceeds_k_max());
            Outcome::new("compressibility", body)
        }
        Command::Construct(c) => construct(c)?,
        Command::Verify(args) => verify_command(config, &args)?,
        Command::Gen { n, arcs, limit } => {
            let mut raw = String::new();
            let graphs = enumerate_oriented(n, arcs)?;
            for g in graphs.take(limit.map_or(usize::MAX, |l| l as usize)) {
                raw += &digraph6::encode(&g);
                raw.push('\n');
            }
            let mut o = Outcome::new("graphs", Value::Null);
            o.raw = Some(raw);
            o
        }
    };
    if config.stats {
        if let Value::Object(map) = &mut outcome.body {
            map.insert(
                "elapsed_ms".into(),
                json!(started.elapsed().as_millis() as u64),
            );
        }
    }
    Ok(outcome)
}

fn construct(c: Construct) -> orient_turan::Result<Outcome> {
    let describe = |g: &OrientedGraph| json!({"n": g.order(), "arcs": g.arc_count(), "digraph6": digraph6::encode(g)});
    Ok(match c {
        Construct::Tt { n } => Outcome::new("graph", describe(&make_transitive_tournament(n)?)),
        Construct::Cycle { k } => Outcome::new("graph", describe(&make_directed_cycle(k)?)),
        Construct::Blowup { base, sizes } => {
            let base = digraph6::decode(&base)?;
            Outcome::new("graph", describe(&blow_up(&base, &PartSizes::new(sizes)?)?))
        }
        Construct::TuranCount { n, k } => {
            if k == 0 {
                return Err(Error::InvalidInput("the Turán graph needs k >= 1".into()));
            }
            Outcome::new(
                "turan_count",
                json!({"n": n, "k": k, "arcs": turan_edge_count(n, k)}),
            )
        }
    })
}

fn verify_command(config: &RunConfig, args: &VerifyArgs) -> orient_turan::Result<Outcome> {
    let budget = config.budget();
    let small_suite = RandomSuite::new(args.count, 1, 32, config.seed);
    let checks: Vec<Check> = match args.check {
        Check::All => vec![
            Check::P31a,
            Check::T16,
            Check::Ghs,
            Check::P21,
            Check::Omm,
            Check::T18,
            Check::T19,
            Check::Supersat,
        ],
        one => vec![one],
    };
    let mut reports: Vec<TheoremReport> = Vec::new();
    for check in checks {
        match check {
            Check::P31a => reports.push(verify::check_prop31a()?),
            Check::T16 => {
                let orders = match args.n {
                    Some(n) => vec![n],
                    None => vec![4, 5, 6],
                };
                for n in orders {
                    let mode = if n <= budget.max_exhaustive_order {
                        ScanMode::Exhaustive
                    } else {
                        ScanMode::Sampled {
                            samples: args.samples,
                            seed: config.seed,
                        }
                    };
                    reports.push(verify::check_t16(n, &mode, &budget)?);
                    if (4..=6).contains(&n) {
                        reports.push(verify::check_prop31b(n, &budget)?);
                    }
                }
            }
            Check::Ghs => reports.push(verify::check_ghs_tournament_identity(
                args.n.unwrap_or(6),
                &budget,
            )?),
            Check::P21 => {
                let f = match &args.pattern {
                    Some(p) => parse_pattern(p)?,
                    None => Pattern::transitive(3)?,
                };
                reports.push(verify::check_prop21(&f, args.n.unwrap_or(6), &budget)?);
            }
            Check::Omm => reports.push(verify::check_t17(&small_suite, args.tt_max)?),
            Check::T18 => reports.push(verify::check_t18(&small_suite, args.tt_max)?),
            Check::T19 => reports.push(verify::check_t19(&small_suite)?),
            Check::Supersat => {
                let cert = verify::build_supersaturation_certificate(
                    &Pattern::transitive(3)?,
                    args.m,
                    &budget,
                )?;
                let suite = RandomSuite::new(args.count, args.m.max(10), 40, config.seed);
                let extra = [make_transitive_tournament(20)?];
                reports.push(verify::check_supersat(&cert, &suite, &extra)?);
            }
            Check::All => unreachable!("expanded above"),
        }
    }
    let violations = reports.iter().any(|r| !r.passed());
    let render = |r: &TheoremReport| {
        let mut v = serde_json::to_value(r).expect("serialisable");
        v["passed"] = json!(r.passed());
        if config.stats {
            v["elapsed_ms"] = json!(r.elapsed.as_millis() as u64);
        }
        v
    };
    let mut outcome = if reports.len() == 1 {
        Outcome::new("theorem_report", render(&reports[0]))
    } else {
        Outcome::new(
            "theorem_reports",
            json!({"reports": reports.iter().map(render).collect::<Vec<_>>()}),
        )
    };
    if config.format == OutputFormat::Text {
        let lines: String = reports
            .iter()
            .map(|r| {
                let id = serde_json::to_value(r.theorem).expect("serialisable");
                format!(
                    "{} {} instances={} violations={}\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    id.as_str().unwrap_or_default(),
                    r.instances,
                    r.violations.len()
                )
            })
            .collect();
        outcome.raw = Some(lines);
    }
    outcome.violations = violations;
    Ok(outcome)
}

/// `ttN`, `kst S T`, or `d6:<digraph6>`.
fn parse_pattern(words: &[String]) -> orient_turan::Result<Pattern> {
    let bad = || Error::InvalidInput(format!("unrecognised pattern {:?}", words.join(" ")));
    match words {
        [one] => {
            if let Some(r) = one.strip_prefix("tt") {
                Pattern::transitive(r.parse().map_err(|_| bad())?)
            } else if let Some(d6) = one.strip_prefix("d6:") {
                Pattern::new(digraph6::decode(d6)?)
            } else {
                Err(bad())
            }
        }
        [kst, s, t] if kst == "kst" => {
            let s = s.parse().map_err(|_| bad())?;
            let t = t.parse().map_err(|_| bad())?;
            make_antidirected_complete_bipartite(s, t)
        }
        _ => Err(bad()),
    }
}

fn pattern_label(f: &Pattern) -> String {
    digraph6::encode(f.graph())
}

fn parse_duration(s: &str) -> Result<Duration, String> {
    let (number, scale) = if let Some(v) = s.strip_suffix("ms") {
        (v, 1e-3)
    } else if let Some(v) = s.strip_suffix('s') {
        (v, 1.0)
    } else if let Some(v) = s.strip_suffix('m') {
        (v, 60.0)
    } else if let Some(v) = s.strip_suffix('h') {
        (v, 3600.0)
    } else {
        (s, 1.0)
    };
    let value: f64 = number
        .trim()
        .parse()
        .map_err(|_| format!("invalid duration {s:?}"))?;
    if !value.is_finite() || value < 0.0 {
        return Err(format!("invalid duration {s:?}"));
    }
    Ok(Duration::from_secs_f64(value * scale))
}
