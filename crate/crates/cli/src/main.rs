mod config;

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use switchlab::classify::{
    classify_graph, predict_realization_graph, run_sweep, verify_hamiltonicity_corollary, verify_hypercube_theorem,
    verify_product_theorem, verify_triangle_free_theorem, ClassFlag, SweepCheck, SweepConfig,
};
use switchlab::graph::io::parse_graph_text;
use switchlab::graph::{hamiltonian_cycle, HamiltonVerdict, NamedGraph};
use switchlab::realizer::RealizationGraphJson;
use switchlab::sequence::is_graphical_terms;
use switchlab::{
    canonical_decomposition_graph, canonical_decomposition_seq, enumerate_realizations, parse_sequence,
    realization_graph, Error, LabeledGraph, Limits, RealizationGraph,
};

use config::Settings;

#[derive(Parser)]
#[command(
    name = "switchlab",
    version,
    about = "Realization graphs of degree sequences under 2-switches"
)]
struct Cli {
    /// `key=value` file setting max_n, max_realizations, hamilton_budget
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list file: `n` on the first line, then `u v` per line (1-based); `-` reads stdin
    #[arg(long, value_name = "FILE", conflicts_with = "named")]
    graph: Option<PathBuf>,
    /// Named graph such as `cycle:5`, `k_net:3`, `complete_bipartite:3,3`, `chair`
    #[arg(long, value_name = "NAME")]
    named: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Option<LabeledGraph>, Failure> {
        if let Some(path) = &self.graph {
            return Ok(Some(parse_graph_text(&read_input(path)?)?));
        }
        if let Some(name) = &self.named {
            let kind: NamedGraph = name.parse()?;
            return Ok(Some(switchlab::graph::make_named(kind)?));
        }
        Ok(None)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "3.4")]
    Product,
    #[value(name = "4.1")]
    TriangleFree,
    #[value(name = "4.2")]
    Hypercube,
    #[value(name = "hamilton")]
    Hamilton,
}

#[derive(Subcommand)]
enum Command {
    /// Is the sequence graphical?
    Check {
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// List the labeled realizations
    Enumerate {
        sequence: String,
        /// Print only the number of realizations
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build the realization graph
    Rgraph {
        #[arg(required_unless_present = "input", conflicts_with = "input")]
        sequence: Option<String>,
        /// Read a realization graph previously written with --json
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// One line: vertex count, regularity, bipartiteness
        #[arg(long, conflicts_with_all = ["json", "dot"])]
        stats: bool,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Canonical decomposition of a sequence or a graph
    Decompose {
        #[arg(required_unless_present_any = ["graph", "named"], conflicts_with_all = ["graph", "named"])]
        sequence: Option<String>,
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Graph-class membership with forbidden-subgraph witnesses
    Classify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Predicted product factors of the realization graph
    Predict {
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Check one structure theorem on a single sequence
    Verify {
        sequence: String,
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        json: bool,
    },
    /// Check a property for every graphical sequence up to a length
    Sweep {
        /// Largest sequence length
        #[arg(long, default_value_t = 7)]
        n: usize,
        /// 3.4, 4.1, 4.2, hamilton, connectivity or complement
        #[arg(long)]
        theorem: String,
        /// Worker threads (default: number of processors)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Search for a Hamiltonian cycle in a realization graph or a given graph
    Hamilton {
        #[arg(required_unless_present_any = ["graph", "named"], conflicts_with_all = ["graph", "named"])]
        sequence: Option<String>,
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    /// Bad input or usage; exit 2.
    Input(String),
    /// A configured cap was hit; exit 3.
    Bound(String),
    /// A bug surfaced; exit 1.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } => Failure::Bound(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Standard output plus exit status.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }

    fn json(value: &Value) -> Self {
        Output::ok(format!("{value}\n"))
    }

    fn with_code(mut self, code: u8) -> Self {
        self.code = code;
        self
    }
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BOUND: u8 = 3;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn edge_text(g: &LabeledGraph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    if edges.is_empty() {
        "(no edges)".into()
    } else {
        edges.join(" ")
    }
}

fn joined(vs: &[usize]) -> String {
    one_based(vs)
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn check(sequence: &str, as_json: bool) -> Result<Output, Failure> {
    let terms = match parse_sequence(sequence) {
        Ok(d) => Some(d),
        Err(Error::DegreeTooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let graphical = terms.as_ref().is_some_and(|d| is_graphical_terms(d.terms()));
    let out = if as_json {
        let raw: Vec<usize> = sequence
            .trim_matches(|c| c == '(' || c == ')')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .filter_map(|t| t.parse().ok())
            .collect();
        Output::json(&json!({ "sequence": terms.map_or(raw, |d| d.terms().to_vec()), "graphical": graphical }))
    } else if graphical {
        Output::ok("graphical\n".into())
    } else {
        Output::ok("not graphical\n".into())
    };
    Ok(if graphical { out } else { out.with_code(EXIT_INPUT) })
}

fn enumerate(sequence: &str, count: bool, as_json: bool, limits: &Limits) -> Result<Output, Failure> {
    let d = parse_sequence(sequence)?;
    let graphs = enumerate_realizations(&d, limits)?;
    if count {
        return Ok(if as_json {
            Output::json(&json!({ "sequence": d.terms(), "count": graphs.len() }))
        } else {
            Output::ok(format!("{}\n", graphs.len()))
        });
    }
    if as_json {
        let realizations: Vec<Vec<[usize; 2]>> = graphs
            .iter()
            .map(|g| g.edges().map(|(u, v)| [u + 1, v + 1]).collect())
            .collect();
        return Ok(Output::json(
            &json!({ "sequence": d.terms(), "count": graphs.len(), "realizations": realizations }),
        ));
    }
    let mut text = String::new();
    for (i, g) in graphs.iter().enumerate() {
        let _ = writeln!(text, "R{i}: {}", edge_text(g));
    }
    Ok(Output::ok(text))
}

fn rgraph(
    sequence: Option<&str>,
    input: Option<&Path>,
    mode: (bool, bool, bool),
    limits: &Limits,
) -> Result<Output, Failure> {
    let (stats, as_json, dot) = mode;
    let rg = match (sequence, input) {
        (_, Some(path)) => {
            let doc: RealizationGraphJson = serde_json::from_str(&read_input(path)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            RealizationGraph::from_json(&doc)?
        }
        (Some(s), None) => realization_graph(&parse_sequence(s)?, limits)?,
        (None, None) => return Err(Failure::Input("a sequence or --input is required".into())),
    };
    if as_json {
        let value = serde_json::to_value(rg.to_json()).map_err(|e| Failure::Internal(e.to_string()))?;
        return Ok(Output::json(&value));
    }
    if dot {
        return Ok(Output::ok(rg.to_dot()));
    }
    let g = rg.graph();
    let regular = g.regular_degree().map_or("no".to_string(), |r| r.to_string());
    let mut text = format!("vertices={} regular={regular} bipartite={}\n", g.n(), g.is_bipartite());
    if stats {
        return Ok(Output::ok(text));
    }
    for (i, r) in rg.realizations().enumerate() {
        let _ = writeln!(text, "R{i}: {}", edge_text(&r));
    }
    for &(i, j) in rg.meta_edges() {
        let _ = writeln!(text, "R{i} -- R{j}");
    }
    Ok(Output::ok(text))
}

fn decompose(sequence: Option<&str>, input: &GraphInput, as_json: bool) -> Result<Output, Failure> {
    if let Some(s) = sequence {
        let dec = canonical_decomposition_seq(&parse_sequence(s)?)?;
        return Ok(if as_json {
            Output::json(&dec.to_json())
        } else {
            Output::ok(format!("{dec}\n"))
        });
    }
    let g = input
        .load()?
        .ok_or_else(|| Failure::Input("a sequence, --graph or --named is required".into()))?;
    let gd = canonical_decomposition_graph(&g)?;
    if as_json {
        return Ok(Output::json(&gd.to_json()));
    }
    let dec = canonical_decomposition_seq(&g.degree_sequence())?;
    let mut text = format!("{dec}\n");
    for (i, c) in gd.components.iter().enumerate() {
        let _ = writeln!(
            text,
            "component {}: {} clique={} indep={}",
            i + 1,
            c.splitted_sequence(),
            joined(&c.vertices[..c.clique_size]),
            joined(&c.vertices[c.clique_size..])
        );
    }
    let _ = writeln!(text, "tail: {} vertices={}", dec.tail, joined(&gd.tail_vertices));
    Ok(Output::ok(text))
}

fn flag_json(flag: &ClassFlag) -> Value {
    match &flag.witness {
        Some(w) => json!({
            "holds": flag.holds,
            "witness": { "graph": w.forbidden.name(), "vertices": one_based(&w.vertices) },
        }),
        None => json!({ "holds": flag.holds }),
    }
}

fn classify(input: &GraphInput, as_json: bool) -> Result<Output, Failure> {
    let g = input
        .load()?
        .ok_or_else(|| Failure::Input("--graph or --named is required".into()))?;
    let report = classify_graph(&g);
    if as_json {
        let mut map = serde_json::Map::new();
        for (name, flag) in report.flags() {
            map.insert(name.to_string(), flag_json(flag));
        }
        return Ok(Output::json(&Value::Object(map)));
    }
    let mut text = String::new();
    for (name, flag) in report.flags() {
        match &flag.witness {
            Some(w) => {
                let _ = writeln!(
                    text,
                    "{name}=false witness={}:{}",
                    w.forbidden.name(),
                    joined(&w.vertices)
                );
            }
            None => {
                let _ = writeln!(text, "{name}=true");
            }
        }
    }
    Ok(Output::ok(text))
}

fn predict(sequence: &str, as_json: bool) -> Result<Output, Failure> {
    let p = predict_realization_graph(&parse_sequence(sequence)?)?;
    if as_json {
        let factors: Vec<Value> = p
            .factors
            .iter()
            .map(|f| json!({ "part": f.part, "factor": f.factor.to_string() }))
            .collect();
        return Ok(Output::json(&json!({
            "decomposition": p.decomposition.to_string(),
            "factors": factors,
        })));
    }
    Ok(Output::ok(format!("{p}\n")))
}

fn verdict_json(v: &HamiltonVerdict) -> Value {
    match v {
        HamiltonVerdict::Cycle(c) => json!({ "verdict": "cycle", "cycle": one_based(c) }),
        HamiltonVerdict::Exempt => json!({ "verdict": "exempt" }),
        HamiltonVerdict::NoCycle => json!({ "verdict": "no_cycle" }),
        HamiltonVerdict::Unknown => json!({ "verdict": "unknown" }),
    }
}

fn verdict_text(v: &HamiltonVerdict) -> String {
    match v {
        HamiltonVerdict::Cycle(c) => format!(
            "cycle {}",
            one_based(c)
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ),
        HamiltonVerdict::Exempt => "exempt".into(),
        HamiltonVerdict::NoCycle => "no cycle".into(),
        HamiltonVerdict::Unknown => "unknown".into(),
    }
}

/// Text form: status word followed by `key=value` fields.
fn report_text(status: &str, fields: &[(&str, String)]) -> String {
    let mut text = status.to_string();
    for (k, v) in fields {
        let _ = write!(text, " {k}={v}");
    }
    text.push('\n');
    text
}

fn opt(b: Option<bool>) -> String {
    b.map_or("n/a".to_string(), |b| b.to_string())
}

fn verify(sequence: &str, theorem: Theorem, as_json: bool, limits: &Limits) -> Result<Output, Failure> {
    let d = parse_sequence(sequence)?;
    let (status, value, text_fields): (&str, Value, Vec<(&str, String)>) = match theorem {
        Theorem::Product => {
            let r = verify_product_theorem(&d, limits)?;
            let fields = vec![
                ("direct_vertices", r.direct_vertices.to_string()),
                ("product_vertices", r.product_vertices.to_string()),
                ("isomorphic", r.isomorphic.to_string()),
            ];
            (
                if r.isomorphic { "verified" } else { "violation" },
                serde_json::to_value(&r).expect("reports serialize"),
                fields,
            )
        }
        Theorem::TriangleFree => {
            let r = verify_triangle_free_theorem(&d, limits)?;
            let factors: Vec<String> = r.factors.iter().map(ToString::to_string).collect();
            let fields = vec![
                ("bipartite", r.bipartite.to_string()),
                ("triangle_free", r.triangle_free.to_string()),
                ("product_form", r.product_form.to_string()),
                ("matrogenic_realization", r.matrogenic_realization.to_string()),
                ("every_realization_matrogenic", opt(r.every_realization_matrogenic)),
                ("factors", factors.join(",")),
            ];
            (
                if r.consistent { "verified" } else { "violation" },
                serde_json::to_value(&r).expect("reports serialize"),
                fields,
            )
        }
        Theorem::Hypercube => {
            let r = verify_hypercube_theorem(&d, limits)?;
            let fields = vec![
                ("hypercube", r.hypercube.to_string()),
                ("vertices", r.vertices.to_string()),
                (
                    "split_p4_reducible_realization",
                    r.split_p4_reducible_realization.to_string(),
                ),
                ("parts_k1_or_p4", opt(r.parts_k1_or_p4)),
            ];
            (
                if r.consistent { "verified" } else { "violation" },
                serde_json::to_value(&r).expect("reports serialize"),
                fields,
            )
        }
        Theorem::Hamilton => {
            let r = verify_hamiltonicity_corollary(&d, limits)?;
            let status = match &r.verdict {
                None => "not_applicable",
                Some(HamiltonVerdict::Unknown) => "unknown",
                Some(HamiltonVerdict::NoCycle) => "violation",
                Some(_) => "verified",
            };
            let mut fields = vec![
                ("vertices", r.vertices.to_string()),
                ("triangle_free", r.triangle_free.to_string()),
            ];
            let mut value = json!({ "vertices": r.vertices, "triangle_free": r.triangle_free });
            if let Some(v) = &r.verdict {
                fields.push(("verdict", verdict_text(v).replace(' ', ":")));
                value["hamilton"] = verdict_json(v);
            }
            (status, value, fields)
        }
    };
    let code = match status {
        "violation" => EXIT_VIOLATION,
        "unknown" => EXIT_BOUND,
        _ => 0,
    };
    let out = if as_json {
        let mut doc = json!({ "sequence": d.terms(), "status": status });
        doc["report"] = value;
        Output::json(&doc)
    } else {
        Output::ok(report_text(status, &text_fields))
    };
    Ok(out.with_code(code))
}

fn sweep(n: usize, theorem: &str, settings: &Settings, as_json: bool) -> Result<Output, Failure> {
    let check: SweepCheck = theorem.parse()?;
    let mut cfg = SweepConfig {
        max_n: n,
        ..SweepConfig::default()
    };
    cfg.limits = settings.apply(cfg.limits);
    if n > cfg.limits.max_n {
        return Err(Failure::Input(format!("--n {n} exceeds max_n={}", cfg.limits.max_n)));
    }
    let report = run_sweep(check, &cfg)?;
    let code = if report.passed() { 0 } else { EXIT_VIOLATION };
    let out = if as_json {
        let value = serde_json::to_value(&report).map_err(|e| Failure::Internal(e.to_string()))?;
        Output::json(&value)
    } else {
        Output::ok(report.to_string())
    };
    Ok(out.with_code(code))
}

fn hamilton(sequence: Option<&str>, input: &GraphInput, as_json: bool, limits: &Limits) -> Result<Output, Failure> {
    let g = match sequence {
        Some(s) => realization_graph(&parse_sequence(s)?, limits)?.graph(),
        None => input
            .load()?
            .ok_or_else(|| Failure::Input("a sequence, --graph or --named is required".into()))?,
    };
    let v = hamiltonian_cycle(&g, limits.hamilton_budget);
    let code = if v == HamiltonVerdict::Unknown { EXIT_BOUND } else { 0 };
    let out = if as_json {
        Output::json(&verdict_json(&v))
    } else {
        Output::ok(format!("{}\n", verdict_text(&v)))
    };
    Ok(out.with_code(code))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let env_max_n = std::env::var("SWITCHLAB_MAX_N").ok();
    let settings = Settings::load(cli.config.as_deref(), env_max_n.as_deref())?;
    let limits = settings.apply(Limits::default());
    let threads = match &cli.command {
        Command::Sweep { jobs, .. } => jobs.unwrap_or(0),
        _ => 1,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Internal(e.to_string()))?;
    match cli.command {
        Command::Check { sequence, json } => check(&sequence, json),
        Command::Enumerate { sequence, count, json } => enumerate(&sequence, count, json, &limits),
        Command::Rgraph {
            sequence,
            input,
            stats,
            json,
            dot,
        } => rgraph(sequence.as_deref(), input.as_deref(), (stats, json, dot), &limits),
        Command::Decompose { sequence, input, json } => decompose(sequence.as_deref(), &input, json),
        Command::Classify { input, json } => classify(&input, json),
        Command::Predict { sequence, json } => predict(&sequence, json),
        Command::Verify {
            sequence,
            theorem,
            json,
        } => verify(&sequence, theorem, json, &limits),
        Command::Sweep { n, theorem, json, .. } => sweep(n, &theorem, &settings, json),
        Command::Hamilton { sequence, input, json } => hamilton(sequence.as_deref(), &input, json, &limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(failure) => {
            let (msg, code) = match failure {
                Failure::Input(m) => (m, EXIT_INPUT),
                Failure::Bound(m) => (m, EXIT_BOUND),
                Failure::Internal(m) => (m, EXIT_VIOLATION),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
