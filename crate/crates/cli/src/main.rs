//! `jis`: decide induced-subgraph membership in Johnson graphs, verify and
//! construct certificates, and explore edge-move distance.
//!
//! Exit codes: 0 success, 1 failed certification, 2 usage/parse/precondition
//! error, 3 inconclusive (budget or bound caps), 141 output pipe closed.

use clap::{Args, Parser, Subcommand, ValueEnum};
use jis_core::census::enumerate_connected;
use jis_core::edge_move::{
    distance_graph, edge_move_distance, jis_family_to_graphs, q_family, EmdInstance,
};
use jis_core::filters::{FilterRule, FilterViolation, FilterWitness};
use jis_core::graph6::{parse_graph6, to_graph6};
use jis_core::named::{gen_named, NamedFamily};
use jis_core::realization::{
    realize_complete, realize_cycle, replay_removals, verify_realization, Certificate, SetFamily,
    VerifyReport,
};
use jis_core::recognizer::{
    decide_jis, jis_diameter, Decision, DiameterResult, InconclusiveReason, NotJisReason, Outcome,
    SearchConfig,
};
use jis_core::{Error, Graph, VertexId};
use serde_json::json;
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

/// Largest connected component the CLI hands to the exact search; beyond
/// this the completeness bound 2n-2 would overflow the ground-set masks.
const MAX_SEARCH_COMPONENT: usize = 32;

/// Line to stdout; a consumer that closed the pipe ends the run the way
/// SIGPIPE would, not with a panic.
macro_rules! emit {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(141);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "jis",
    version,
    about = "Decide whether graphs embed as induced subgraphs of Johnson graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide JIS membership for each input graph
    Recognize {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum, default_value_t = OutputMode::Json)]
        output: OutputMode,
        #[command(flatten)]
        search: SearchOpts,
    },
    /// Verify a certificate against a graph
    Certify {
        /// Certificate JSON file
        #[arg(long)]
        cert: PathBuf,
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum, default_value_t = OutputMode::Json)]
        output: OutputMode,
    },
    /// Emit a named graph, with a certificate where a direct construction exists
    Construct {
        /// complete, cycle, path, complete-bipartite, theta, or delta
        family: String,
        /// Family parameters
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = OutputMode::Human)]
        output: OutputMode,
    },
    /// Classify a stream of graphs, or an internally generated census, and summarize
    Census {
        #[command(flatten)]
        input: InputOpts,
        /// Generate all connected graphs up to this order (<= 7) instead of reading input
        #[arg(long, conflicts_with = "input")]
        max_order: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputMode::Json)]
        output: OutputMode,
        #[command(flatten)]
        search: SearchOpts,
    },
    /// JIS-diameter of a connected JIS graph
    Diameter {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum, default_value_t = OutputMode::Json)]
        output: OutputMode,
        #[command(flatten)]
        search: SearchOpts,
    },
    /// Edge-move distance between two graphs of equal order and size
    EmdDistance {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum, default_value_t = OutputMode::Json)]
        output: OutputMode,
    },
    /// Edge-move distance graph of a family of graphs
    EmdGraph {
        #[command(flatten)]
        input: InputOpts,
        /// Use the n-member path family whose distance graph drops one edge (n >= 5)
        #[arg(long, conflicts_with = "input")]
        q_family: Option<usize>,
        /// Build the family from a certificate's sets
        #[arg(long, conflicts_with_all = ["input", "q_family"])]
        cert: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputMode::Json)]
        output: OutputMode,
    },
}

#[derive(Args)]
struct InputOpts {
    /// Input file; standard input when omitted
    input: Option<PathBuf>,
    /// Input graph format
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Args)]
struct SearchOpts {
    /// Abort the exact search after this many nodes
    #[arg(long)]
    budget: Option<u64>,
    /// Cap the set size m (verdicts above the cap become inconclusive)
    #[arg(long)]
    max_m: Option<usize>,
    /// Pin certificates to the first solution in enumeration order
    #[arg(long)]
    deterministic: bool,
}

impl SearchOpts {
    fn config(&self) -> SearchConfig {
        // the sequential search is deterministic either way; the flag is
        // accepted so scripts can state the promise explicitly
        let _ = self.deterministic;
        SearchConfig {
            max_m: self.max_m,
            ground_bound: None,
            node_limit: self.budget,
            deterministic_certificate: true,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Json,
    Human,
}

struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            use std::io::Write as _;
            let _ = writeln!(std::io::stderr(), "error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Recognize { input, output, search } => recognize(&input, output, &search.config()),
        Command::Certify { cert, input, output } => certify(&cert, &input, output),
        Command::Construct { family, params, output } => construct(&family, &params, output),
        Command::Census { input, max_order, output, search } => {
            census(&input, max_order, output, &search.config())
        }
        Command::Diameter { input, output, search } => diameter(&input, output, &search.config()),
        Command::EmdDistance { input, output } => emd_distance(&input, output),
        Command::EmdGraph { input, q_family, cert, output } => {
            emd_graph(&input, q_family, cert.as_deref(), output)
        }
    }
}

// input plumbing

fn read_source(path: Option<&std::path::Path>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| usage(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}

fn parse_graphs(opts: &InputOpts) -> Result<Vec<Graph>, Failure> {
    let text = read_source(opts.input.as_deref())?;
    match opts.format {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, line)| !line.trim().is_empty())
            .map(|(i, line)| {
                parse_graph6(line.trim()).map_err(|e| usage(format!("line {}: {e}", i + 1)))
            })
            .collect(),
        Format::Edgelist => parse_edgelist_stream(&text),
    }
}

/// Consecutive `n m` + edge-line blocks; blank lines are skipped.
fn parse_edgelist_stream(text: &str) -> Result<Vec<Graph>, Failure> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty())
        .collect();
    let mut graphs = Vec::new();
    let mut at = 0;
    while at < lines.len() {
        let (lineno, header) = lines[at];
        let m: usize = header
            .split_whitespace()
            .nth(1)
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| usage(format!("line {lineno}: expected an `n m` header")))?;
        let end = at + 1 + m;
        if end > lines.len() {
            return Err(usage(format!(
                "line {lineno}: header announces {m} edges but the input ends after {}",
                lines.len() - at - 1
            )));
        }
        let block: String = lines[at..end].iter().map(|(_, l)| format!("{l}\n")).collect();
        graphs.push(
            Graph::parse_edge_list(&block)
                .map_err(|e| usage(format!("block at line {lineno}: {e}")))?,
        );
        at = end;
    }
    Ok(graphs)
}

fn parse_one_graph(opts: &InputOpts, what: &str) -> Result<Graph, Failure> {
    let mut graphs = parse_graphs(opts)?;
    if graphs.len() != 1 {
        return Err(usage(format!("{what} takes exactly one graph, got {}", graphs.len())));
    }
    Ok(graphs.pop().expect("length checked"))
}

fn load_certificate(path: &std::path::Path) -> Result<Certificate, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Certificate::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn guard_component_order(g: &Graph) -> Result<(), Failure> {
    match g.connected_components().iter().map(Vec::len).max() {
        Some(n) if n > MAX_SEARCH_COMPONENT => Err(usage(format!(
            "connected component of order {n} exceeds the exact-search limit {MAX_SEARCH_COMPONENT}"
        ))),
        _ => Ok(()),
    }
}

// human rendering, 1-based vertex labels

fn v1(v: VertexId) -> String {
    format!("v{}", v + 1)
}

fn vertex_set(vs: &[VertexId]) -> String {
    let inner: Vec<String> = vs.iter().map(|&v| v1(v)).collect();
    format!("{{{}}}", inner.join(","))
}

fn ground_set(elems: &[u32]) -> String {
    let inner: Vec<String> = elems.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn family_text(f: &SetFamily) -> String {
    let parts: Vec<String> = (0..f.len()).map(|v| format!("{}={}", v1(v), ground_set(&f.set(v)))).collect();
    parts.join(" ")
}

fn rule_name(rule: FilterRule) -> &'static str {
    match rule {
        FilterRule::MaxcliqueOverlap => "maxclique-overlap",
        FilterRule::TwoSharedCrossEdge => "two-shared-cross-edge",
        FilterRule::OneSharedDoubleEdge => "one-shared-double-edge",
        FilterRule::OddParityCycle => "odd-parity-cycle",
    }
}

fn violation_text(v: &FilterViolation) -> String {
    let mut s = String::from(rule_name(v.rule));
    match &v.witness {
        FilterWitness::CliquePair(w) => {
            write!(
                s,
                ": maximal cliques {} and {} share {}",
                vertex_set(&w.clique_a),
                vertex_set(&w.clique_b),
                vertex_set(&w.shared)
            )
            .expect("string write");
            if let Some((u, v)) = w.cross_edge {
                write!(s, ", cross edge {}{}", v1(u), v1(v)).expect("string write");
            }
            if let Some((u, (a, b))) = w.double_neighbors {
                write!(s, ", {} is adjacent to both {} and {}", v1(u), v1(a), v1(b))
                    .expect("string write");
            }
        }
        FilterWitness::Parity(w) => {
            let cliques: Vec<String> = w.cliques.iter().map(|c| vertex_set(c)).collect();
            write!(
                s,
                ": {} maximal cliques form an odd cycle, consecutive ones sharing two vertices: {}",
                w.cycle.len(),
                cliques.join(" ")
            )
            .expect("string write");
        }
    }
    s
}

fn decision_text(d: &Decision) -> String {
    match &d.outcome {
        Outcome::Jis(cert) => format!(
            "JIS m={} N={} sets: {}",
            cert.family().m(),
            cert.family().ground_size(),
            family_text(cert.family())
        ),
        Outcome::NotJis(NotJisReason::Filter(v)) => format!("not JIS ({})", violation_text(v)),
        Outcome::NotJis(NotJisReason::SearchExhausted) => {
            format!("not JIS (search exhausted, {} nodes)", d.stats.nodes)
        }
        Outcome::Inconclusive(InconclusiveReason::BudgetExhausted) => {
            format!("inconclusive (node budget exhausted after {} nodes)", d.stats.nodes)
        }
        Outcome::Inconclusive(InconclusiveReason::BoundsCapped) => {
            "inconclusive (search bounds capped below what completeness needs)".to_string()
        }
    }
}

// commands

fn recognize(input: &InputOpts, output: OutputMode, cfg: &SearchConfig) -> Result<u8, Failure> {
    let graphs = parse_graphs(input)?;
    let mut inconclusive = false;
    for (i, g) in graphs.iter().enumerate() {
        guard_component_order(g)?;
        let decision = decide_jis(g, cfg);
        inconclusive |= matches!(decision.outcome, Outcome::Inconclusive(_));
        match output {
            OutputMode::Json => emit!("{}", decision.to_json()),
            OutputMode::Human => emit!("graph {}: {}", i + 1, decision_text(&decision)),
        }
    }
    Ok(if inconclusive { 3 } else { 0 })
}

fn certify(
    cert_path: &std::path::Path,
    input: &InputOpts,
    output: OutputMode,
) -> Result<u8, Failure> {
    let cert = load_certificate(cert_path)?;
    let g = parse_one_graph(input, "certify")?;
    let report = match verify_realization(&g, cert.family()) {
        Ok(report) => report,
        Err(e) => {
            // structurally unusable certificate: report and fail certification
            match output {
                OutputMode::Json => {
                    emit!("{}", json!({ "ok": false, "error": e.to_string() }))
                }
                OutputMode::Human => emit!("FAIL: {e}"),
            }
            return Ok(1);
        }
    };
    print_report(&report, output);
    Ok(if report.ok { 0 } else { 1 })
}

fn print_report(report: &VerifyReport, output: OutputMode) {
    match output {
        OutputMode::Json => {
            emit!("{}", serde_json::to_value(report).expect("report serializes"))
        }
        OutputMode::Human if report.ok => emit!("ok"),
        OutputMode::Human => {
            let mut parts = Vec::new();
            for v in &report.violations {
                parts.push(format!(
                    "pair ({},{}): intersection {}, {}",
                    v1(v.pair.0),
                    v1(v.pair.1),
                    v.intersection,
                    if v.adjacent { "adjacent" } else { "not adjacent" }
                ));
            }
            for &(a, b) in &report.duplicate_sets {
                parts.push(format!("duplicate sets at ({},{})", v1(a), v1(b)));
            }
            emit!("FAIL: {}", parts.join("; "));
        }
    }
}

fn construct(family: &str, params: &[usize], output: OutputMode) -> Result<u8, Failure> {
    let family: NamedFamily = family.parse().map_err(usage)?;
    let g = gen_named(family, params).map_err(|e| usage(e.to_string()))?;
    let g6 = to_graph6(&g).map_err(|e| usage(e.to_string()))?;
    let cert = direct_certificate(family, params, &g)
        .map_err(|e| usage(format!("construction failed verification: {e}")))?;
    match output {
        OutputMode::Json => emit!(
            "{}",
            json!({
                "family": format!("{family:?}").to_lowercase(),
                "params": params,
                "order": g.order(),
                "size": g.size(),
                "graph6": g6,
                "certificate": cert,
            })
        ),
        OutputMode::Human => emit!("{g6}"),
    }
    Ok(0)
}

/// Families with a direct constructive realization: complete graphs,
/// cycles, and paths (trees via 2-core replay). Other families fall back
/// to the recognizer and get no certificate here.
fn direct_certificate(
    family: NamedFamily,
    params: &[usize],
    g: &Graph,
) -> Result<Option<Certificate>, Error> {
    let f = match (family, params) {
        (NamedFamily::Complete, &[k]) if k >= 1 => realize_complete(k)?,
        (NamedFamily::Cycle, &[k]) => realize_cycle(k)?,
        (NamedFamily::Path, &[_]) => replay_removals(&SetFamily::empty(), &g.two_core())?,
        _ => return Ok(None),
    };
    Certificate::checked(g, f).map(Some)
}

fn census(
    input: &InputOpts,
    max_order: Option<usize>,
    output: OutputMode,
    cfg: &SearchConfig,
) -> Result<u8, Failure> {
    let graphs = match max_order {
        Some(k) => {
            if !(1..=7).contains(&k) {
                return Err(usage(format!("--max-order must be 1..=7, got {k}")));
            }
            (1..=k).flat_map(enumerate_connected).collect()
        }
        None => parse_graphs(input)?,
    };

    #[derive(Default, Clone)]
    struct Tally {
        jis: usize,
        not_jis: usize,
        inconclusive: usize,
        max_m: usize,
        max_ground: usize,
        m_bound: usize,
        ground_bound: usize,
    }
    let mut per_order: std::collections::BTreeMap<usize, Tally> = Default::default();
    let mut filter_counts: std::collections::BTreeMap<&'static str, usize> = Default::default();
    let mut entries = Vec::with_capacity(graphs.len());
    let mut inconclusive = false;

    for (i, g) in graphs.iter().enumerate() {
        guard_component_order(g)?;
        let d = decide_jis(g, cfg);
        let g6 = to_graph6(g).map_err(|e| usage(e.to_string()))?;
        let n = g.order();
        let tally = per_order.entry(n).or_default();
        let (m_bound, ground_bound) = match (n, g.is_connected()) {
            (0, _) => (0, 0),
            (1, _) => (1, 1),
            (n, true) => (n - 1, 2 * n - 2),
            (n, false) => (n, 2 * n),
        };
        tally.m_bound = tally.m_bound.max(m_bound);
        tally.ground_bound = tally.ground_bound.max(ground_bound);
        let mut entry = json!({ "index": i, "graph6": g6, "order": n });
        match &d.outcome {
            Outcome::Jis(cert) => {
                tally.jis += 1;
                tally.max_m = tally.max_m.max(cert.family().m());
                tally.max_ground = tally.max_ground.max(cert.family().ground_size());
                entry["outcome"] = json!("jis");
                entry["m"] = json!(cert.family().m());
                entry["ground_size"] = json!(cert.family().ground_size());
            }
            Outcome::NotJis(reason) => {
                tally.not_jis += 1;
                entry["outcome"] = json!("not_jis");
                if let NotJisReason::Filter(v) = reason {
                    *filter_counts.entry(rule_name(v.rule)).or_default() += 1;
                    entry["rule"] = json!(rule_name(v.rule));
                }
            }
            Outcome::Inconclusive(_) => {
                tally.inconclusive += 1;
                inconclusive = true;
                entry["outcome"] = json!("inconclusive");
            }
        }
        entries.push(entry);
    }

    let per_order_rows: Vec<serde_json::Value> = per_order
        .iter()
        .map(|(order, t)| {
            json!({
                "order": order,
                "jis": t.jis,
                "not_jis": t.not_jis,
                "inconclusive": t.inconclusive,
                "max_m": t.max_m,
                "m_bound": t.m_bound,
                "max_ground": t.max_ground,
                "ground_bound": t.ground_bound,
            })
        })
        .collect();
    let filters_json: serde_json::Value = filter_counts
        .iter()
        .map(|(&k, &v)| (k.to_string(), json!(v)))
        .collect::<serde_json::Map<_, _>>()
        .into();

    match output {
        OutputMode::Json => emit!(
            "{}",
            json!({
                "total": entries.len(),
                "entries": entries,
                "summary": { "per_order": per_order_rows, "filter_rejections": filters_json },
            })
        ),
        OutputMode::Human => {
            emit!("{} graphs", entries.len());
            for (order, t) in &per_order {
                emit!(
                    "order {order}: {} jis, {} not jis{}  (max m {} of bound {}, max ground {} of bound {})",
                    t.jis,
                    t.not_jis,
                    if t.inconclusive > 0 {
                        format!(", {} inconclusive", t.inconclusive)
                    } else {
                        String::new()
                    },
                    t.max_m,
                    t.m_bound,
                    t.max_ground,
                    t.ground_bound,
                );
            }
            let rejections: Vec<String> = filter_counts
                .iter()
                .map(|(rule, count)| format!("{rule} {count}"))
                .collect();
            if !rejections.is_empty() {
                emit!("filter rejections: {}", rejections.join(", "));
            }
        }
    }
    Ok(if inconclusive { 3 } else { 0 })
}

fn diameter(input: &InputOpts, output: OutputMode, cfg: &SearchConfig) -> Result<u8, Failure> {
    let g = parse_one_graph(input, "diameter")?;
    guard_component_order(&g)?;
    let result = jis_diameter(&g, cfg).map_err(|e| match e {
        Error::Undecided => Failure { code: 3, msg: e.to_string() },
        other => usage(other.to_string()),
    })?;
    print_diameter(&result, output);
    Ok(0)
}

fn print_diameter(result: &DiameterResult, output: OutputMode) {
    match output {
        OutputMode::Json => {
            emit!("{}", serde_json::to_value(result).expect("result serializes"))
        }
        OutputMode::Human => {
            emit!("diameter {}", result.diameter);
            match result.witness {
                Some((a, b)) => emit!("witness {} {}", v1(a), v1(b)),
                None => emit!("witness none (single vertex)"),
            }
            for p in &result.pairs {
                emit!("{} {}: {}", v1(p.pair.0), v1(p.pair.1), p.distance);
            }
            if let Some(w) = result.witness {
                if let Some(p) = result.pairs.iter().find(|p| p.pair == w) {
                    emit!("witness realization: {}", family_text(&p.family));
                }
            }
        }
    }
}

fn emd_distance(input: &InputOpts, output: OutputMode) -> Result<u8, Failure> {
    let graphs = parse_graphs(input)?;
    let [g, h] = &graphs[..] else {
        return Err(usage(format!("emd-distance takes exactly two graphs, got {}", graphs.len())));
    };
    let d = edge_move_distance(g, h).map_err(|e| usage(e.to_string()))?;
    match output {
        OutputMode::Json => emit!("{}", json!({ "distance": d })),
        OutputMode::Human => emit!("{d}"),
    }
    Ok(0)
}

fn emd_graph(
    input: &InputOpts,
    q: Option<usize>,
    cert: Option<&std::path::Path>,
    output: OutputMode,
) -> Result<u8, Failure> {
    let instance = if let Some(n) = q {
        q_family(n).map_err(|e| usage(e.to_string()))?
    } else if let Some(path) = cert {
        jis_family_to_graphs(load_certificate(path)?.family())
    } else {
        EmdInstance::new(parse_graphs(input)?).map_err(|e| usage(e.to_string()))?
    };
    let dg = distance_graph(&instance).map_err(|e| usage(e.to_string()))?;
    let dg6 = to_graph6(&dg).map_err(|e| usage(e.to_string()))?;
    let members: Vec<String> = instance
        .graphs()
        .iter()
        .map(|g| to_graph6(g).map_err(|e| usage(e.to_string())))
        .collect::<Result<_, _>>()?;
    match output {
        OutputMode::Json => emit!(
            "{}",
            json!({ "graph6": dg6, "order": dg.order(), "members": members })
        ),
        OutputMode::Human => {
            emit!("{dg6}");
            for (i, m) in members.iter().enumerate() {
                emit!("member {}: {m}", i + 1);
            }
        }
    }
    Ok(0)
}
