use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cutcount::census::{count_connected_subgraphs, count_containing, subgraph_number};
use cutcount::decompose::{
    all_subgraph_numbers, count_containing_via_decomposition, count_via_decomposition,
    subgraph_number_via_decomposition,
};
use cutcount::extremal::{
    search, theorem_ids, verify_table, verify_theorem, ClassSpec, Objective, Subset, GENERATION_CAP,
};
use cutcount::families::{verify_formulas, FamilySpec};
use cutcount::graph::set_of;
use cutcount::io::{parse_edge_list, parse_graph6, to_dot, to_edge_list, to_graph6};
use cutcount::{Count, Graph};

/// Exact counts of connected subgraphs, closed forms for graph families,
/// and exhaustive extremal searches.
#[derive(Parser)]
#[command(name = "cutcount", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count connected subgraphs of the input graph(s).
    Count {
        /// Input file, or `-` for stdin.
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Count only subgraphs containing this vertex.
        #[arg(long, conflicts_with = "containing")]
        vertex: Option<usize>,
        /// Count only subgraphs containing all of these vertices.
        #[arg(long, value_delimiter = ',')]
        containing: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Method::Decompose)]
        method: Method,
    },
    /// Closed-form counts for a family member, e.g. `L:n=12,g=11`.
    Family {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
        /// Recompute the counts and compare with the closed forms.
        #[arg(long)]
        check: bool,
    },
    /// Exhaustive search for minimizers over a class of connected graphs.
    Search {
        #[arg(long)]
        n: usize,
        /// Exact number of cut vertices.
        #[arg(long)]
        k: Option<usize>,
        /// Minimum girth.
        #[arg(long)]
        girth: Option<usize>,
        #[arg(long, default_value = "all")]
        subset: Subset,
        #[arg(long, default_value = "F")]
        objective: Objective,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall time in the report (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest order examined (suite default if omitted).
        #[arg(long)]
        n_max: Option<usize>,
        /// Restrict the theorem suite to these ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Compare enumeration against decomposition on given or random graphs.
    OracleDiff {
        /// graph6 input, one graph per line (`-` for stdin).
        #[arg(long = "in")]
        input: Option<String>,
        /// Number of random connected graphs to try.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 20)]
        max_m: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Decompose,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Table1,
    Theorems,
    Formulas,
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Ok,
    Fail,
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_graphs(path: &str, format: Format) -> Result<Vec<Graph>> {
    let text = read_input(path)?;
    match format {
        Format::Edgelist => Ok(vec![parse_edge_list(&text)?]),
        Format::Graph6 => {
            let graphs = text
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(|l| parse_graph6(l.trim()))
                .collect::<cutcount::Result<Vec<_>>>()?;
            if graphs.is_empty() {
                bail!("no graphs in input");
            }
            Ok(graphs)
        }
    }
}

fn count(g: &Graph, vertex: Option<usize>, containing: Option<&[usize]>, method: Method) -> Result<(Count, Count)> {
    let brute = |g: &Graph| -> Result<Count> {
        Ok(match (vertex, containing) {
            (Some(v), _) => subgraph_number(g, v)?,
            (None, Some(set)) => count_containing(g, checked_set(g, set)?)?,
            (None, None) => count_connected_subgraphs(g)?,
        })
    };
    let decompose = |g: &Graph| -> Result<Count> {
        Ok(match (vertex, containing) {
            (Some(v), _) => subgraph_number_via_decomposition(g, v)?,
            (None, Some(set)) => count_containing_via_decomposition(g, checked_set(g, set)?)?,
            (None, None) => count_via_decomposition(g)?,
        })
    };
    Ok(match method {
        Method::Brute => {
            let c = brute(g)?;
            (c.clone(), c)
        }
        Method::Decompose => {
            let c = decompose(g)?;
            (c.clone(), c)
        }
        Method::Both => (brute(g)?, decompose(g)?),
    })
}

fn checked_set(g: &Graph, set: &[usize]) -> Result<u64> {
    for &v in set {
        g.check_vertex(v)?;
    }
    Ok(set_of(set))
}

fn cmd_count(
    out: &mut impl Write,
    input: &str,
    format: Format,
    vertex: Option<usize>,
    containing: Option<Vec<usize>>,
    method: Method,
) -> Result<Verdict> {
    let graphs = read_graphs(input, format)?;
    let mut verdict = Verdict::Ok;
    for g in &graphs {
        let (a, b) = count(g, vertex, containing.as_deref(), method)?;
        if method == Method::Both {
            let tag = if a == b { "" } else { " MISMATCH" };
            writeln!(out, "brute={a} decompose={b}{tag}")?;
            if a != b {
                verdict = Verdict::Fail;
            }
        } else {
            writeln!(out, "{a}")?;
        }
    }
    Ok(verdict)
}

fn cmd_family(out: &mut impl Write, spec: &str, emit: Option<Emit>, check: bool) -> Result<Verdict> {
    let spec: FamilySpec = spec.parse()?;
    let g = spec.build()?;
    let mut verdict = Verdict::Ok;
    let mut line = |out: &mut dyn Write, what: String, predicted: Count, computed: Option<Count>| -> Result<()> {
        match computed {
            None => writeln!(out, "{what} predicted={predicted}")?,
            Some(c) => {
                let ok = c == predicted;
                if !ok {
                    verdict = Verdict::Fail;
                }
                writeln!(out, "{what} predicted={predicted} computed={c} {}", if ok { "PASS" } else { "FAIL" })?;
            }
        }
        Ok(())
    };
    writeln!(out, "family {spec} order={} edges={}", g.n(), g.edge_count())?;
    let total = check.then(|| count_via_decomposition(&g)).transpose()?;
    line(out, "F".into(), spec.closed_form_f_total()?, total)?;
    let mut highlight = 0u64;
    for tag in spec.tags() {
        let v = spec.special_vertex(tag)?;
        highlight |= 1 << v;
        let computed = check.then(|| subgraph_number_via_decomposition(&g, v)).transpose()?;
        line(out, format!("f({tag}={v})"), spec.closed_form_f(tag)?, computed)?;
    }
    match emit {
        None => {}
        Some(Emit::Graph6) => writeln!(out, "{}", to_graph6(&g)?)?,
        Some(Emit::Edgelist) => write!(out, "{}", to_edge_list(&g))?,
        Some(Emit::Dot) => write!(out, "{}", to_dot(&g, highlight))?,
    }
    Ok(verdict)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    out: &mut impl Write,
    n: usize,
    k: Option<usize>,
    girth: Option<usize>,
    subset: Subset,
    objective: Objective,
    jobs: usize,
    report_path: Option<PathBuf>,
    timing: bool,
) -> Result<Verdict> {
    let mut class = ClassSpec::new(n).with_subset(subset);
    if let Some(k) = k {
        class = class.with_cut_vertices(k);
    }
    if let Some(g) = girth {
        class = class.with_min_girth(g);
    }
    let mut report = search(&class, objective, jobs)?;
    if !timing {
        report.wall_time_ms = None;
    }
    writeln!(out, "{}", report.summary())?;
    if let Some(path) = report_path {
        fs::write(&path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Verdict::Ok)
}

fn cmd_verify(out: &mut impl Write, suite: Suite, n_max: Option<usize>, only: Option<Vec<String>>) -> Result<Verdict> {
    let passed = match suite {
        Suite::Table1 => {
            let report = verify_table(n_max.unwrap_or(9))?;
            write!(out, "{report}")?;
            report.passed()
        }
        Suite::Theorems => {
            let n_max = n_max.unwrap_or(8).min(GENERATION_CAP);
            let ids: Vec<String> = match only {
                Some(ids) => ids,
                None => theorem_ids().into_iter().map(|(id, _)| id.to_string()).collect(),
            };
            let mut all = true;
            for id in &ids {
                let report = verify_theorem(id, n_max)?;
                all &= report.passed;
                write!(out, "{report}")?;
            }
            all
        }
        Suite::Formulas => {
            let checks = verify_formulas(n_max.unwrap_or(12))?;
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            checks.iter().all(|c| c.passed())
        }
    };
    writeln!(out, "{}", if passed { "PASS" } else { "FAIL" })?;
    Ok(if passed { Verdict::Ok } else { Verdict::Fail })
}

/// A connected graph: a random tree plus random extra edges.
fn random_connected(rng: &mut StdRng, max_n: usize, max_m: usize) -> Result<Graph> {
    let n = rng.gen_range(1..=max_n.max(1));
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let room = n * (n - 1) / 2;
    let target = rng.gen_range(edges.len()..=max_m.max(edges.len()).min(room));
    while edges.len() < target {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let e = (u.min(v), u.max(v));
        if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
            edges.push(e);
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn cmd_oracle_diff(
    out: &mut impl Write,
    input: Option<String>,
    random: usize,
    seed: u64,
    max_n: usize,
    max_m: usize,
) -> Result<Verdict> {
    let mut graphs = match &input {
        Some(path) => read_graphs(path, Format::Graph6)?,
        None => Vec::new(),
    };
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..random {
        graphs.push(random_connected(&mut rng, max_n, max_m)?);
    }
    if graphs.is_empty() {
        bail!("nothing to compare: give --in or --random");
    }
    let mut mismatches = 0;
    for g in &graphs {
        let total_b = count_connected_subgraphs(g)?;
        let total_d = count_via_decomposition(g)?;
        let per_vertex = all_subgraph_numbers(g)?;
        let mut bad: Vec<String> = Vec::new();
        if total_b != total_d {
            bad.push(format!("F brute={total_b} decompose={total_d}"));
        }
        for (v, d) in per_vertex.iter().enumerate() {
            let b = subgraph_number(g, v)?;
            if &b != d {
                bad.push(format!("f({v}) brute={b} decompose={d}"));
            }
        }
        let g6 = to_graph6(g)?;
        if bad.is_empty() {
            writeln!(out, "ok {g6} F={total_b}")?;
        } else {
            mismatches += 1;
            writeln!(out, "MISMATCH {g6} {}", bad.join(" "))?;
        }
    }
    writeln!(out, "compared={} mismatches={mismatches}", graphs.len())?;
    Ok(if mismatches == 0 { Verdict::Ok } else { Verdict::Fail })
}

fn run(cli: Cli) -> Result<Verdict> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Count { input, format, vertex, containing, method } => {
            cmd_count(&mut out, &input, format, vertex, containing, method)
        }
        Command::Family { spec, emit, check } => cmd_family(&mut out, &spec, emit, check),
        Command::Search { n, k, girth, subset, objective, jobs, out: path, timing } => {
            cmd_search(&mut out, n, k, girth, subset, objective, jobs, path, timing)
        }
        Command::Verify { suite, n_max, only } => cmd_verify(&mut out, suite, n_max, only),
        Command::OracleDiff { input, random, seed, max_n, max_m } => {
            cmd_oracle_diff(&mut out, input, random, seed, max_n, max_m)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
