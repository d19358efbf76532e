//! Command-line front end: compute indices, generate family instances,
//! decompose automorphism orbits, and verify the check catalog.
//!
//! Payload goes to stdout, diagnostics to stderr. Exit code 0 means
//! success, 2 means the verifier found violations, 1 is an operational
//! error.

use std::io::Read;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use transindex::error::{Error, Result};
use transindex::indices::{selected_report, IndexId, Value};
use transindex::jsonout::{aggregate_json, index_report_json, orbits_json};
use transindex::symmetry::{automorphisms, DEFAULT_BUDGET};
use transindex::verify::{verify_stream, VerifySource};
use transindex::{bfs_apsp, Family, FamilySpec, Graph};

#[derive(Parser)]
#[command(
    name = "transindex",
    version,
    about = "Transmission-based topological indices: compute, generate, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One graph6 string per line.
    Graph6,
    /// A single graph as an edge list with an "n <count>" header.
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Compute index values for each input graph.
    Compute {
        /// Input path, or "-" for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Comma-separated index identifiers, or "all".
        #[arg(long, default_value = "all")]
        indices: String,
        /// Exponent for the generalized index variants.
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, value_enum, default_value_t = OutputKind::Json)]
        output: OutputKind,
        /// Worker threads; the output is identical for any count.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Emit a named graph family instance as graph6.
    Gen {
        /// Family name; run with an unknown name to list the choices.
        family: String,
        /// Family parameters, e.g. the order.
        params: Vec<u64>,
    },
    /// Decompose each input graph into automorphism orbits.
    Orbits {
        /// Input path, or "-" for stdin.
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Search node budget; overrides TRANSINDEX_BUDGET.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run the bound/identity check catalog over a corpus.
    #[command(group(
        ArgGroup::new("source")
            .required(true)
            .args(["enumerate", "trees", "input"])
    ))]
    Verify {
        /// All connected labelled graphs of this order.
        #[arg(long, value_name = "N")]
        enumerate: Option<usize>,
        /// All labelled trees of this order.
        #[arg(long, value_name = "N")]
        trees: Option<usize>,
        /// graph6 file, or "-" for stdin.
        #[arg(long)]
        input: Option<String>,
        /// Worker threads; the aggregate is identical for any count.
        #[arg(long)]
        workers: Option<usize>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Compute {
            input,
            format,
            indices,
            lambda,
            output,
            workers,
        } => compute(&input, format, &indices, lambda, output, workers),
        Command::Gen { family, params } => gen(&family, params),
        Command::Orbits {
            input,
            format,
            budget,
        } => orbits(&input, format, budget),
        Command::Verify {
            enumerate,
            trees,
            input,
            workers,
        } => verify(enumerate, trees, input, workers),
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
    }
}

/// Parses the input into graphs, each paired with its graph6 form.
fn load_graphs(path: &str, format: Format) -> Result<Vec<(String, Graph)>> {
    let text = read_input(path)?;
    match format {
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                let g = transindex::graph6::parse_graph6(l)?;
                Ok((transindex::graph6::write_graph6(&g)?, g))
            })
            .collect(),
        Format::Edgelist => {
            let g = transindex::edgelist::parse_edge_list(&text)?;
            Ok(vec![(transindex::graph6::write_graph6(&g)?, g)])
        }
    }
}

fn parse_index_list(spec: &str) -> Result<Vec<IndexId>> {
    if spec == "all" {
        return Ok(IndexId::ALL.to_vec());
    }
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(IndexId::parse)
        .collect()
}

fn table_value(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Ratio(r) => r.to_string(),
        Value::Float(f) => format!("{f:.6}"),
    }
}

fn compute(
    input: &str,
    format: Format,
    indices: &str,
    lambda: f64,
    output: OutputKind,
    workers: Option<usize>,
) -> Result<i32> {
    let wanted = parse_index_list(indices)?;
    let graphs = load_graphs(input, format)?;
    let workers = workers.unwrap_or_else(default_workers).max(1);

    // Stripe the stream across workers; reassemble in stream order.
    let results: Vec<Vec<(usize, Result<String>)>> = std::thread::scope(|scope| {
        let graphs = &graphs;
        let wanted = &wanted;
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    graphs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| i % workers == w)
                        .map(|(i, (g6, g))| {
                            let line = selected_report(g, lambda, wanted)
                                .map(|rep| render_report(g6, &rep, output));
                            (i, line)
                        })
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    let mut lines: Vec<(usize, Result<String>)> = results.into_iter().flatten().collect();
    lines.sort_by_key(|(i, _)| *i);
    if let Some((i, Err(e))) = lines
        .iter()
        .find(|(_, r)| r.is_err())
        .map(|(i, r)| (*i, r.clone()))
    {
        return Err(e.at_stream_index(i as u64));
    }
    for (k, (_, line)) in lines.into_iter().enumerate() {
        let line = line.expect("errors handled above");
        if output == OutputKind::Table && k > 0 {
            println!();
        }
        println!("{line}");
    }
    Ok(0)
}

fn render_report(g6: &str, rep: &transindex::IndexReport, output: OutputKind) -> String {
    match output {
        OutputKind::Json => index_report_json(g6, rep).render(),
        OutputKind::Table => {
            let mut out = format!("graph {g6}");
            if let Some(lambda) = rep.lambda {
                out.push_str(&format!("  (lambda = {lambda})"));
            }
            for e in rep.entries() {
                out.push_str(&format!(
                    "\n  {:<10} {}",
                    e.id.as_str(),
                    table_value(&e.value)
                ));
            }
            if let Some(balanced) = rep.distance_balanced {
                out.push_str(&format!("\n  {:<10} {}", "balanced", balanced));
            }
            out
        }
    }
}

fn gen(family: &str, params: Vec<u64>) -> Result<i32> {
    let family = Family::from_name(family).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        Error::InvalidFamilyParams(format!(
            "unknown family {family:?}; choices: {}",
            names.join(", ")
        ))
    })?;
    let g = FamilySpec::new(family, params).generate()?;
    println!("{}", transindex::graph6::write_graph6(&g)?);
    Ok(0)
}

fn symmetry_budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("TRANSINDEX_BUDGET") {
        Ok(raw) => raw.parse().map_err(|_| {
            Error::InvalidFamilyParams(format!("TRANSINDEX_BUDGET is not a number: {raw:?}"))
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn orbits(input: &str, format: Format, budget: Option<u64>) -> Result<i32> {
    let budget = symmetry_budget(budget)?;
    for (g6, g) in load_graphs(input, format)? {
        let dist = bfs_apsp(&g)?;
        let orbits = automorphisms(&g, &dist, budget)?;
        println!("{}", orbits_json(&g6, &orbits).render());
    }
    Ok(0)
}

fn verify(
    enumerate: Option<usize>,
    trees: Option<usize>,
    input: Option<String>,
    workers: Option<usize>,
) -> Result<i32> {
    let source = if let Some(n) = enumerate {
        VerifySource::Connected(n)
    } else if let Some(n) = trees {
        VerifySource::Trees(n)
    } else {
        let path = input.expect("clap enforces one source");
        let lines = read_input(&path)?.lines().map(str::to_string).collect();
        let name = if path == "-" {
            "stdin".to_string()
        } else {
            path
        };
        VerifySource::Graph6Lines(name, lines)
    };
    let report = verify_stream(&source, workers.unwrap_or_else(default_workers))?;
    println!("{}", aggregate_json(&report).render());
    Ok(if report.has_violations() { 2 } else { 0 })
}
