//! `trace-turan`: batch front end for trace detection, exact search,
//! constructions, lemma checks and bound tables.

mod cache;
mod range;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use trace_turan::bounds::{
    bound_main, derivation_csv, derivation_table_with, evaluate_k2t, lemma_report, ratio_table,
    GChoice, RatioRow,
};
use trace_turan::constructions::{greedy_lower_bound_with, lift_to_trace_free, polarity_graph};
use trace_turan::search::{export_cnf, turan_oracle, turan_search, SearchConfig, SearchResult};
use trace_turan::trace::{contains_trace_within, Detection};
use trace_turan::{Error, Hypergraph3, TracePattern};

use range::Span;

const DEFAULT_SEED: u64 = 20_240_101;

#[derive(Parser)]
#[command(name = "trace-turan", version, about = "K_{2,t} traces in 3-uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact ex(n, Tr(K_{2,t})) as a CSV row.
    Search(SearchArgs),
    /// Look for a K_{2,t} trace in a hypergraph file.
    Check(CheckArgs),
    /// Generate a lower-bound construction.
    #[command(subcommand)]
    Construct(Construct),
    /// Run the co-degree and neighborhood checks on a hypergraph file.
    Verify(VerifyArgs),
    /// Tabulate the three-term bound against the headline bound.
    Bounds(BoundsArgs),
    /// Edge counts relative to n^{3/2} for search results and constructions.
    Ratio(RatioArgs),
    /// Write a DIMACS formula for "trace-free with at least m edges".
    Cnf(CnfArgs),
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    /// Use the brute-force oracle (n <= 6) instead of the orderly search.
    #[arg(long)]
    oracle: bool,
    /// Worker threads; 0 picks automatically.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, default_value_t = trace_turan::search::DEFAULT_WITNESS_CAP)]
    witness_cap: usize,
    #[arg(long, default_value_t = trace_turan::search::DEFAULT_SEARCH_CAP)]
    max_n: usize,
    /// Write each extremal hypergraph to this directory.
    #[arg(long)]
    witness_dir: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// Give up after this many seconds.
    #[arg(long)]
    budget: Option<f64>,
}

#[derive(Subcommand)]
enum Construct {
    /// Orthogonal-polarity graph of PG(2, q), q prime.
    Polarity {
        #[arg(long)]
        q: u64,
        /// Emit the one-vertex lift to a trace-free hypergraph instead.
        #[arg(long)]
        lift: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Best of several random-order greedy packings.
    Greedy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = trace_turan::constructions::DEFAULT_RESTARTS)]
        restarts: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long, default_value_t = 2)]
    t: usize,
    #[arg(long, default_value_t = 14)]
    delta: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    JsonLines,
}

#[derive(Args)]
struct BoundsArgs {
    /// A single value or `lo:hi`.
    #[arg(long, default_value = "14:1000000")]
    t: Span,
    #[arg(long, default_value_t = 1000)]
    points: usize,
    #[arg(long, conflicts_with = "clamped_g")]
    paper_g: bool,
    #[arg(long)]
    clamped_g: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Vertex count for the per-t reports of the json-lines format.
    #[arg(long, default_value_t = 1_000_000)]
    n: u64,
}

#[derive(Args)]
struct RatioArgs {
    /// A single value or `lo:hi`.
    #[arg(long, default_value = "3:7")]
    n: Span,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    t: Vec<usize>,
    /// Also list polarity lifts for these primes.
    #[arg(long, value_delimiter = ',')]
    polarity: Vec<u64>,
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct CnfArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 2)]
    t: usize,
    #[arg(long)]
    out: PathBuf,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_hypergraph(path: &Path) -> Result<Hypergraph3, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    text.parse::<Hypergraph3>().map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn search(a: SearchArgs) -> Outcome {
    let cfg = SearchConfig {
        max_n: a.max_n,
        witness_cap: a.witness_cap,
        threads: a.threads,
        lower_bound: None,
    };
    let key = cache::Key {
        n: a.n,
        t: a.t,
        witness_cap: a.witness_cap,
        oracle: a.oracle,
    };
    let (row, witnesses) = match cache::load(&key) {
        Some(hit) => hit,
        None => {
            let r: SearchResult = if a.oracle {
                turan_oracle(a.n, a.t)?
            } else {
                turan_search(a.n, a.t, &cfg)?
            };
            cache::store(&key, &r);
            (r.csv_row(), r.witnesses)
        }
    };
    if let Some(dir) = &a.witness_dir {
        fs::create_dir_all(dir)?;
        for (i, w) in witnesses.iter().enumerate() {
            fs::write(dir.join(format!("n{}-t{}-{i}.hg", a.n, a.t)), w.to_text())?;
        }
    }
    println!("{}", SearchResult::CSV_HEADER);
    println!("{row}");
    Ok(())
}

fn check(a: CheckArgs) -> Outcome {
    let h = read_hypergraph(&a.file)?;
    let pattern = TracePattern::new(a.t)?;
    let budget = match a.budget {
        Some(s) if !(s.is_finite() && s >= 0.0) => return Err(Failure::usage(format!("bad budget {s}"))),
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    match contains_trace_within(&h, pattern, budget) {
        Detection::Found(c) => print!("{c}"),
        Detection::Absent => println!("trace-free"),
        Detection::Timeout => {
            println!("timeout");
            return Err(Failure::usage("no answer within the time budget"));
        }
    }
    Ok(())
}

fn construct(c: Construct) -> Outcome {
    match c {
        Construct::Polarity { q, lift, out } => {
            let g = polarity_graph(q)?;
            let text = if lift {
                lift_to_trace_free(&g).to_text()
            } else {
                g.to_string()
            };
            emit(out.as_deref(), &text)
        }
        Construct::Greedy {
            n,
            t,
            seed,
            restarts,
            out,
        } => {
            let h = greedy_lower_bound_with(n, t, seed, restarts)?;
            emit(out.as_deref(), &h.to_text())
        }
    }
}

fn verify(a: VerifyArgs) -> Outcome {
    let h = read_hypergraph(&a.file)?;
    let report = lemma_report(&h, a.t, a.delta)?;
    print!("{}", report.to_json_lines());
    if report.is_clean() {
        return Ok(());
    }
    let pattern = TracePattern::new(a.t)?;
    if trace_turan::trace::contains_trace(&h, pattern).is_none() {
        return Err(Failure {
            code: 4,
            message: "check violated on a trace-free hypergraph".into(),
        });
    }
    Ok(())
}

fn bounds(a: BoundsArgs) -> Outcome {
    let choice = if a.clamped_g { GChoice::Clamped } else { GChoice::Paper };
    let rows = derivation_table_with(a.t.lo, a.t.hi, a.points, choice)?;
    match a.format {
        Format::Csv => print!("{}", derivation_csv(&rows)?),
        Format::JsonLines => {
            let g = move |t: f64| match choice {
                GChoice::Paper => trace_turan::bounds::paper_g(t),
                GChoice::Clamped => trace_turan::bounds::clamped_g(t),
            };
            for r in &rows {
                let t = r.t.round() as u64;
                let line = serde_json::json!({
                    "t": r.t,
                    "main": bound_main(a.n, t)?,
                    "k2t": evaluate_k2t(a.n, t, &g, if a.clamped_g { "clamped" } else { "paper" })?,
                    "derivation": r,
                });
                println!("{line}");
            }
        }
    }
    if rows.iter().any(|r| !r.holds) {
        return Err(Failure {
            code: 4,
            message: "derivation check failed on the grid".into(),
        });
    }
    Ok(())
}

fn ratio(a: RatioArgs) -> Outcome {
    let cfg = SearchConfig {
        threads: a.threads,
        ..SearchConfig::default()
    };
    let mut rows = Vec::new();
    for &t in &a.t {
        for n in a.n.integers()? {
            rows.push(RatioRow::from_search("search", &turan_search(n, t, &cfg)?));
        }
    }
    for &q in &a.polarity {
        let h = lift_to_trace_free(&polarity_graph(q)?);
        rows.push(RatioRow::new(format!("polarity-lift-{q}"), h.n(), 2, h.edge_count()));
    }
    print!("{}", ratio_table(&rows)?);
    Ok(())
}

fn cnf(a: CnfArgs) -> Outcome {
    let f = export_cnf(a.n, a.m, a.t, &a.out)?;
    println!("p cnf {} {}", f.num_vars, f.clauses.len());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Search(a) => search(a),
        Command::Check(a) => check(a),
        Command::Construct(c) => construct(c),
        Command::Verify(a) => verify(a),
        Command::Bounds(a) => bounds(a),
        Command::Ratio(a) => ratio(a),
        Command::Cnf(a) => cnf(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("trace-turan: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
