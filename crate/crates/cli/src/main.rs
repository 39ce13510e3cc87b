//! `intercol`: generate graphs, build and check interval edge-colorings,
//! report bounds and run the exhaustive search.
//!
//! Exit codes: 0 success, 1 invalid coloring or not colorable, 2 usage or
//! input error, 3 search budget exceeded.

mod commands;
mod input;
mod table;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "intercol",
    version,
    about = "Interval edge-colorings of graphs and their Cartesian products"
)]
struct Cli {
    /// Worker threads for parallel search (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Human-readable table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member as graph JSON, e.g. `gen torus 4 4`.
    Gen {
        /// Family name or full descriptor (`cycle:8`, `c:4xk:2`).
        family: String,
        params: Vec<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Cartesian product of two graphs (files or descriptors).
    Product {
        g: String,
        h: String,
        #[command(flatten)]
        out: Output,
    },
    /// Build an interval coloring with an explicit construction.
    Color(ColorArgs),
    /// Check a coloring; exit 0 iff it is an interval coloring.
    Verify {
        graph: String,
        coloring: PathBuf,
        /// Also check separability around this root vertex label.
        #[arg(long)]
        separable: Option<String>,
        /// Do not require every color of the palette to be used.
        #[arg(long)]
        relaxed: bool,
    },
    /// Closed-form bounds and obstructions for a family or product.
    Bounds {
        /// Family name or descriptor, e.g. `torus 4 4` or `cycle:8xk:2`.
        family: String,
        params: Vec<usize>,
        /// Largest edge count for the exact chromatic index test.
        #[arg(long, default_value_t = intercol::bounds::DEFAULT_EDGE_BUDGET)]
        edge_budget: usize,
    },
    /// Exhaustive search for interval colorings.
    Search(SearchArgs),
    /// DOT rendering of a graph, with colors as edge labels when given.
    Export {
        graph: String,
        coloring: Option<PathBuf>,
        /// DOT output (the only format; accepted for clarity).
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write to a file instead of stdout.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Maximum product coloring: `G H`.
    ProductMax,
    /// Product from a separable coloring: `SPEC H`, SPEC as for the
    /// single-family methods (`cycle:4`, `kmn:3,3`, ...).
    SeparableProduct,
    /// Separable coloring of `C_{2n}`: `n`.
    Cycle,
    /// Separable coloring of a caterpillar: leaf counts.
    Caterpillar,
    /// Separable coloring of `K_{m,n}`: `m n`.
    Kmn,
    /// Maximum separable coloring of `Q_n`: `n`.
    HypercubeMax,
    /// Minimum coloring of the Fibonacci cube: `n`.
    FibMin,
    /// `(n+1)`-coloring of the Fibonacci cube: `n`.
    FibPlus,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long, value_enum)]
    method: Method,
    /// Method arguments.
    args: Vec<String>,
    /// Coloring of the first factor (product-max), instead of the built-in one.
    #[arg(long)]
    g_coloring: Option<PathBuf>,
    /// Coloring of the second factor, instead of the built-in one.
    #[arg(long)]
    h_coloring: Option<PathBuf>,
    /// Also write the colored graph as JSON.
    #[arg(long)]
    graph_out: Option<PathBuf>,
    #[command(flatten)]
    out: Output,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct Budget {
    /// Node budget for searches.
    #[arg(long, env = intercol::oracle::BUDGET_ENV, default_value_t = intercol::oracle::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct SearchArgs {
    graph: String,
    /// Decide a single palette size.
    #[arg(long, conflicts_with = "spectrum")]
    t: Option<u32>,
    /// Every palette size from the maximum degree up to the upper bound.
    #[arg(long)]
    spectrum: bool,
    /// Largest palette tried by --spectrum.
    #[arg(long)]
    t_max: Option<u32>,
    #[command(flatten)]
    budget: Budget,
    /// Disable interval propagation (plain backtracking).
    #[arg(long)]
    no_pruning: bool,
    /// Fix the first edge to the lower half of the palette.
    #[arg(long)]
    symmetry: bool,
    #[command(flatten)]
    out: Output,
}

/// Error carrying the process exit code.
#[derive(Debug)]
pub struct Exit {
    code: u8,
    message: String,
}

impl Exit {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Exit {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for Exit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Exit {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(cli.command, cli.table) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = e.downcast_ref::<Exit>().map_or(2, |x| x.code);
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
