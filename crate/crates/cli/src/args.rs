use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "kblocks", version, about = "Find, certify and analyze k-blocks in graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Input graph (edge list or DIMACS); stdin when omitted.
    #[arg(short, long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(short, long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Output format. Defaults to text for `beta` and `gen`, json otherwise.
    #[arg(long, global = true)]
    pub format: Option<Format>,
    /// Seed for randomized generators and harnesses.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Work cap for the exhaustive oracle and analysis routines.
    #[arg(long, global = true, value_name = "N")]
    pub budget: Option<u64>,
    /// Worker threads for pair preprocessing.
    #[arg(long, global = true, value_name = "N")]
    pub parallel: Option<usize>,
    /// κ-table JSON file: read when present, written otherwise.
    #[arg(long, global = true, value_name = "FILE")]
    pub kappa_cache: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The k-blocks and the decomposition tree that found them.
    Blocks {
        #[arg(short)]
        k: usize,
    },
    /// The k-blocks for every k that has one.
    AllBlocks,
    /// Whether a k-block exists. Exits 0 if so, 3 if not.
    Decide {
        #[arg(short)]
        k: usize,
    },
    /// The block number: the largest k with a k-block.
    Beta,
    /// The block number and a decomposition of matching adhesion and width.
    Bw,
    /// A set of separations certifying that no k-block exists.
    Witness {
        #[arg(short)]
        k: usize,
    },
    /// Orients the separations of order below k towards a k-inseparable set.
    Tangle {
        #[arg(short)]
        k: usize,
        /// Comma-separated vertex labels; all vertices when omitted.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
    },
    /// Compares "every proper k-separation separates two (k+1)-blocks"
    /// with "no k-separation is T-shaped".
    Tshaped {
        #[arg(short)]
        k: usize,
    },
    /// Writes a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Checks a certificate against the input graph. Exits 3 if it is rejected.
    Verify(VerifyArgs),
    /// Compares the block finder with brute force. Exits 3 on a mismatch.
    OracleCheck {
        /// Single k to check; every k from 1 to n when omitted.
        #[arg(short)]
        k: Option<usize>,
    },
    /// The κ-table, or κ of one pair.
    Kappa {
        /// Two vertex labels.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Option<Vec<String>>,
    },
    /// Checks a degree theorem on the input graph, or on seeded samples.
    /// Exits 3 if any verdict is a violation.
    Theorem {
        #[arg(long)]
        name: String,
        #[arg(short)]
        k: usize,
        /// Check this many seeded random samples instead of the input graph.
        #[arg(long, value_name = "N")]
        samples: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Witness report (`k` and `witness` fields).
    #[arg(long, value_name = "FILE")]
    pub witness: Option<PathBuf>,
    /// Decomposition report (`k` and `decomposition` fields).
    #[arg(long, value_name = "FILE")]
    pub decomposition: Option<PathBuf>,
    /// κ-table report; every entry is recomputed.
    #[arg(long, value_name = "FILE")]
    pub kappa: Option<PathBuf>,
    /// Comma-separated labels claimed to be k-inseparable; needs `-k`.
    #[arg(long, value_delimiter = ',')]
    pub certificate: Option<Vec<String>>,
    /// The k for `--certificate` and `--decomposition`.
    #[arg(short)]
    pub k: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Petersen,
    Grid { rows: usize, cols: usize },
    /// Grid with k independent apex vertices on boundary arcs.
    Apex { k: usize, rows: usize, cols: usize },
    ParallelPaths { n: usize, k: usize },
    BlockTree { n: usize, k: usize, depth: usize },
    Ladder { squares: usize },
    LadderLex { k: usize, squares: usize },
    LadderCliques { k: usize, squares: usize },
    ComplementThreePaths,
    SubdividedComplete { n: usize },
    Gnp { n: usize, p: f64 },
    Regular { n: usize, d: usize },
}
