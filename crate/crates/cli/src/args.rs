use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "skewbetti",
    version,
    about = "Graded Betti numbers of skew Ferrers graphs and closed graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Coefficient field for homology computations.
    #[arg(long, global = true, value_enum, default_value_t = FieldArg::Gf2)]
    pub field: FieldArg,
    /// Betti engine; defaults to nagel-reiner for diagrams, hochster for graphs.
    #[arg(long, global = true, value_enum)]
    pub method: Option<MethodArg>,
    /// Print one JSON document on standard output instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for the homology engine (0 = all cores).
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Refuse homology computations on graphs with more vertices than this.
    #[arg(long, global = true, default_value_t = 14)]
    pub max_vertices: usize,
    /// Also run every other applicable engine and compare.
    #[arg(long, global = true)]
    pub crosscheck: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Work with the skew Ferrers diagram of (lambda, mu).
    Ferrers {
        /// Row lengths, nonincreasing, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u32>,
        /// Removed prefix lengths, nonincreasing; zeros if omitted.
        #[arg(long, value_delimiter = ',')]
        mu: Vec<u32>,
        #[arg(value_enum)]
        action: FerrersAction,
    },
    /// Work with an arbitrary simple graph.
    Graph {
        /// Edges such as `1-2,2-3` or `x1-y2`; `@path` reads one edge per line.
        #[arg(long)]
        edges: String,
        #[arg(value_enum)]
        action: GraphAction,
    },
    /// Closed-graph analysis and the initial ideal of its binomial edge ideal.
    Closed {
        #[arg(long)]
        edges: String,
        /// Vertices in label order (the first gets label 1).
        #[arg(long, value_delimiter = ',')]
        labeling: Option<Vec<String>>,
    },
    /// Cross-check the engines on seeded random skew Ferrers diagrams.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        max_rows: usize,
        #[arg(long, default_value_t = 4)]
        max_cols: usize,
        /// Checks to leave out; may be repeated.
        #[arg(long, value_enum)]
        skip: Vec<CheckKind>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Gf2,
    Rational,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Hochster,
    NagelReiner,
    CorsoNagel,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FerrersAction {
    Decompose,
    Betti,
    Pdreg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphAction {
    Betti,
    Nu,
    Blocks,
}

/// Invariants checked by the fuzzer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum CheckKind {
    /// GF(2) and rational homology give the same table.
    FieldsAgree,
    /// Homology table equals the spherical-restriction count.
    OracleMatchesCounting,
    /// The column at pd has a single nonzero degree, pd + reg.
    LastColumnConcentrated,
    /// pd + 2 >= reg, and at equality beta_pd counts maximum induced matchings.
    MatchingBound,
    /// Rectangularity equals the induced matching number.
    RectEqualsNu,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::FieldsAgree,
        CheckKind::OracleMatchesCounting,
        CheckKind::LastColumnConcentrated,
        CheckKind::MatchingBound,
        CheckKind::RectEqualsNu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::FieldsAgree => "fields-agree",
            CheckKind::OracleMatchesCounting => "oracle-matches-counting",
            CheckKind::LastColumnConcentrated => "last-column-concentrated",
            CheckKind::MatchingBound => "matching-bound",
            CheckKind::RectEqualsNu => "rect-equals-nu",
        }
    }
}
