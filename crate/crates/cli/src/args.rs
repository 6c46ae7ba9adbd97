use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use condiam_core::graph::Family;
use condiam_core::spectral::DEFAULT_DEDUP_TOL;
use condiam_core::MatrixKind;

#[derive(Debug, Parser)]
#[command(
    name = "condiam",
    version,
    about = "Spectral certificates for conditional diameters and vertex separators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit the JSON report on stdout instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues and eigenvalue mesh of a graph matrix.
    Spectrum(SpectrumArgs),
    /// k-alternating polynomials of a graph mesh or a literal mesh.
    Altpoly(AltpolyArgs),
    /// Spectral bounds for conditional diameters and separators.
    Certify(CertifyArgs),
    /// Check every certificate against exact enumeration.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Dimacs,
}

/// Where the graph comes from: a file (or `-` for stdin), or a generator.
#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    /// Graph file; `-` reads stdin.
    pub input: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    pub format: InputFormat,

    /// Generate a graph instead: cycle, path, complete, star, petersen, random.
    #[arg(long, conflicts_with = "input")]
    pub family: Option<Family>,

    /// Order of the generated graph (petersen defaults to 10).
    #[arg(long, requires = "family")]
    pub n: Option<usize>,

    /// Seed for `--family random`.
    #[arg(long, default_value_t = 0, requires = "family")]
    pub seed: u64,
}

impl GraphSource {
    pub fn is_given(&self) -> bool {
        self.input.is_some() || self.family.is_some()
    }
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// degree-adjacency, laplacian or standard.
    #[arg(long, default_value = "degree-adjacency")]
    pub matrix: MatrixKind,

    /// Eigenvalues closer than this are merged into one mesh point.
    #[arg(long, default_value_t = DEFAULT_DEDUP_TOL)]
    pub dedup_tol: f64,
}

/// `all` or a single degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeSelection {
    All,
    One(usize),
}

impl std::str::FromStr for DegreeSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(DegreeSelection::All);
        }
        s.parse()
            .map(DegreeSelection::One)
            .map_err(|_| format!("expected `all` or a degree, got `{s}`"))
    }
}

#[derive(Debug, Clone, Args)]
pub struct AltpolyArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Comma-separated eigenvalues used instead of a graph. Entries equal to the
    /// evaluation point are dropped and repeats merged.
    #[arg(long, conflicts_with_all = ["input", "family"], allow_hyphen_values = true)]
    pub mesh: Option<String>,

    #[arg(long, default_value = "degree-adjacency")]
    pub matrix: MatrixKind,

    #[arg(long, default_value = "all")]
    pub k: DegreeSelection,

    /// Evaluation point; defaults to 1, or 0 for the Laplacian.
    #[arg(long, allow_hyphen_values = true)]
    pub eval: Option<f64>,

    #[arg(long, default_value_t = DEFAULT_DEDUP_TOL)]
    pub dedup_tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// degree-adjacency (P_k at 1) or laplacian (P_k at 0).
    #[arg(long, default_value = "degree-adjacency")]
    pub matrix: MatrixKind,

    #[arg(long, default_value_t = DEFAULT_DEDUP_TOL)]
    pub dedup_tol: f64,

    /// Minimum degree of the first set. Repeat to form several queries; the i-th
    /// --alpha, --beta, --s and --t form query i. --beta defaults to --alpha, --s and
    /// --t to 1, and a flag given once applies to every query.
    #[arg(long)]
    pub alpha: Vec<usize>,

    #[arg(long)]
    pub beta: Vec<usize>,

    #[arg(long)]
    pub s: Vec<usize>,

    #[arg(long)]
    pub t: Vec<usize>,

    /// a[=α] same-degree diameter (every realized α if omitted), b standard diameter,
    /// c regular diameter, d unicyclic diameter, e[=s,t] regular (s,t)-diameter.
    #[arg(long)]
    pub corollary: Vec<String>,

    /// α,k: separated-set and vertex-separator bounds from P_k.
    #[arg(long)]
    pub separator: Vec<String>,

    /// Extra slack ε: certify only when P_k exceeds the threshold by more than ε.
    #[arg(long, default_value_t = 0.0)]
    pub margin: f64,

    /// Also compute exact values by enumeration (small graphs only).
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Inclusive seed range `a..b` (or one seed) of random connected graphs.
    #[arg(long, conflicts_with_all = ["input", "family"])]
    pub seeds: Option<String>,

    /// Largest order generated for seeded graphs; orders cycle through 3..=max-n.
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,

    /// Largest s and t in the query grid.
    #[arg(long, default_value_t = 3)]
    pub max_st: usize,

    #[arg(long, default_value_t = 0.0)]
    pub margin: f64,

    /// Random set pairs per graph for the set-profile bound.
    #[arg(long, default_value_t = 20)]
    pub pairs: usize,

    /// Separator bounds are checked by brute force up to this order.
    #[arg(long, default_value_t = 10)]
    pub separator_max_n: usize,

    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,

    #[arg(long, default_value_t = DEFAULT_DEDUP_TOL)]
    pub dedup_tol: f64,
}
