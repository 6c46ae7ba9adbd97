//! The JSON report and its plain-text rendering.
//!
//! Sections absent for a command are omitted rather than null. Floats are written by
//! serde_json's shortest round-trip formatting, so every value is exact. Wall-clock
//! timings never enter the report; they go to stderr, keeping the JSON reproducible.

use std::fmt::Write as _;

use condiam_core::altpoly::SolveMethod;
use condiam_core::bounds::{BoundCertificate, SeparatorReport};
use condiam_core::oracle::{ExactResult, SeparatorResult, SoundnessReport};
use condiam_core::spectral::MeshSide;
use condiam_core::{BoundQuery, MatrixKind};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: Tool,
    pub command: &'static str,
    pub input: InputInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomials: Option<PolynomialSection>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CertificateEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub separators: Vec<SeparatorEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

impl Report {
    pub fn new(command: &'static str, input: InputInfo) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            tool: Tool::current(),
            command,
            input,
            graph: None,
            spectrum: None,
            polynomials: None,
            certificates: Vec::new(),
            separators: Vec::new(),
            verification: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report types serialize infallibly")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

impl Tool {
    pub fn current() -> Self {
        Tool {
            name: "condiam",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

/// What was read, and the SHA-256 of its bytes (or of a canonical description for
/// generated input).
#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub source: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeCount {
    pub degree: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular: bool,
    pub degree_histogram: Vec<DegreeCount>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumSection {
    pub matrix: MatrixKind,
    /// Empty when the mesh was given literally.
    pub eigenvalues: Vec<f64>,
    pub dedup_tol: f64,
    /// Absent for the standard adjacency matrix, which has no fixed Perron value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mesh: Option<MeshSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MeshSection {
    pub side: MeshSide,
    pub eval_point: f64,
    pub points: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolynomialSection {
    pub matrix: MatrixKind,
    pub eval_point: f64,
    pub mesh_size: usize,
    /// False when only some k were computed: a single `--k`, or a certify table that
    /// stopped once every threshold was exceeded.
    pub complete: bool,
    pub rows: Vec<PolynomialRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolynomialRow {
    pub k: usize,
    pub value: f64,
    pub method: SolveMethod,
    pub sup_norm: f64,
    pub alternation_length: usize,
    pub certified: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values_at_mesh: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateEntry {
    pub label: String,
    #[serde(flatten)]
    pub certificate: BoundCertificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeparatorEntry {
    #[serde(flatten)]
    pub bound: SeparatorReport,
    /// ⌊n/(P_k + 1)⌋, regular graphs only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular_separated_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_separated_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_separator: Option<SeparatorResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub max_st: usize,
    pub margin: f64,
    pub set_pairs_per_graph: usize,
    pub separator_max_n: usize,
    pub totals: VerificationTotals,
    pub graphs: Vec<GraphCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub queries: Vec<QueryCheck>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationTotals {
    pub graphs: usize,
    pub queries: usize,
    pub vacuous_queries: usize,
    pub certified_queries: usize,
    pub set_pairs: usize,
    pub separator_checks: usize,
    pub violations: usize,
}

impl VerificationTotals {
    pub fn add(&mut self, r: &SoundnessReport) {
        self.graphs += 1;
        self.queries += r.queries;
        self.vacuous_queries += r.vacuous_queries;
        self.certified_queries += r.certified_queries;
        self.set_pairs += r.set_pairs;
        self.separator_checks += r.separator_checks;
        self.violations += r.violations.len();
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphCheck {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub report: SoundnessReport,
}

/// One row of the single-graph table: both certificates next to the exact value.
#[derive(Debug, Clone, Serialize)]
pub struct QueryCheck {
    pub query: BoundQuery,
    pub threshold: Option<f64>,
    pub exact: Option<usize>,
    pub adjacency_min_k: Option<usize>,
    pub laplacian_min_k: Option<usize>,
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn list(values: &[f64]) -> String {
    values.iter().map(|v| format!("{v:.10}")).collect::<Vec<_>>().join(", ")
}

/// Human-readable rendering of whichever sections are present.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let w = &mut out;
    if let Some(g) = &r.graph {
        let hist: Vec<String> = g
            .degree_histogram
            .iter()
            .map(|d| format!("{}x{}", d.count, d.degree))
            .collect();
        let _ = writeln!(
            w,
            "graph: n={} m={} degrees {} ({})",
            g.n,
            g.m,
            hist.join(" "),
            if g.regular { "regular" } else { "irregular" }
        );
    }
    if let Some(s) = &r.spectrum {
        if !s.eigenvalues.is_empty() {
            let _ = writeln!(w, "{} eigenvalues: {}", s.matrix.name(), list(&s.eigenvalues));
        }
        if let Some(mesh) = &s.mesh {
            let _ = writeln!(
                w,
                "mesh ({} points, eval {}): {}",
                mesh.points.len(),
                mesh.eval_point,
                list(&mesh.points)
            );
        }
    }
    if let Some(p) = &r.polynomials {
        let _ = writeln!(
            w,
            "{:>4}  {:>24}  {:>12}  {:>5}  certified",
            "k",
            format!("P_k({})", p.eval_point),
            "method",
            "alt"
        );
        for row in &p.rows {
            let method = serde_json::to_value(row.method)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default();
            let _ = writeln!(
                w,
                "{:>4}  {:>24.12}  {:>12}  {:>5}  {}",
                row.k, row.value, method, row.alternation_length, row.certified
            );
        }
        if !p.complete {
            let _ = writeln!(w, "(partial table: only the rows shown were computed)");
        }
    }
    for c in &r.certificates {
        let cert = &c.certificate;
        let verdict = if cert.vacuous {
            "vacuous (not enough eligible vertices)".to_string()
        } else {
            match cert.min_certified_k {
                Some(k) => format!("certified <= {k}"),
                None => "uncertified".to_string(),
            }
        };
        let _ = write!(w, "{}: threshold {}  {}", c.label, opt(cert.threshold), verdict);
        if let Some(e) = &c.exact {
            let _ = write!(w, "  exact {}", e.value);
        }
        let _ = writeln!(w);
    }
    for s in &r.separators {
        let b = &s.bound;
        let _ = write!(
            w,
            "separator alpha={} k={}: P_k={:.10}  separated sets have size <= {}  separator >= {}",
            b.alpha, b.k, b.pk_value, b.max_separated_set_size, b.separator_lower_bound
        );
        if let Some(v) = s.regular_separated_size {
            let _ = write!(w, "  regular bound {v}");
        }
        if let Some(v) = s.exact_separated_size {
            let _ = write!(w, "  exact size {v}");
        }
        if let Some(sep) = &s.exact_separator {
            let _ = write!(w, "  exact separator {}", sep.separator_size);
        }
        let _ = writeln!(w);
    }
    if let Some(v) = &r.verification {
        if !v.queries.is_empty() {
            let _ = writeln!(
                w,
                "{:>16}  {:>14}  {:>6}  {:>9}  {:>9}",
                "(a,b,s,t)", "threshold", "exact", "adj k", "lap k"
            );
            for q in &v.queries {
                let label = format!("({},{},{},{})", q.query.alpha, q.query.beta, q.query.s, q.query.t);
                let thr = q.threshold.map_or("-".to_string(), |t| format!("{t:.6}"));
                let _ = writeln!(
                    w,
                    "{label:>16}  {thr:>14}  {:>6}  {:>9}  {:>9}",
                    opt(q.exact),
                    opt(q.adjacency_min_k),
                    opt(q.laplacian_min_k)
                );
            }
        }
        for g in &v.graphs {
            for viol in &g.report.violations {
                let _ = writeln!(w, "VIOLATION seed={} {:?}", opt(g.seed), viol);
            }
        }
        let t = &v.totals;
        let _ = writeln!(
            w,
            "{} graphs, {} queries ({} vacuous, {} certified), {} set pairs, {} separator checks: {} violations",
            t.graphs, t.queries, t.vacuous_queries, t.certified_queries, t.set_pairs, t.separator_checks, t.violations
        );
    }
    out
}
