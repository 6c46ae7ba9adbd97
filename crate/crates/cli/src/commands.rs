use std::io::Read;

use condiam_core::altpoly::{alternating_polynomial, AlternatingPolynomial};
use condiam_core::bounds::{
    corollary_threshold, regular_separated_size, threshold_general, Corollary, SeparatorReport,
};
use condiam_core::graph::{generate, parse_dimacs, parse_edge_list, Family};
use condiam_core::oracle::{standard_queries, verify_soundness, Oracle, OracleLimits, SoundnessConfig, DEFAULT_MAX_N};
use condiam_core::spectral::{extract_mesh, graph_spectrum, MeshSide, SpectralError};
use condiam_core::{BoundQuery, Graph, MatrixKind, PolynomialTable, SpectralMesh};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::args::{AltpolyArgs, CertifyArgs, DegreeSelection, GraphSource, InputFormat, SpectrumArgs, VerifyArgs};
use crate::error::{CliError, EXIT_VIOLATION};
use crate::report::{
    CertificateEntry, DegreeCount, GraphCheck, GraphSummary, InputInfo, MeshSection, PolynomialRow, PolynomialSection,
    QueryCheck, Report, SeparatorEntry, SpectrumSection, Verification, VerificationTotals,
};

/// A finished command: the report and the process exit status.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome { report, exit_code: 0 }
    }
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Reads or generates the graph named by `source`.
pub fn load_graph(source: &GraphSource) -> Result<(Graph, InputInfo), CliError> {
    if let Some(family) = source.family {
        let n = match (family, source.n) {
            (_, Some(n)) => n,
            (Family::Petersen, None) => 10,
            _ => return Err(CliError::input("--family needs --n")),
        };
        let g = generate(family, n, source.seed)?;
        let canonical = format!("family={family:?};n={n};seed={}", source.seed);
        let info = InputInfo {
            source: canonical.clone(),
            sha256: digest(canonical.as_bytes()),
        };
        return Ok((g, info));
    }
    let Some(path) = &source.input else {
        return Err(CliError::input(
            "no graph given: pass a file, `-` for stdin, or --family",
        ));
    };
    let mut bytes = Vec::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_end(&mut bytes)?;
    } else {
        bytes = std::fs::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    }
    let text = String::from_utf8(bytes).map_err(|_| CliError::input("input is not UTF-8"))?;
    let g = match source.format {
        InputFormat::Edgelist => parse_edge_list(&text)?,
        InputFormat::Dimacs => parse_dimacs(&text)?,
    };
    Ok((
        g,
        InputInfo {
            source: path.display().to_string(),
            sha256: digest(text.as_bytes()),
        },
    ))
}

pub fn graph_summary(g: &Graph) -> GraphSummary {
    GraphSummary {
        n: g.n(),
        m: g.m(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        regular: g.is_regular(),
        degree_histogram: g
            .degree_histogram()
            .into_iter()
            .map(|(degree, count)| DegreeCount { degree, count })
            .collect(),
    }
}

fn mesh_section(mesh: &SpectralMesh) -> MeshSection {
    MeshSection {
        side: mesh.side(),
        eval_point: mesh.eval_point(),
        points: mesh.points().to_vec(),
    }
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(CliError::input(format!("--dedup-tol must be positive, got {tol}")))
    }
}

pub fn cmd_spectrum(args: &SpectrumArgs) -> Result<Outcome, CliError> {
    check_tol(args.dedup_tol)?;
    let (g, input) = load_graph(&args.source)?;
    let spectrum = graph_spectrum(&g, args.matrix)?;
    let mesh = match extract_mesh(&spectrum, args.dedup_tol) {
        Ok(mesh) => Some(mesh_section(&mesh)),
        Err(SpectralError::UnsupportedKind(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let mut report = Report::new("spectrum", input);
    report.graph = Some(graph_summary(&g));
    report.spectrum = Some(SpectrumSection {
        matrix: args.matrix,
        eigenvalues: spectrum.values().to_vec(),
        dedup_tol: args.dedup_tol,
        mesh,
    });
    Ok(Outcome::ok(report))
}

fn side_for(kind: MatrixKind) -> Result<(MeshSide, f64), CliError> {
    match kind {
        MatrixKind::DegreeAdjacency => Ok((MeshSide::Above, 1.0)),
        MatrixKind::ChungLaplacian => Ok((MeshSide::Below, 0.0)),
        MatrixKind::StandardAdjacency => Err(CliError::input(
            "the standard adjacency matrix has no fixed Perron value; use degree-adjacency or laplacian",
        )),
    }
}

/// Parses "a, b, c" into numbers.
pub fn parse_mesh_literal(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| CliError::input(format!("--mesh: `{s}` is not a number")))
        })
        .collect()
}

fn polynomial_row(p: &AlternatingPolynomial) -> PolynomialRow {
    PolynomialRow {
        k: p.degree(),
        value: p.extremal_value(),
        method: p.method(),
        sup_norm: p.sup_norm(),
        alternation_length: p.alternation_length(),
        certified: p.is_certified(),
        values_at_mesh: p.values_at_mesh().to_vec(),
    }
}

pub fn cmd_altpoly(args: &AltpolyArgs) -> Result<Outcome, CliError> {
    check_tol(args.dedup_tol)?;
    let (side, default_eval) = side_for(args.matrix)?;
    let eval = args.eval.unwrap_or(default_eval);
    let mut report;
    let mesh = match &args.mesh {
        Some(text) => {
            let values = parse_mesh_literal(text)?;
            report = Report::new(
                "altpoly",
                InputInfo {
                    source: "mesh".into(),
                    sha256: digest(text.as_bytes()),
                },
            );
            let mesh = SpectralMesh::from_literal(args.matrix, side, eval, &values, args.dedup_tol)?;
            report.spectrum = Some(SpectrumSection {
                matrix: args.matrix,
                eigenvalues: Vec::new(),
                dedup_tol: args.dedup_tol,
                mesh: Some(mesh_section(&mesh)),
            });
            mesh
        }
        None => {
            let (g, input) = load_graph(&args.source)?;
            report = Report::new("altpoly", input);
            let spectrum = graph_spectrum(&g, args.matrix)?;
            let mesh = extract_mesh(&spectrum, args.dedup_tol)?.with_eval_point(eval)?;
            report.graph = Some(graph_summary(&g));
            report.spectrum = Some(SpectrumSection {
                matrix: args.matrix,
                eigenvalues: spectrum.values().to_vec(),
                dedup_tol: args.dedup_tol,
                mesh: Some(mesh_section(&mesh)),
            });
            mesh
        }
    };
    let degrees: Vec<usize> = match args.k {
        DegreeSelection::All => (0..mesh.len()).collect(),
        DegreeSelection::One(k) => vec![k],
    };
    let rows = degrees
        .into_iter()
        .map(|k| alternating_polynomial(&mesh, k).map(|p| polynomial_row(&p)))
        .collect::<Result<Vec<_>, _>>()?;
    report.polynomials = Some(PolynomialSection {
        matrix: args.matrix,
        eval_point: eval,
        mesh_size: mesh.len(),
        complete: args.k == DegreeSelection::All,
        rows,
    });
    Ok(Outcome::ok(report))
}

/// Query i from the i-th occurrence of each flag; see `CertifyArgs::alpha`.
pub fn query_groups(args: &CertifyArgs) -> Result<Vec<BoundQuery>, CliError> {
    let count = args.alpha.len();
    let pick = |name: &str, v: &[usize], i: usize, default: usize| -> Result<usize, CliError> {
        match v.len() {
            0 => Ok(default),
            1 => Ok(v[0]),
            len if len == count => Ok(v[i]),
            len => Err(CliError::input(format!(
                "--{name} given {len} times for {count} --alpha values"
            ))),
        }
    };
    if count == 0 && !(args.beta.is_empty() && args.s.is_empty() && args.t.is_empty()) {
        return Err(CliError::input("--beta, --s and --t need --alpha"));
    }
    (0..count)
        .map(|i| {
            let alpha = args.alpha[i];
            Ok(BoundQuery::new(
                alpha,
                pick("beta", &args.beta, i, alpha)?,
                pick("s", &args.s, i, 1)?,
                pick("t", &args.t, i, 1)?,
            ))
        })
        .collect()
}

fn parse_pair(text: &str, what: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::input(format!("{what}: expected two integers `x,y`, got `{text}`"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

/// Expands one --corollary value on `g`.
pub fn parse_corollary(text: &str, g: &Graph) -> Result<Vec<Corollary>, CliError> {
    let (tag, arg) = match text.split_once('=') {
        Some((tag, arg)) => (tag, Some(arg)),
        None => (text, None),
    };
    let which = match (tag, arg) {
        ("a", None) => g
            .realized_degrees()
            .into_iter()
            .map(|alpha| Corollary::SameDegree { alpha })
            .collect(),
        ("a", Some(a)) => {
            let alpha = a
                .trim()
                .parse()
                .map_err(|_| CliError::input(format!("--corollary a={a}: not a degree")))?;
            vec![Corollary::SameDegree { alpha }]
        }
        ("b", None) => vec![Corollary::StandardDiameter],
        ("c", None) => vec![Corollary::RegularDiameter],
        ("d", None) => vec![Corollary::UnicyclicDiameter],
        ("e", None) => vec![Corollary::RegularSetDiameter { s: 1, t: 1 }],
        ("e", Some(st)) => {
            let (s, t) = parse_pair(st, "--corollary e")?;
            vec![Corollary::RegularSetDiameter { s, t }]
        }
        _ => {
            return Err(CliError::input(format!(
                "unknown corollary `{text}` (a[=α], b, c, d, e[=s,t])"
            )))
        }
    };
    Ok(which)
}

fn corollary_label(c: Corollary) -> String {
    match c {
        Corollary::SameDegree { alpha } => format!("corollary a (alpha={alpha})"),
        Corollary::StandardDiameter => "corollary b".into(),
        Corollary::RegularDiameter => "corollary c".into(),
        Corollary::UnicyclicDiameter => "corollary d".into(),
        Corollary::RegularSetDiameter { s, t } => format!("corollary e (s={s}, t={t})"),
    }
}

fn query_label(q: &BoundQuery) -> String {
    format!("D^({},{})_({},{})", q.alpha, q.beta, q.s, q.t)
}

pub fn cmd_certify(args: &CertifyArgs) -> Result<Outcome, CliError> {
    check_tol(args.dedup_tol)?;
    if !(args.margin >= 0.0 && args.margin.is_finite()) {
        return Err(CliError::input(format!(
            "--margin must be a nonnegative number, got {}",
            args.margin
        )));
    }
    side_for(args.matrix)?;
    let (g, input) = load_graph(&args.source)?;
    let mut queries = query_groups(args)?;
    let mut corollaries = Vec::new();
    for text in &args.corollary {
        corollaries.extend(parse_corollary(text, &g)?);
    }
    let separators = args
        .separator
        .iter()
        .map(|s| parse_pair(s, "--separator"))
        .collect::<Result<Vec<_>, _>>()?;
    if queries.is_empty() && corollaries.is_empty() && separators.is_empty() {
        corollaries.push(Corollary::StandardDiameter);
        let degrees = g.realized_degrees();
        for (i, &alpha) in degrees.iter().enumerate() {
            for &beta in &degrees[i..] {
                queries.push(BoundQuery::new(alpha, beta, 1, 1));
            }
        }
    }

    // thresholds first, so a bad query fails before any linear program runs
    let mut cap: f64 = 0.0;
    for q in &queries {
        q.validate(&g)?;
        if !q.is_vacuous(&g) {
            cap = cap.max(threshold_general(g.m(), q)?);
        }
    }
    for &c in &corollaries {
        cap = cap.max(corollary_threshold(&g, c)?);
    }
    for &(alpha, _) in &separators {
        if alpha == 0 {
            return Err(CliError::input("--separator: alpha must be at least 1"));
        }
    }
    let min_k = separators.iter().map(|&(_, k)| k).max().unwrap_or(0);
    let table = PolynomialTable::for_graph_capped(&g, args.matrix, args.dedup_tol, cap + args.margin, min_k)?;
    let b = table.mesh.len();

    let oracle = if args.exact {
        Some(Oracle::new(&g, OracleLimits::default())?)
    } else {
        None
    };
    let mut report = Report::new("certify", input);
    for q in &queries {
        let certificate = table.certify(&g, *q, args.margin)?;
        let exact = match &oracle {
            Some(o) if !certificate.vacuous => Some(o.conditional_diameter(q)?),
            _ => None,
        };
        report.certificates.push(CertificateEntry {
            label: query_label(q),
            certificate,
            exact,
        });
    }
    for &c in &corollaries {
        let certificate = table.certify_corollary(&g, c, args.margin)?;
        let exact = match &oracle {
            Some(o) => Some(o.conditional_diameter(&c.as_query(&g))?),
            None => None,
        };
        report.certificates.push(CertificateEntry {
            label: corollary_label(c),
            certificate,
            exact,
        });
    }
    for &(alpha, k) in &separators {
        if k >= b {
            return Err(CliError::input(format!(
                "--separator: k={k} out of range, mesh has {b} points (k <= {})",
                b - 1
            )));
        }
        let pk = table.values[k];
        let (exact_separated_size, exact_separator) = match &oracle {
            Some(o) => (
                Some(o.max_separated_size(alpha, k)?.value),
                o.vertex_separator(alpha, k)?,
            ),
            None => (None, None),
        };
        report.separators.push(SeparatorEntry {
            bound: SeparatorReport::new(g.n(), g.m(), alpha, k, pk),
            regular_separated_size: g.is_regular().then(|| regular_separated_size(g.n(), pk)),
            exact_separated_size,
            exact_separator,
        });
    }
    report.graph = Some(graph_summary(&g));
    report.spectrum = Some(SpectrumSection {
        matrix: args.matrix,
        eigenvalues: table.spectrum.values().to_vec(),
        dedup_tol: args.dedup_tol,
        mesh: Some(mesh_section(&table.mesh)),
    });
    report.polynomials = Some(PolynomialSection {
        matrix: args.matrix,
        eval_point: table.mesh.eval_point(),
        mesh_size: b,
        complete: table.complete,
        rows: table
            .polynomials
            .iter()
            .map(|p| PolynomialRow {
                values_at_mesh: Vec::new(),
                ..polynomial_row(p)
            })
            .collect(),
    });
    Ok(Outcome::ok(report))
}

/// Parses `a..b` (inclusive) or a single seed.
pub fn parse_seed_range(text: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::input(format!("--seeds: expected `a..b` or a single seed, got `{text}`"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let s = text.trim().parse().map_err(|_| bad())?;
            (s, s)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// The random connected graph checked for `seed`: orders cycle through 3..=max_n.
pub fn seeded_graph(seed: u64, max_n: usize) -> Result<Graph, CliError> {
    let span = (max_n - 2) as u64;
    let n = 3 + (seed.wrapping_mul(7919) % span) as usize;
    Ok(generate(Family::RandomConnected, n, seed)?)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    check_tol(args.dedup_tol)?;
    if !(args.margin >= 0.0 && args.margin.is_finite()) {
        return Err(CliError::input(format!(
            "--margin must be a nonnegative number, got {}",
            args.margin
        )));
    }
    if args.max_st == 0 {
        return Err(CliError::input("--max-st must be at least 1"));
    }
    let config = SoundnessConfig {
        margin: args.margin,
        dedup_tol: args.dedup_tol,
        set_pairs: args.pairs,
        separator_max_n: args.separator_max_n,
        ..SoundnessConfig::default()
    };
    let mut verification = Verification {
        max_st: args.max_st,
        margin: args.margin,
        set_pairs_per_graph: args.pairs,
        separator_max_n: args.separator_max_n,
        totals: VerificationTotals::default(),
        graphs: Vec::new(),
        queries: Vec::new(),
    };

    let mut report = if let Some(range) = &args.seeds {
        let (first, last) = parse_seed_range(range)?;
        if args.max_n > DEFAULT_MAX_N {
            return Err(CliError::input(format!(
                "oracle size guard: --max-n {} exceeds the exhaustive-search limit of {DEFAULT_MAX_N} vertices",
                args.max_n
            )));
        }
        if args.max_n < 3 {
            return Err(CliError::input("--max-n must be at least 3"));
        }
        let run = || {
            (first..=last)
                .into_par_iter()
                .map(|seed| {
                    let g = seeded_graph(seed, args.max_n)?;
                    let report = verify_soundness(&g, &standard_queries(&g, args.max_st), &config)?;
                    Ok(GraphCheck {
                        seed: Some(seed),
                        report,
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()
        };
        verification.graphs = match args.threads {
            Some(threads) => rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build()
                .map_err(|e| CliError::input(format!("--threads: {e}")))?
                .install(run)?,
            None => run()?,
        };
        let canonical = format!(
            "seeds={first}..{last};max-n={};max-st={};pairs={};separator-max-n={};margin={};dedup-tol={}",
            args.max_n, args.max_st, args.pairs, args.separator_max_n, args.margin, args.dedup_tol
        );
        Report::new(
            "verify",
            InputInfo {
                source: format!("seeds {first}..{last}"),
                sha256: digest(canonical.as_bytes()),
            },
        )
    } else {
        let (g, input) = load_graph(&args.source)?;
        if g.n() > DEFAULT_MAX_N {
            return Err(CliError::input(format!(
                "oracle size guard: graph has {} vertices, exhaustive-search limit is {DEFAULT_MAX_N}",
                g.n()
            )));
        }
        let queries = standard_queries(&g, args.max_st);
        let soundness = verify_soundness(&g, &queries, &config)?;
        verification.queries = query_table(&g, &queries, args)?;
        verification.graphs.push(GraphCheck {
            seed: None,
            report: soundness,
        });
        let mut report = Report::new("verify", input);
        report.graph = Some(graph_summary(&g));
        report
    };
    for check in &verification.graphs {
        verification.totals.add(&check.report);
    }
    let exit_code = if verification.totals.violations > 0 {
        EXIT_VIOLATION
    } else {
        0
    };
    report.verification = Some(verification);
    Ok(Outcome { report, exit_code })
}

fn query_table(g: &Graph, queries: &[BoundQuery], args: &VerifyArgs) -> Result<Vec<QueryCheck>, CliError> {
    let oracle = Oracle::new(g, OracleLimits::default())?;
    let adjacency = PolynomialTable::for_graph(g, MatrixKind::DegreeAdjacency, args.dedup_tol)?;
    let laplacian = PolynomialTable::for_graph(g, MatrixKind::ChungLaplacian, args.dedup_tol)?;
    queries
        .iter()
        .map(|q| {
            let a = adjacency.certify(g, *q, args.margin)?;
            let l = laplacian.certify(g, *q, args.margin)?;
            let exact = if a.vacuous {
                None
            } else {
                Some(oracle.conditional_diameter(q)?.value)
            };
            Ok(QueryCheck {
                query: *q,
                threshold: a.threshold,
                exact,
                adjacency_min_k: a.min_certified_k,
                laplacian_min_k: l.min_certified_k,
            })
        })
        .collect()
}
