use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Oracle, OracleError, OracleLimits};
use crate::bounds::{
    max_separated_degree, max_separated_set_size, regular_separated_size, vertex_separator_lower_bound, BoundError,
    BoundQuery, PolynomialTable,
};
use crate::graph::{set_distance, Graph, VertexSet};
use crate::spectral::{MatrixKind, DEFAULT_DEDUP_TOL};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SoundnessConfig {
    pub margin: f64,
    pub dedup_tol: f64,
    /// Random (S, T) pairs checked against the set-profile threshold.
    pub set_pairs: usize,
    /// Largest set size used in random pairs.
    pub max_set_size: usize,
    pub seed: u64,
    /// Separated-set and separator bounds are checked only up to this order.
    pub separator_max_n: usize,
    pub limits: OracleLimits,
}

impl Default for SoundnessConfig {
    fn default() -> Self {
        SoundnessConfig {
            margin: 0.0,
            dedup_tol: DEFAULT_DEDUP_TOL,
            set_pairs: 20,
            max_set_size: 3,
            seed: 0,
            separator_max_n: 10,
            limits: OracleLimits::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Certified D^(α,β)_(s,t) ≤ k but the exact value is larger.
    Diameter(MatrixKind),
    /// Certified ∂(S, T) ≤ k for concrete sets that are farther apart.
    SetPair,
    /// Degree-adjacency and Laplacian certificates disagree.
    LaplacianMismatch,
    SeparatedSize,
    SeparatedDegree,
    RegularSeparatedSize,
    VertexSeparator,
}

/// One failed check, with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub query: Option<BoundQuery>,
    pub k: usize,
    /// None for a Laplacian mismatch, which compares two certificates.
    pub pk_value: Option<f64>,
    pub threshold: Option<f64>,
    /// The spectral claim: a diameter bound k, or an upper/lower size bound.
    pub claimed: usize,
    pub exact: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SoundnessReport {
    pub n: usize,
    pub m: usize,
    pub mesh_size: usize,
    pub queries: usize,
    pub vacuous_queries: usize,
    pub certified_queries: usize,
    pub set_pairs: usize,
    pub separator_checks: usize,
    pub violations: Vec<Violation>,
}

impl SoundnessReport {
    pub fn is_sound(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SoundnessError {
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Every (α, β, s, t) with α, β over realized degrees and s, t ≤ `max_st` (and ≤ n).
pub fn standard_queries(g: &Graph, max_st: usize) -> Vec<BoundQuery> {
    let degrees = g.realized_degrees();
    let sizes = 1..=max_st.min(g.n());
    let mut out = Vec::new();
    for &alpha in &degrees {
        for &beta in &degrees {
            for s in sizes.clone() {
                for t in sizes.clone() {
                    out.push(BoundQuery::new(alpha, beta, s, t));
                }
            }
        }
    }
    out
}

/// Checks every spectral claim on `g` against exact values.
///
/// For each query, both the degree-adjacency certificate at 1 and the Laplacian
/// certificate at 0 are compared with the exact conditional diameter for every k.
/// Random set pairs exercise the set-profile threshold. On graphs up to
/// `separator_max_n` vertices the separated-set floors and the vertex-separator lower
/// bound are compared with brute force for every α and k.
pub fn verify_soundness(
    g: &Graph,
    queries: &[BoundQuery],
    config: &SoundnessConfig,
) -> Result<SoundnessReport, SoundnessError> {
    let oracle = Oracle::new(g, config.limits)?;
    let adjacency = PolynomialTable::for_graph(g, MatrixKind::DegreeAdjacency, config.dedup_tol)?;
    let laplacian = PolynomialTable::for_graph(g, MatrixKind::ChungLaplacian, config.dedup_tol)?;
    let b = adjacency.mesh.len();
    let mut report = SoundnessReport {
        n: g.n(),
        m: g.m(),
        mesh_size: b,
        queries: 0,
        vacuous_queries: 0,
        certified_queries: 0,
        set_pairs: 0,
        separator_checks: 0,
        violations: Vec::new(),
    };

    for &q in queries {
        report.queries += 1;
        let certs = [
            adjacency.certify(g, q, config.margin)?,
            laplacian.certify(g, q, config.margin)?,
        ];
        if certs[0].vacuous {
            report.vacuous_queries += 1;
            continue;
        }
        if certs[0].min_certified_k.is_some() {
            report.certified_queries += 1;
        }
        let exact = oracle.conditional_diameter(&q)?;
        for cert in &certs {
            for row in cert.rows.iter().filter(|r| r.certified && exact.value > r.k) {
                report.violations.push(Violation {
                    kind: ViolationKind::Diameter(cert.matrix),
                    query: Some(q),
                    k: row.k,
                    pk_value: Some(row.pk_value),
                    threshold: cert.threshold,
                    claimed: row.k,
                    exact: exact.value,
                    first: exact.first.clone(),
                    second: exact.second.clone(),
                });
            }
        }
        if certs[0].min_certified_k != certs[1].min_certified_k {
            report.violations.push(Violation {
                kind: ViolationKind::LaplacianMismatch,
                query: Some(q),
                k: certs[0].min_certified_k.unwrap_or(usize::MAX),
                pk_value: None,
                threshold: certs[0].threshold,
                claimed: certs[1].min_certified_k.unwrap_or(usize::MAX),
                exact: exact.value,
                first: Vec::new(),
                second: Vec::new(),
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = g.n();
    for _ in 0..config.set_pairs {
        let pick = |rng: &mut ChaCha8Rng| {
            let size = rng.random_range(1..=config.max_set_size.min(n));
            VertexSet::new(g, sample(rng, n, size).into_vec()).expect("sampled indices are valid")
        };
        let s = pick(&mut rng);
        let t = pick(&mut rng);
        report.set_pairs += 1;
        let cert = adjacency.certify_sets(g, &s, &t, config.margin)?;
        let d = set_distance(oracle.distances(), &s, &t).expect("sets are nonempty");
        for row in cert.rows.iter().filter(|r| r.certified && d > r.k) {
            report.violations.push(Violation {
                kind: ViolationKind::SetPair,
                query: None,
                k: row.k,
                pk_value: Some(row.pk_value),
                threshold: cert.threshold,
                claimed: row.k,
                exact: d,
                first: s.members().to_vec(),
                second: t.members().to_vec(),
            });
        }
    }

    if n <= config.separator_max_n {
        check_separators(g, &oracle, &adjacency.values, &mut report)?;
    }
    Ok(report)
}

fn check_separators(
    g: &Graph,
    oracle: &Oracle<'_>,
    pk: &[f64],
    report: &mut SoundnessReport,
) -> Result<(), OracleError> {
    let (n, m) = (g.n(), g.m());
    let mut push = |kind, k: usize, claimed, exact, first: &[usize], second: &[usize]| {
        report.violations.push(Violation {
            kind,
            query: None,
            k,
            pk_value: Some(pk[k]),
            threshold: None,
            claimed,
            exact,
            first: first.to_vec(),
            second: second.to_vec(),
        })
    };
    for (k, &p) in pk.iter().enumerate() {
        for alpha in g.realized_degrees() {
            report.separator_checks += 1;
            let exact = oracle.max_separated_size(alpha, k)?;
            let bound = max_separated_set_size(m, alpha, p);
            if exact.value > bound {
                push(
                    ViolationKind::SeparatedSize,
                    k,
                    bound,
                    exact.value,
                    &exact.first,
                    &exact.second,
                );
            }
            if g.is_regular() {
                let bound = regular_separated_size(n, p);
                if exact.value > bound {
                    push(
                        ViolationKind::RegularSeparatedSize,
                        k,
                        bound,
                        exact.value,
                        &exact.first,
                        &exact.second,
                    );
                }
            }
            if let Some(sep) = oracle.vertex_separator(alpha, k)? {
                let bound = vertex_separator_lower_bound(n, m, alpha, p);
                if sep.separator_size < bound {
                    push(
                        ViolationKind::VertexSeparator,
                        k,
                        bound,
                        sep.separator_size,
                        &sep.first,
                        &sep.second,
                    );
                }
            }
        }
        // largest α admitting two separated s-sets, against the degree floor
        for s in 1..=n / 2 {
            report.separator_checks += 1;
            let best_alpha = g.realized_degrees().into_iter().rev().find_map(|alpha| {
                oracle
                    .conditional_diameter(&BoundQuery::new(alpha, alpha, s, s))
                    .ok()
                    .filter(|r| r.value > k)
                    .map(|r| (alpha, r))
            });
            if let Some((alpha, r)) = best_alpha {
                let bound = max_separated_degree(m, s, p);
                if alpha > bound {
                    push(ViolationKind::SeparatedDegree, k, bound, alpha, &r.first, &r.second);
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn named_graphs_are_sound() {
        let graphs = [
            generate(Family::Petersen, 10, 0).unwrap(),
            generate(Family::Cycle, 6, 0).unwrap(),
            generate(Family::Cycle, 4, 0).unwrap(),
            generate(Family::Star, 5, 0).unwrap(),
            generate(Family::Path, 7, 0).unwrap(),
            generate(Family::Complete, 5, 0).unwrap(),
        ];
        for g in &graphs {
            let report = verify_soundness(g, &standard_queries(g, 3), &SoundnessConfig::default()).unwrap();
            assert!(report.is_sound(), "{:?}", report.violations);
            assert!(report.separator_checks > 0);
        }
    }

    #[test]
    fn petersen_is_uncertified() {
        let pet = generate(Family::Petersen, 10, 0).unwrap();
        let report = verify_soundness(&pet, &[BoundQuery::new(3, 3, 1, 1)], &SoundnessConfig::default()).unwrap();
        assert_eq!(report.mesh_size, 2);
        assert_eq!(report.certified_queries, 0);
        assert!(report.is_sound());
    }

    #[test]
    fn query_grid() {
        let star = generate(Family::Star, 4, 0).unwrap();
        let qs = standard_queries(&star, 3);
        assert_eq!(qs.len(), 2 * 2 * 3 * 3);
        let k2 = generate(Family::Complete, 2, 0).unwrap();
        assert_eq!(standard_queries(&k2, 3).len(), 4);
    }
}
