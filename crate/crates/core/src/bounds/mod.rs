//! Spectral thresholds for conditional diameters and separated sets.
//!
//! Every diameter bound has the shape "P_k(eval) > threshold ⇒ D ≤ k"; this module
//! computes thresholds, the per-k certification table, and the floor-type bounds on
//! separated sets and vertex separators.

mod separators;
mod thresholds;

pub use separators::{
    max_separated_degree, max_separated_set_size, regular_separated_size, vertex_separator_lower_bound, SeparatorReport,
};
pub use thresholds::{corollary_threshold, lemma_set_threshold, threshold_general, Corollary};

use serde::Serialize;

use crate::altpoly::{alternating_polynomial, polynomial_table, AltPolyError, AlternatingPolynomial};
use crate::graph::{Graph, VertexSet};
use crate::spectral::{extract_mesh, graph_spectrum, MatrixKind, SpectralError, SpectralMesh, Spectrum};

/// Relative slack below which `P_k ≈ threshold` is treated as a tie (not certified).
pub const TIE_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundError {
    #[error(
        "query exceeds handshake capacity: {size} vertices of degree >= {degree} need 2m >= {need}, but 2m = {two_m}"
    )]
    HandshakeCapacity {
        size: usize,
        degree: usize,
        need: usize,
        two_m: usize,
    },
    #[error("vertex set profile inconsistent with m={m}: rho={rho} exceeds 2m*|U|")]
    InconsistentProfile { m: usize, rho: f64 },
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("this bound requires a regular graph")]
    NotRegular,
    #[error("this bound requires a unicyclic graph (m = n)")]
    NotUnicyclic,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    AltPoly(#[from] AltPolyError),
}

/// An (α, β, s, t) question: two vertex sets of sizes ≥ s, t and minimum degrees ≥ α, β.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BoundQuery {
    pub alpha: usize,
    pub beta: usize,
    pub s: usize,
    pub t: usize,
}

impl BoundQuery {
    pub fn new(alpha: usize, beta: usize, s: usize, t: usize) -> Self {
        BoundQuery { alpha, beta, s, t }
    }

    /// Checks 1 ≤ s, t ≤ n and δ ≤ α, β ≤ Δ.
    pub fn validate(&self, g: &Graph) -> Result<(), BoundError> {
        let (n, lo, hi) = (g.n(), g.min_degree(), g.max_degree());
        for (name, v) in [("s", self.s), ("t", self.t)] {
            if v == 0 || v > n {
                return Err(BoundError::InvalidQuery(format!("{name}={v} outside 1..={n}")));
            }
        }
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta)] {
            if v < lo || v > hi {
                return Err(BoundError::InvalidQuery(format!(
                    "{name}={v} outside the degree range {lo}..={hi}"
                )));
            }
        }
        Ok(())
    }

    /// No admissible pair of sets exists: fewer than s vertices of degree ≥ α, or fewer
    /// than t of degree ≥ β.
    pub fn is_vacuous(&self, g: &Graph) -> bool {
        g.eligible(self.alpha).len() < self.s || g.eligible(self.beta).len() < self.t
    }
}

/// Which result a threshold comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// (α, β, s, t)-diameter from the degree-adjacency mesh at 1.
    General,
    /// Same threshold, Laplacian mesh evaluated at 0.
    Laplacian,
    /// Two concrete vertex sets, threshold from their ρ profiles.
    SetPair,
    SameDegree,
    StandardDiameter,
    RegularDiameter,
    UnicyclicDiameter,
    RegularSetDiameter,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CertificateRow {
    pub k: usize,
    pub pk_value: f64,
    pub threshold: f64,
    pub certified: bool,
}

/// Per-k certification table for one threshold.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCertificate {
    pub query: Option<BoundQuery>,
    pub matrix: MatrixKind,
    pub bound: BoundKind,
    /// `None` for vacuous queries.
    pub threshold: Option<f64>,
    pub margin: f64,
    pub vacuous: bool,
    pub rows: Vec<CertificateRow>,
    pub min_certified_k: Option<usize>,
}

/// `pk > threshold` with a relative tie guard and an optional absolute safety margin.
pub fn certifies(pk_value: f64, threshold: f64, margin: f64) -> bool {
    pk_value > threshold + TIE_REL_TOL * threshold.abs().max(1.0) + margin
}

/// Smallest k with P_k(eval) > threshold; `pk_values` is indexed by k.
pub fn min_certified_k(pk_values: &[f64], threshold: f64, margin: f64) -> Option<usize> {
    pk_values.iter().position(|&p| certifies(p, threshold, margin))
}

impl BoundCertificate {
    pub fn build(
        pk_values: &[f64],
        matrix: MatrixKind,
        bound: BoundKind,
        threshold: f64,
        margin: f64,
        query: Option<BoundQuery>,
    ) -> Self {
        let rows = pk_values
            .iter()
            .enumerate()
            .map(|(k, &pk_value)| CertificateRow {
                k,
                pk_value,
                threshold,
                certified: certifies(pk_value, threshold, margin),
            })
            .collect();
        BoundCertificate {
            query,
            matrix,
            bound,
            threshold: Some(threshold),
            margin,
            vacuous: false,
            rows,
            min_certified_k: min_certified_k(pk_values, threshold, margin),
        }
    }

    pub fn vacuous(matrix: MatrixKind, bound: BoundKind, margin: f64, query: Option<BoundQuery>) -> Self {
        BoundCertificate {
            query,
            matrix,
            bound,
            threshold: None,
            margin,
            vacuous: true,
            rows: Vec::new(),
            min_certified_k: None,
        }
    }

    /// Whether "D ≤ k" is certified.
    /// Whether "≤ k" is certified. P_k increases with k, so this holds for every k at
    /// or past the first certified row, including k beyond a truncated table.
    pub fn certifies_k(&self, k: usize) -> bool {
        self.min_certified_k.is_some_and(|k0| k >= k0)
    }
}

/// Spectrum, mesh and P_0 … P_{b−1} of one matrix of a graph.
///
/// A table built with a cap stops after the first P_k above it; `values` then covers
/// only k = 0 … that k and `complete` is false.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolynomialTable {
    pub spectrum: Spectrum,
    pub mesh: SpectralMesh,
    #[serde(skip)]
    pub polynomials: Vec<AlternatingPolynomial>,
    pub values: Vec<f64>,
    pub complete: bool,
}

impl PolynomialTable {
    pub fn for_graph(g: &Graph, kind: MatrixKind, dedup_tol: f64) -> Result<Self, BoundError> {
        let spectrum = graph_spectrum(g, kind)?;
        let mesh = extract_mesh(&spectrum, dedup_tol)?;
        Self::for_mesh(spectrum, mesh)
    }

    pub fn for_mesh(spectrum: Spectrum, mesh: SpectralMesh) -> Result<Self, BoundError> {
        let polynomials = polynomial_table(&mesh)?;
        let values = polynomials.iter().map(AlternatingPolynomial::extremal_value).collect();
        Ok(PolynomialTable {
            spectrum,
            mesh,
            polynomials,
            values,
            complete: true,
        })
    }

    /// Like [`for_graph`](Self::for_graph) but stops at the first k ≥ `min_k` whose P_k
    /// certifies against `cap`. Certificates with thresholds (plus margin) up to `cap`
    /// are unaffected, and the high-degree programs, which are the badly conditioned
    /// ones, are never solved.
    pub fn for_graph_capped(
        g: &Graph,
        kind: MatrixKind,
        dedup_tol: f64,
        cap: f64,
        min_k: usize,
    ) -> Result<Self, BoundError> {
        let spectrum = graph_spectrum(g, kind)?;
        let mesh = extract_mesh(&spectrum, dedup_tol)?;
        let mut polynomials = Vec::new();
        for k in 0..mesh.len() {
            let p = alternating_polynomial(&mesh, k)?;
            let done = k >= min_k && certifies(p.extremal_value(), cap, 0.0);
            polynomials.push(p);
            if done {
                break;
            }
        }
        let values: Vec<f64> = polynomials.iter().map(AlternatingPolynomial::extremal_value).collect();
        let complete = values.len() == mesh.len();
        Ok(PolynomialTable {
            spectrum,
            mesh,
            polynomials,
            values,
            complete,
        })
    }

    pub fn kind(&self) -> MatrixKind {
        self.mesh.kind()
    }

    /// Certificate for an (α, β, s, t) query against this table.
    pub fn certify(&self, g: &Graph, q: BoundQuery, margin: f64) -> Result<BoundCertificate, BoundError> {
        q.validate(g)?;
        let bound = match self.kind() {
            MatrixKind::ChungLaplacian => BoundKind::Laplacian,
            _ => BoundKind::General,
        };
        if q.is_vacuous(g) {
            return Ok(BoundCertificate::vacuous(self.kind(), bound, margin, Some(q)));
        }
        let threshold = threshold_general(g.m(), &q)?;
        Ok(BoundCertificate::build(
            &self.values,
            self.kind(),
            bound,
            threshold,
            margin,
            Some(q),
        ))
    }

    /// Certificate for "∂(S, T) ≤ k" on two concrete sets.
    pub fn certify_sets(
        &self,
        g: &Graph,
        s: &VertexSet,
        t: &VertexSet,
        margin: f64,
    ) -> Result<BoundCertificate, BoundError> {
        let threshold = lemma_set_threshold(g.m(), s, t)?;
        Ok(BoundCertificate::build(
            &self.values,
            self.kind(),
            BoundKind::SetPair,
            threshold,
            margin,
            None,
        ))
    }

    pub fn certify_corollary(&self, g: &Graph, which: Corollary, margin: f64) -> Result<BoundCertificate, BoundError> {
        let threshold = corollary_threshold(g, which)?;
        Ok(BoundCertificate::build(
            &self.values,
            self.kind(),
            which.bound_kind(),
            threshold,
            margin,
            None,
        ))
    }
}

/// Degree-adjacency certificate with default tolerances.
pub fn degree_adjacency_certificate(g: &Graph, q: BoundQuery, margin: f64) -> Result<BoundCertificate, BoundError> {
    PolynomialTable::for_graph(g, MatrixKind::DegreeAdjacency, crate::spectral::DEFAULT_DEDUP_TOL)?
        .certify(g, q, margin)
}

/// The same query answered on the Chung Laplacian mesh, P_k evaluated at 0.
pub fn laplacian_certificate(g: &Graph, q: BoundQuery, margin: f64) -> Result<BoundCertificate, BoundError> {
    PolynomialTable::for_graph(g, MatrixKind::ChungLaplacian, crate::spectral::DEFAULT_DEDUP_TOL)?.certify(g, q, margin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn min_certified_k_is_strict() {
        assert_eq!(min_certified_k(&[1.0, 2.0, 5.0], 0.5, 0.0), Some(0));
        assert_eq!(min_certified_k(&[1.0, 3.0], 3.0, 0.0), None);
        assert_eq!(min_certified_k(&[1.0, 3.0 + 1e-12], 3.0, 0.0), None);
        assert_eq!(min_certified_k(&[1.0, 3.0001], 3.0, 0.0), Some(1));
        assert_eq!(min_certified_k(&[1.0, 3.0001], 3.0, 0.001), None);
        // Petersen: P_1(1) = 7/3 < 9
        assert_eq!(min_certified_k(&[1.0, 7.0 / 3.0], 9.0, 0.0), None);
    }

    #[test]
    fn query_validation() {
        let star = generate(Family::Star, 4, 0).unwrap();
        assert!(BoundQuery::new(1, 3, 1, 1).validate(&star).is_ok());
        assert!(BoundQuery::new(4, 1, 1, 1).validate(&star).is_err());
        assert!(BoundQuery::new(1, 1, 0, 1).validate(&star).is_err());
        assert!(BoundQuery::new(1, 1, 1, 5).validate(&star).is_err());
        assert!(BoundQuery::new(3, 3, 2, 1).is_vacuous(&star));
        assert!(!BoundQuery::new(3, 3, 1, 1).is_vacuous(&star));
    }

    #[test]
    fn vacuous_queries_are_flagged() {
        let star = generate(Family::Star, 4, 0).unwrap();
        let cert = degree_adjacency_certificate(&star, BoundQuery::new(3, 1, 2, 1), 0.0).unwrap();
        assert!(cert.vacuous);
        assert_eq!(cert.min_certified_k, None);
        assert_eq!(cert.threshold, None);
    }

    #[test]
    fn cycle_four_is_uncertified_at_the_tie() {
        let c4 = generate(Family::Cycle, 4, 0).unwrap();
        let cert = degree_adjacency_certificate(&c4, BoundQuery::new(2, 2, 1, 1), 0.0).unwrap();
        assert_eq!(cert.threshold, Some(3.0));
        assert!((cert.rows[1].pk_value - 3.0).abs() < 1e-12);
        assert_eq!(cert.min_certified_k, None);
    }

    #[test]
    fn cycle_six_standard_diameter_tie() {
        let c6 = generate(Family::Cycle, 6, 0).unwrap();
        let table = PolynomialTable::for_graph(&c6, MatrixKind::DegreeAdjacency, 1e-8).unwrap();
        assert_eq!(table.mesh.len(), 3);
        let cert = table.certify_corollary(&c6, Corollary::StandardDiameter, 0.0).unwrap();
        assert_eq!(cert.threshold, Some(5.0));
        assert!((cert.rows[2].pk_value - 5.0).abs() < 1e-10);
        assert_eq!(cert.min_certified_k, None);
    }

    #[test]
    fn laplacian_matches_adjacency() {
        for seed in 0..20 {
            let g = generate(Family::RandomConnected, 9, seed).unwrap();
            let q = BoundQuery::new(g.min_degree(), g.max_degree(), 1, 2);
            let a = degree_adjacency_certificate(&g, q, 0.0).unwrap();
            let l = laplacian_certificate(&g, q, 0.0).unwrap();
            assert_eq!(a.min_certified_k, l.min_certified_k);
            for (ra, rl) in a.rows.iter().zip(&l.rows) {
                assert!((ra.pk_value - rl.pk_value).abs() <= 1e-8 * ra.pk_value);
            }
        }
    }
}
