use serde::Serialize;

use super::{BoundError, BoundKind, BoundQuery};
use crate::graph::{Graph, VertexSet};

/// √((2m/(sα) − 1)(2m/(tβ) − 1)).
///
/// Errors when sα > 2m or tβ > 2m: s vertices of degree ≥ α already carry sα of the
/// 2m degree total, so such a query admits no sets.
pub fn threshold_general(m: usize, q: &BoundQuery) -> Result<f64, BoundError> {
    let two_m = 2 * m;
    for (size, degree) in [(q.s, q.alpha), (q.t, q.beta)] {
        if size * degree > two_m || size * degree == 0 {
            return Err(BoundError::HandshakeCapacity {
                size,
                degree,
                need: size * degree,
                two_m,
            });
        }
    }
    let a = two_m as f64 / (q.s * q.alpha) as f64 - 1.0;
    let b = two_m as f64 / (q.t * q.beta) as f64 - 1.0;
    Ok((a * b).sqrt())
}

/// √((2m·|S|/ρ_S − 1)(2m·|T|/ρ_T − 1)) for two concrete vertex sets.
pub fn lemma_set_threshold(m: usize, s: &VertexSet, t: &VertexSet) -> Result<f64, BoundError> {
    let two_m = (2 * m) as f64;
    let mut factors = [0.0; 2];
    for (f, set) in factors.iter_mut().zip([s, t]) {
        // ρ(U) ≤ |U|·Σ_{u∈U} δ(u) ≤ |U|·2m by Cauchy–Schwarz
        if set.rho() > two_m * set.len() as f64 * (1.0 + 1e-12) {
            return Err(BoundError::InconsistentProfile { m, rho: set.rho() });
        }
        *f = (two_m * set.len() as f64 / set.rho() - 1.0).max(0.0);
    }
    Ok((factors[0] * factors[1]).sqrt())
}

/// Specializations of the general threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Corollary {
    /// (a) 2m/α − 1 for the (α, α)-degree diameter.
    SameDegree { alpha: usize },
    /// (b) 2m/δ − 1 for the standard diameter.
    StandardDiameter,
    /// (c) n − 1 for the diameter of a regular graph.
    RegularDiameter,
    /// (d) 2n − 1 for the diameter of a unicyclic graph.
    UnicyclicDiameter,
    /// (e) √((n/s − 1)(n/t − 1)) for the (s, t)-diameter of a regular graph.
    RegularSetDiameter { s: usize, t: usize },
}

impl Corollary {
    pub fn bound_kind(self) -> BoundKind {
        match self {
            Corollary::SameDegree { .. } => BoundKind::SameDegree,
            Corollary::StandardDiameter => BoundKind::StandardDiameter,
            Corollary::RegularDiameter => BoundKind::RegularDiameter,
            Corollary::UnicyclicDiameter => BoundKind::UnicyclicDiameter,
            Corollary::RegularSetDiameter { .. } => BoundKind::RegularSetDiameter,
        }
    }

    /// The general query this corollary specializes on `g`.
    pub fn as_query(self, g: &Graph) -> BoundQuery {
        let d = g.min_degree();
        match self {
            Corollary::SameDegree { alpha } => BoundQuery::new(alpha, alpha, 1, 1),
            Corollary::StandardDiameter | Corollary::RegularDiameter => BoundQuery::new(d, d, 1, 1),
            Corollary::UnicyclicDiameter => BoundQuery::new(1, 1, 1, 1),
            Corollary::RegularSetDiameter { s, t } => BoundQuery::new(d, d, s, t),
        }
    }
}

pub fn corollary_threshold(g: &Graph, which: Corollary) -> Result<f64, BoundError> {
    let (n, m) = (g.n() as f64, g.m());
    match which {
        Corollary::SameDegree { alpha } => {
            if alpha < g.min_degree() || alpha > g.max_degree() {
                return Err(BoundError::InvalidQuery(format!(
                    "alpha={alpha} outside the degree range {}..={}",
                    g.min_degree(),
                    g.max_degree()
                )));
            }
            Ok((2 * m) as f64 / alpha as f64 - 1.0)
        }
        Corollary::StandardDiameter => Ok((2 * m) as f64 / g.min_degree() as f64 - 1.0),
        Corollary::RegularDiameter => {
            if !g.is_regular() {
                return Err(BoundError::NotRegular);
            }
            Ok(n - 1.0)
        }
        Corollary::UnicyclicDiameter => {
            if !g.is_unicyclic() {
                return Err(BoundError::NotUnicyclic);
            }
            Ok(2.0 * n - 1.0)
        }
        Corollary::RegularSetDiameter { s, t } => {
            if !g.is_regular() {
                return Err(BoundError::NotRegular);
            }
            if s == 0 || t == 0 || s > g.n() || t > g.n() {
                return Err(BoundError::InvalidQuery(format!("s={s}, t={t} outside 1..={}", g.n())));
            }
            Ok(((n / s as f64 - 1.0) * (n / t as f64 - 1.0)).sqrt())
        }
    }
}
