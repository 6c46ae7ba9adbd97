//! Exact conditional diameters, separated sets and vertex separators by enumeration.
//!
//! These are exponential-time reference computations for graphs of a dozen or so
//! vertices, used to check every spectral certificate.
//!
//! The conditional diameter uses a reduction. Enlarging S or T can only shrink
//! ∂(S, T), so a maximizing pair can be taken with |S| = s and |T| = t exactly. For a
//! fixed S, ∂(S, T) = min_{v∈T} d_S(v) with d_S(v) = min_{u∈S} ∂(u, v), and the best T
//! is the t eligible vertices with the largest d_S; the objective is then the t-th
//! largest d_S value. So only the C(|eligible|, s) choices of S are enumerated.

mod soundness;

pub use soundness::{
    standard_queries, verify_soundness, SoundnessConfig, SoundnessError, SoundnessReport, Violation, ViolationKind,
};

use serde::Serialize;

use crate::bounds::BoundQuery;
use crate::graph::{distance_matrix, DistanceMatrix, Graph};

pub const DEFAULT_MAX_N: usize = 16;
pub const DEFAULT_MAX_SEPARATOR_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("vacuous query: fewer than {need} vertices of degree >= {degree}")]
    Vacuous { degree: usize, need: usize },
    #[error("graph has {n} vertices, oracle limit is {max}")]
    SizeGuard { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleLimits {
    pub max_n: usize,
    pub max_separator_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n: DEFAULT_MAX_N,
            max_separator_n: DEFAULT_MAX_SEPARATOR_N,
        }
    }
}

/// An exact value together with sets that attain it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub value: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Minimum (α, k)-vertex separator with the bipartition that realizes it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorResult {
    /// Largest u with |U| = |W| = u, both of degree ≥ α, at distance > k.
    pub half_size: usize,
    /// n − 2u.
    pub separator_size: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub separator: Vec<usize>,
}

/// A graph with its distance matrix, ready for repeated exact queries.
pub struct Oracle<'g> {
    graph: &'g Graph,
    dist: DistanceMatrix,
    limits: OracleLimits,
}

/// Calls `visit` on every `size`-subset of `items` (lexicographic order).
fn for_each_combination(items: &[usize], size: usize, mut visit: impl FnMut(&[usize])) {
    let n = items.len();
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut chosen: Vec<usize> = idx.iter().map(|&i| items[i]).collect();
    loop {
        visit(&chosen);
        let Some(pos) = (0..size).rev().find(|&p| idx[p] != p + n - size) else {
            return;
        };
        idx[pos] += 1;
        for q in pos + 1..size {
            idx[q] = idx[q - 1] + 1;
        }
        for q in pos..size {
            chosen[q] = items[idx[q]];
        }
    }
}

impl<'g> Oracle<'g> {
    pub fn new(graph: &'g Graph, limits: OracleLimits) -> Result<Self, OracleError> {
        if graph.n() > limits.max_n {
            return Err(OracleError::SizeGuard {
                n: graph.n(),
                max: limits.max_n,
            });
        }
        Ok(Oracle {
            graph,
            dist: distance_matrix(graph),
            limits,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// D^(α,β): max ∂(u, v) over δ(u) ≥ α, δ(v) ≥ β (u = v allowed).
    pub fn degree_diameter(&self, alpha: usize, beta: usize) -> Result<ExactResult, OracleError> {
        self.conditional_diameter(&BoundQuery::new(alpha, beta, 1, 1))
    }

    /// D^(α,β)_(s,t).
    pub fn conditional_diameter(&self, q: &BoundQuery) -> Result<ExactResult, OracleError> {
        let left = self.graph.eligible(q.alpha);
        let right = self.graph.eligible(q.beta);
        if left.len() < q.s || q.s == 0 {
            return Err(OracleError::Vacuous {
                degree: q.alpha,
                need: q.s.max(1),
            });
        }
        if right.len() < q.t || q.t == 0 {
            return Err(OracleError::Vacuous {
                degree: q.beta,
                need: q.t.max(1),
            });
        }
        let mut best: Option<ExactResult> = None;
        let mut scored: Vec<(usize, usize)> = Vec::with_capacity(right.len());
        for_each_combination(&left, q.s, |set| {
            scored.clear();
            for &v in &right {
                let d = set.iter().map(|&u| self.dist.get(u, v)).min().unwrap_or(0);
                scored.push((d, v));
            }
            // largest distance first, ties by vertex index for determinism
            scored.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let value = scored[q.t - 1].0;
            if best.as_ref().is_none_or(|b| value > b.value) {
                let mut second: Vec<usize> = scored[..q.t].iter().map(|&(_, v)| v).collect();
                second.sort_unstable();
                best = Some(ExactResult {
                    value,
                    first: set.to_vec(),
                    second,
                });
            }
        });
        Ok(best.expect("at least one subset is enumerated"))
    }

    /// Largest s admitting two s-sets of degree ≥ α at distance > k (0 if none).
    pub fn max_separated_size(&self, alpha: usize, k: usize) -> Result<ExactResult, OracleError> {
        let eligible = self.graph.eligible(alpha).len();
        for s in (1..=eligible / 2).rev() {
            let r = self.conditional_diameter(&BoundQuery::new(alpha, alpha, s, s))?;
            if r.value > k {
                return Ok(ExactResult { value: s, ..r });
            }
        }
        Ok(ExactResult {
            value: 0,
            first: Vec::new(),
            second: Vec::new(),
        })
    }

    /// Minimum (α, k)-vertex separator by direct enumeration of disjoint pairs (U, W).
    pub fn vertex_separator(&self, alpha: usize, k: usize) -> Result<Option<SeparatorResult>, OracleError> {
        let n = self.graph.n();
        if n > self.limits.max_separator_n {
            return Err(OracleError::SizeGuard {
                n,
                max: self.limits.max_separator_n,
            });
        }
        let eligible = self.graph.eligible(alpha);
        let mut search = SeparatorSearch {
            dist: &self.dist,
            eligible: &eligible,
            k,
            u: Vec::new(),
            w: Vec::new(),
            best: None,
        };
        search.recurse(0);
        Ok(search.best.map(|(u, w)| {
            let mut separator: Vec<usize> = (0..n).filter(|v| !u.contains(v) && !w.contains(v)).collect();
            separator.sort_unstable();
            SeparatorResult {
                half_size: u.len(),
                separator_size: n - 2 * u.len(),
                first: u,
                second: w,
                separator,
            }
        }))
    }
}

struct SeparatorSearch<'a> {
    dist: &'a DistanceMatrix,
    eligible: &'a [usize],
    k: usize,
    u: Vec<usize>,
    w: Vec<usize>,
    best: Option<(Vec<usize>, Vec<usize>)>,
}

impl SeparatorSearch<'_> {
    fn far_from(&self, v: usize, side: &[usize]) -> bool {
        side.iter().all(|&x| self.dist.get(v, x) > self.k)
    }

    fn recurse(&mut self, i: usize) {
        let best_half = self.best.as_ref().map_or(0, |b| b.0.len());
        let remaining = self.eligible.len() - i;
        // even placing every remaining vertex cannot beat the incumbent
        if (self.u.len() + self.w.len() + remaining) / 2 <= best_half {
            return;
        }
        if i == self.eligible.len() {
            if self.u.len() == self.w.len() && self.u.len() > best_half {
                self.best = Some((self.u.clone(), self.w.clone()));
            }
            return;
        }
        let v = self.eligible[i];
        if self.far_from(v, &self.w) {
            self.u.push(v);
            self.recurse(i + 1);
            self.u.pop();
        }
        // U and W are interchangeable: the first placed vertex goes to U
        if !self.u.is_empty() && self.far_from(v, &self.u) {
            self.w.push(v);
            self.recurse(i + 1);
            self.w.pop();
        }
        self.recurse(i + 1);
    }
}

pub fn exact_degree_diameter(g: &Graph, alpha: usize, beta: usize) -> Result<ExactResult, OracleError> {
    Oracle::new(g, OracleLimits::default())?.degree_diameter(alpha, beta)
}

pub fn exact_conditional_diameter(g: &Graph, q: &BoundQuery) -> Result<ExactResult, OracleError> {
    Oracle::new(g, OracleLimits::default())?.conditional_diameter(q)
}

pub fn exact_max_separated_size(g: &Graph, alpha: usize, k: usize) -> Result<ExactResult, OracleError> {
    Oracle::new(g, OracleLimits::default())?.max_separated_size(alpha, k)
}

pub fn exact_vertex_separator(g: &Graph, alpha: usize, k: usize) -> Result<Option<SeparatorResult>, OracleError> {
    Oracle::new(g, OracleLimits::default())?.vertex_separator(alpha, k)
}
