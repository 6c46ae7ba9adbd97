//! Simple connected undirected graphs, vertex sets and hop distances.

mod distance;
mod generate;
mod parse;

pub use distance::{distance_matrix, set_distance, DistanceMatrix};
pub use generate::{generate, Family, EXTRA_EDGE_PROBABILITY};
pub use parse::{parse_dimacs, parse_edge_list};

use std::collections::VecDeque;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: malformed token `{token}`")]
    Malformed { line: usize, token: String },
    #[error("line {line}: expected exactly two vertices, found {found}")]
    WrongArity { line: usize, found: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex 0")]
    Disconnected { unreachable: usize },
    #[error("graph has {n} vertices, at least 2 are required")]
    TooSmall { n: usize },
    #[error("line {line}: missing or malformed `p edge N M` header")]
    MissingHeader { line: usize },
    #[error("line {line}: second `p` header")]
    DuplicateHeader { line: usize },
    #[error("header declares {declared} edges but {found} were read")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: unknown record type `{tag}`")]
    UnknownRecord { line: usize, tag: String },
    #[error("{family} needs n >= {min}, got {n}")]
    FamilyTooSmall { family: &'static str, min: usize, n: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex {vertex} outside 0..{n}")]
    VertexIndex { vertex: usize, n: usize },
}

/// Immutable simple connected undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    degrees: Vec<usize>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, enforcing simplicity and connectivity.
    ///
    /// Each edge carries the (1-based) source line used in error messages; callers
    /// building graphs programmatically can pass any line numbering.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, usize)>) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooSmall { n });
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut m = 0;
        for (line, u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexIndex { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            if adjacency[u].contains(&v) {
                return Err(GraphError::DuplicateEdge { line, u, v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            m += 1;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let degrees = adjacency.iter().map(Vec::len).collect();
        let g = Graph { adjacency, degrees, m };
        if let Some(unreachable) = g.first_unreachable() {
            return Err(GraphError::Disconnected { unreachable });
        }
        Ok(g)
    }

    /// Convenience constructor for edges without source lines.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges(n, pairs.iter().enumerate().map(|(i, &(u, v))| (i + 1, u, v)))
    }

    fn first_unreachable(&self) -> Option<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// A connected graph has exactly one cycle iff `m == n`.
    pub fn is_unicyclic(&self) -> bool {
        self.m == self.n()
    }

    /// Distinct degrees in increasing order.
    pub fn realized_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Vertices of degree at least `alpha`, ascending.
    pub fn eligible(&self, alpha: usize) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degrees[v] >= alpha).collect()
    }

    /// `(degree, count)` pairs in increasing degree order.
    pub fn degree_histogram(&self) -> Vec<(usize, usize)> {
        let mut hist: Vec<(usize, usize)> = Vec::new();
        for d in self.realized_degrees() {
            hist.push((d, self.degrees.iter().filter(|&&x| x == d).count()));
        }
        hist
    }
}

/// Free-function form of [`Graph::is_unicyclic`].
pub fn is_unicyclic(g: &Graph) -> bool {
    g.is_unicyclic()
}

/// A nonempty set of distinct vertices with its degree profile cached.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexSet {
    members: Vec<usize>,
    min_degree: usize,
    rho: f64,
}

impl VertexSet {
    pub fn new(g: &Graph, members: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if let Some(&vertex) = members.iter().find(|&&v| v >= g.n()) {
            return Err(GraphError::VertexIndex { vertex, n: g.n() });
        }
        let min_degree = members.iter().map(|&v| g.degree(v)).min().unwrap_or(0);
        let mass: f64 = members.iter().map(|&v| (g.degree(v) as f64).sqrt()).sum();
        Ok(VertexSet {
            members,
            min_degree,
            rho: mass * mass,
        })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// δ(U): the smallest degree among members.
    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    /// ρ(U) = (Σ √δ(u))², the squared Perron mass of the set.
    pub fn rho(&self) -> f64 {
        self.rho
    }
}
