use serde::Serialize;

use crate::graph::Graph;

/// Which graph matrix a spectrum or mesh came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixKind {
    DegreeAdjacency,
    ChungLaplacian,
    StandardAdjacency,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::DegreeAdjacency => "degree-adjacency",
            MatrixKind::ChungLaplacian => "chung-laplacian",
            MatrixKind::StandardAdjacency => "standard-adjacency",
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degree-adjacency" | "adjacency" => Ok(MatrixKind::DegreeAdjacency),
            "laplacian" | "chung-laplacian" => Ok(MatrixKind::ChungLaplacian),
            "standard" | "standard-adjacency" => Ok(MatrixKind::StandardAdjacency),
            other => Err(format!("unknown matrix kind `{other}`")),
        }
    }
}

/// Dense symmetric matrix, row-major. Both triangles are stored and kept equal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut a = Self::zeros(n);
        for i in 0..n {
            a.data[i * n + i] = 1.0;
        }
        a
    }

    /// Builds from row-major data, rejecting anything that is not exactly symmetric.
    pub fn from_rows(n: usize, data: Vec<f64>) -> Option<Self> {
        if data.len() != n * n {
            return None;
        }
        for i in 0..n {
            for j in 0..i {
                if data[i * n + j] != data[j * n + i] {
                    return None;
                }
            }
        }
        Some(SymMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Writes both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data
            .chunks_exact(self.n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Product of two symmetric matrices that commute (e.g. polynomials in one matrix),
    /// so the result is symmetric. Symmetry is restored exactly by averaging.
    pub(crate) fn mul_commuting(&self, other: &SymMatrix) -> SymMatrix {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                for (o, b) in out[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                let avg = 0.5 * (out[i * n + j] + out[j * n + i]);
                out[i * n + j] = avg;
                out[j * n + i] = avg;
            }
        }
        SymMatrix { n, data: out }
    }

    pub(crate) fn scale_add_identity(&mut self, scale: f64, shift: f64) {
        for v in &mut self.data {
            *v *= scale;
        }
        for i in 0..self.n {
            self.data[i * self.n + i] += shift;
        }
    }
}

/// 𝒜 with entries 1/√(δ_i δ_j) on edges.
pub fn degree_adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut a = SymMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        a.set(u, v, 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt());
    }
    a
}

/// L = I − 𝒜.
pub fn chung_laplacian(g: &Graph) -> SymMatrix {
    let mut l = degree_adjacency_matrix(g);
    l.scale_add_identity(-1.0, 1.0);
    l
}

pub fn standard_adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut a = SymMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        a.set(u, v, 1.0);
    }
    a
}

pub fn graph_matrix(g: &Graph, kind: MatrixKind) -> SymMatrix {
    match kind {
        MatrixKind::DegreeAdjacency => degree_adjacency_matrix(g),
        MatrixKind::ChungLaplacian => chung_laplacian(g),
        MatrixKind::StandardAdjacency => standard_adjacency_matrix(g),
    }
}
