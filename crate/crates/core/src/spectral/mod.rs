//! Degree-adjacency, Chung Laplacian and standard adjacency matrices, their spectra,
//! and the eigenvalue mesh that alternating polynomials are built on.

mod jacobi;
mod matrix;
mod mesh;

pub use jacobi::{jacobi_eigenvalues, DEFAULT_CONVERGENCE_TOL, DEFAULT_MAX_SWEEPS};
pub use matrix::{
    chung_laplacian, degree_adjacency_matrix, graph_matrix, standard_adjacency_matrix, MatrixKind, SymMatrix,
};
pub use mesh::{extract_mesh, MeshSide, SpectralMesh, DEFAULT_DEDUP_TOL};

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("Perron value {expected} not found (closest eigenvalue {found})")]
    PerronMissing { expected: f64, found: f64 },
    #[error(
        "Perron value {expected} appears more than once (next eigenvalue {next}); graph disconnected or solver failed"
    )]
    PerronMultiple { expected: f64, next: f64 },
    #[error("mesh is empty")]
    EmptyMesh,
    #[error("mesh points must be finite, distinct and strictly ordered away from the evaluation point")]
    UnorderedMesh,
    #[error("evaluation point {eval} is not strictly outside the mesh on the Perron side")]
    EvalInsideMesh { eval: f64 },
    #[error("{0} spectra have no fixed Perron value; meshes come from degree-adjacency or Laplacian spectra")]
    UnsupportedKind(&'static str),
}

/// All eigenvalues of one matrix, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    kind: MatrixKind,
    values: Vec<f64>,
}

impl Spectrum {
    /// Wraps a known list of eigenvalues (e.g. a published spectrum); sorts descending.
    pub fn from_values(kind: MatrixKind, mut values: Vec<f64>) -> Self {
        values.sort_by(|x, y| y.total_cmp(x));
        Spectrum { kind, values }
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Groups values closer than `dedup_tol` (chained) into `(mean, multiplicity)` pairs,
    /// in descending order.
    pub fn clusters(&self, dedup_tol: f64) -> Vec<(f64, usize)> {
        mesh::cluster_descending(&self.values, dedup_tol)
    }
}

pub fn sym_eigenvalues(a: &SymMatrix, kind: MatrixKind, convergence_tol: f64) -> Result<Spectrum, SpectralError> {
    let values = jacobi_eigenvalues(a, convergence_tol, DEFAULT_MAX_SWEEPS)?;
    Ok(Spectrum { kind, values })
}

/// Spectrum of the chosen matrix of `g` with the default solver tolerance.
pub fn graph_spectrum(g: &Graph, kind: MatrixKind) -> Result<Spectrum, SpectralError> {
    sym_eigenvalues(&graph_matrix(g, kind), kind, DEFAULT_CONVERGENCE_TOL)
}

/// ν = (√δ_1, …, √δ_n), the Perron eigenvector of 𝒜 for eigenvalue 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronVector {
    entries: Vec<f64>,
    norm_sq: f64,
}

impl PerronVector {
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// ‖ν‖² = Σ δ_i = 2m, held as the exact integer value.
    pub fn norm_sq(&self) -> f64 {
        self.norm_sq
    }

    /// Removes the ν-component of `z`, leaving a vector in ν⊥.
    pub fn project_out(&self, z: &mut [f64]) {
        let dot: f64 = z.iter().zip(&self.entries).map(|(a, b)| a * b).sum();
        let c = dot / self.norm_sq;
        for (zi, vi) in z.iter_mut().zip(&self.entries) {
            *zi -= c * vi;
        }
    }
}

pub fn perron_vector(g: &Graph) -> PerronVector {
    PerronVector {
        entries: g.degrees().iter().map(|&d| (d as f64).sqrt()).collect(),
        norm_sq: (2 * g.m()) as f64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn assert_spectrum(got: &Spectrum, want: &[f64], tol: f64) {
        assert_eq!(got.values().len(), want.len());
        for (g, w) in got.values().iter().zip(want) {
            assert!((g - w).abs() < tol, "{:?} vs {want:?}", got.values());
        }
    }

    #[test]
    fn cycle_and_star_share_degree_adjacency_spectrum() {
        for family in [Family::Cycle, Family::Star] {
            let g = generate(family, 4, 0).unwrap();
            let s = graph_spectrum(&g, MatrixKind::DegreeAdjacency).unwrap();
            assert_spectrum(&s, &[1.0, 0.0, 0.0, -1.0], 1e-12);
        }
    }

    #[test]
    fn standard_spectra_differ() {
        let c4 = generate(Family::Cycle, 4, 0).unwrap();
        let s = graph_spectrum(&c4, MatrixKind::StandardAdjacency).unwrap();
        assert_spectrum(&s, &[2.0, 0.0, 0.0, -2.0], 1e-12);
        let star = generate(Family::Star, 4, 0).unwrap();
        let s = graph_spectrum(&star, MatrixKind::StandardAdjacency).unwrap();
        let r3 = 3f64.sqrt();
        assert_spectrum(&s, &[r3, 0.0, 0.0, -r3], 1e-12);
        let k2 = generate(Family::Complete, 2, 0).unwrap();
        assert_spectrum(
            &graph_spectrum(&k2, MatrixKind::StandardAdjacency).unwrap(),
            &[1.0, -1.0],
            1e-15,
        );
    }

    #[test]
    fn triangle() {
        let k3 = generate(Family::Complete, 3, 0).unwrap();
        let s = graph_spectrum(&k3, MatrixKind::DegreeAdjacency).unwrap();
        assert_spectrum(&s, &[1.0, -0.5, -0.5], 1e-12);
        let clusters = s.clusters(1e-8);
        assert_eq!(clusters.iter().map(|c| c.1).collect::<Vec<_>>(), vec![1, 2]);
        assert!((clusters[1].0 + 0.5).abs() < 1e-12);
    }

    #[test]
    fn perron_vector_is_fixed_by_adjacency() {
        let star = generate(Family::Star, 4, 0).unwrap();
        let nu = perron_vector(&star);
        assert_eq!(nu.entries(), &[3f64.sqrt(), 1.0, 1.0, 1.0]);
        assert_eq!(nu.norm_sq(), 6.0);
        for seed in 0..50 {
            let g = generate(Family::RandomConnected, 3 + (seed as usize % 10), seed).unwrap();
            let nu = perron_vector(&g);
            let a = degree_adjacency_matrix(&g);
            let residual: f64 = a
                .mul_vec(nu.entries())
                .iter()
                .zip(nu.entries())
                .map(|(x, y)| (x - y).powi(2))
                .sum::<f64>()
                .sqrt();
            assert!(residual < 1e-10);
            assert!(nu.entries().iter().all(|&x| x > 0.0));
        }
    }

    #[test]
    fn projection_lands_in_orthogonal_complement() {
        let g = generate(Family::RandomConnected, 8, 3).unwrap();
        let nu = perron_vector(&g);
        let mut z: Vec<f64> = (0..8).map(|i| i as f64 - 2.5).collect();
        nu.project_out(&mut z);
        let dot: f64 = z.iter().zip(nu.entries()).map(|(a, b)| a * b).sum();
        assert!(dot.abs() < 1e-12);
    }
}
