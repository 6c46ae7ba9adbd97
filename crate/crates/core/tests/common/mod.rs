#![allow(dead_code)]

use condiam_core::graph::{generate, Family};
use condiam_core::spectral::{extract_mesh, graph_spectrum, MeshSide, DEFAULT_DEDUP_TOL};
use condiam_core::{Graph, MatrixKind, SpectralMesh};

pub fn random_graph(seed: u64, max_n: usize) -> Graph {
    let n = 3 + (seed as usize * 7919) % (max_n - 2);
    generate(Family::RandomConnected, n, seed).unwrap()
}

pub fn mesh_of(g: &Graph, kind: MatrixKind) -> SpectralMesh {
    extract_mesh(&graph_spectrum(g, kind).unwrap(), DEFAULT_DEDUP_TOL).unwrap()
}

/// Eigenvalues listed for the 10-vertex example, Perron value and repeats included.
pub fn ten_vertex_example() -> Vec<f64> {
    let r19 = 19f64.sqrt();
    vec![
        1.0,
        (1.0 + r19) / 6.0,
        0.5358,
        0.0,
        0.0,
        -1.0 / 3.0,
        -1.0 / 3.0,
        -0.3765,
        (1.0 - r19) / 6.0,
        -0.8259,
    ]
}

/// Eigenvalues listed for the 7-vertex example.
pub fn seven_vertex_example() -> Vec<f64> {
    let r249 = 249f64.sqrt();
    vec![1.0, (-3.0 + r249) / 24.0, 0.25, 0.0, -0.5, -0.5, (-3.0 - r249) / 24.0]
}

pub fn literal_mesh(values: &[f64]) -> SpectralMesh {
    SpectralMesh::from_literal(
        MatrixKind::DegreeAdjacency,
        MeshSide::Above,
        1.0,
        values,
        DEFAULT_DEDUP_TOL,
    )
    .unwrap()
}

/// Divided differences of `y` over `x` of every order, each scaled by the largest
/// weight in its defining combination. Entry r is the order-r difference.
pub fn scaled_divided_differences(x: &[f64], y: &[f64]) -> Vec<f64> {
    (0..x.len())
        .map(|r| {
            let w: Vec<f64> = (0..=r)
                .map(|i| 1.0 / (0..=r).filter(|&j| j != i).map(|j| x[i] - x[j]).product::<f64>())
                .collect();
            let scale = w.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            w.iter().zip(y).map(|(a, b)| a * b).sum::<f64>() / scale
        })
        .collect()
}
