mod common;

use common::{mesh_of, random_graph};
use condiam_core::altpoly::{apply_to_matrix, polynomial_table};
use condiam_core::graph::{distance_matrix, generate, Family};
use condiam_core::spectral::{degree_adjacency_matrix, graph_spectrum, perron_vector, SymMatrix};
use condiam_core::MatrixKind;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn degree_adjacency_spectrum_bounds() {
    for seed in 0..200 {
        let g = random_graph(seed, 12);
        let s = graph_spectrum(&g, MatrixKind::DegreeAdjacency).unwrap();
        let v = s.values();
        assert!((v[0] - 1.0).abs() < 1e-9);
        assert!(v[1] < 1.0 - 1e-9, "connected graph, seed {seed}");
        assert!(v.iter().all(|&x| (-1.0 - 1e-9..=1.0 + 1e-9).contains(&x)));
        assert!(s.sum().abs() < g.n() as f64 * 1e-9);
    }
}

#[test]
fn bipartite_graphs_have_minus_one() {
    let graphs = [
        generate(Family::Cycle, 4, 0).unwrap(),
        generate(Family::Cycle, 10, 0).unwrap(),
        generate(Family::Star, 6, 0).unwrap(),
        generate(Family::Path, 2, 0).unwrap(),
        generate(Family::Path, 7, 0).unwrap(),
    ];
    for g in &graphs {
        let v = graph_spectrum(g, MatrixKind::DegreeAdjacency).unwrap();
        assert!((v.values().last().unwrap() + 1.0).abs() < 1e-9);
    }
}

#[test]
fn laplacian_spectrum_is_one_minus_adjacency() {
    for seed in 0..100 {
        let g = random_graph(seed, 12);
        let a = graph_spectrum(&g, MatrixKind::DegreeAdjacency).unwrap();
        let l = graph_spectrum(&g, MatrixKind::ChungLaplacian).unwrap();
        let mut mu: Vec<f64> = a.values().iter().map(|x| 1.0 - x).collect();
        mu.sort_by(|x, y| y.total_cmp(x));
        for (x, y) in mu.iter().zip(l.values()) {
            assert!((x - y).abs() < 1e-9);
        }
        assert!((l.sum() - g.n() as f64).abs() < g.n() as f64 * 1e-9);
    }
}

#[test]
fn perron_vector_is_fixed() {
    for seed in 0..50 {
        let g = random_graph(seed, 12);
        let nu = perron_vector(&g);
        let image = degree_adjacency_matrix(&g).mul_vec(nu.entries());
        let residual: f64 = image
            .iter()
            .zip(nu.entries())
            .map(|(a, b)| (a - b).powi(2))
            .sum::<f64>()
            .sqrt();
        assert!(residual < 1e-10);
        assert_eq!(nu.norm_sq(), (2 * g.m()) as f64);
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

#[test]
fn polynomial_norm_on_the_perron_complement() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for seed in 0..20 {
        let g = random_graph(seed, 12);
        let a = degree_adjacency_matrix(&g);
        let nu = perron_vector(&g);
        for p in polynomial_table(&mesh_of(&g, MatrixKind::DegreeAdjacency)).unwrap() {
            let pa = apply_to_matrix(&p, &a);
            for _ in 0..100 {
                let mut z: Vec<f64> = (0..g.n()).map(|_| rng.random_range(-1.0..1.0)).collect();
                nu.project_out(&mut z);
                let lhs = norm(&pa.mul_vec(&z));
                assert!(
                    lhs <= p.sup_norm() * norm(&z) * (1.0 + 1e-8),
                    "seed {seed} k={}",
                    p.degree()
                );
            }
        }
    }
}

/// Σ c_i A^i by Horner.
fn matrix_polynomial(a: &SymMatrix, coeffs: &[f64]) -> Vec<f64> {
    let n = a.n();
    let mut acc = vec![0.0; n * n];
    for &c in coeffs.iter().rev() {
        let mut next = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                next[i * n + j] = (0..n).map(|l| acc[i * n + l] * a.get(l, j)).sum();
            }
            next[i * n + i] += c;
        }
        acc = next;
    }
    acc
}

#[test]
fn polynomials_of_degree_k_vanish_beyond_distance_k() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for seed in 0..20 {
        let g = random_graph(seed, 10);
        let a = degree_adjacency_matrix(&g);
        let d = distance_matrix(&g);
        let n = g.n();
        for k in 0..=4 {
            let coeffs: Vec<f64> = (0..=k).map(|_| rng.random_range(-2.0..2.0)).collect();
            let pa = matrix_polynomial(&a, &coeffs);
            for i in 0..n {
                for j in 0..n {
                    if d.get(i, j) > k {
                        assert!(pa[i * n + j].abs() < 1e-10);
                    }
                }
            }
        }
        // the alternating polynomials themselves, through their own evaluation path
        for p in polynomial_table(&mesh_of(&g, MatrixKind::DegreeAdjacency)).unwrap() {
            let pa = apply_to_matrix(&p, &a);
            for i in 0..n {
                for j in 0..n {
                    if d.get(i, j) > p.degree() {
                        assert!(pa.get(i, j).abs() < 1e-10, "seed {seed} k={}", p.degree());
                    }
                }
            }
        }
    }
}
