//! The two worked examples: eigenvalue lists in, P_k(1) and the derived bounds out.
//!
//! Reference values come from an independent LP (HiGHS over Chebyshev coefficients)
//! run before this crate existed; the published roundings are checked at 1%.

mod common;

use common::{literal_mesh, seven_vertex_example, ten_vertex_example};
use condiam_core::altpoly::{closed_form_p1, interpolated_pbminus1_value, polynomial_table};
use condiam_core::bounds::{max_separated_set_size, min_certified_k, threshold_general};
use condiam_core::BoundQuery;

const SEVEN_REFERENCE: [f64; 5] = [1.0, 1.7110554764160901, 5.0, 15.17121398046206, 58.142857142857125];
const TEN_REFERENCE: [f64; 7] = [
    1.0,
    1.1243130647984205,
    1.5289692707034066,
    2.3396923066290083,
    3.894538694384675,
    12.210330206850696,
    266.9782718848165,
];

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn ten_values() -> Vec<f64> {
    let mesh = literal_mesh(&ten_vertex_example());
    polynomial_table(&mesh)
        .unwrap()
        .iter()
        .map(|p| p.extremal_value())
        .collect()
}

#[test]
fn seven_vertex_mesh_dedups_to_five_points() {
    let mesh = literal_mesh(&seven_vertex_example());
    assert_eq!(mesh.len(), 5);
    assert!(mesh.points().iter().all(|&x| x < 1.0));
}

#[test]
fn seven_vertex_values() {
    let mesh = literal_mesh(&seven_vertex_example());
    let got: Vec<f64> = polynomial_table(&mesh)
        .unwrap()
        .iter()
        .map(|p| p.extremal_value())
        .collect();
    for (k, (&g, &want)) in got.iter().zip(&SEVEN_REFERENCE).enumerate() {
        assert!(rel(g, want) < 1e-6, "P_{k}(1) = {g}, reference {want}");
    }
    for (k, published) in [(1, 1.7), (2, 5.0), (3, 15.2), (4, 58.0)] {
        assert!(
            rel(got[k], published) < 0.01,
            "P_{k}(1) = {}, published {published}",
            got[k]
        );
    }
}

#[test]
fn ten_vertex_mesh_dedups_to_seven_points() {
    assert_eq!(literal_mesh(&ten_vertex_example()).len(), 7);
}

#[test]
fn ten_vertex_values() {
    let got = ten_values();
    for (k, (&g, &want)) in got.iter().zip(&TEN_REFERENCE).enumerate() {
        assert!(rel(g, want) < 1e-6, "P_{k}(1) = {g}, reference {want}");
    }
    for (k, published) in [(3, 2.33), (4, 3.89), (5, 12.2), (6, 266.5)] {
        assert!(
            rel(got[k], published) < 0.01,
            "P_{k}(1) = {}, published {published}",
            got[k]
        );
    }
}

#[test]
fn closed_forms_on_both_examples() {
    for (values, top) in [
        (seven_vertex_example(), 58.14285714285717),
        (ten_vertex_example(), 266.9782718848147),
    ] {
        let mesh = literal_mesh(&values);
        let table = polynomial_table(&mesh).unwrap();
        let p1 = closed_form_p1(&mesh).unwrap().extremal_value();
        assert!(rel(table[1].extremal_value(), p1) < 1e-8);
        let interp = interpolated_pbminus1_value(&mesh);
        assert!(rel(interp, top) < 1e-9);
        assert!(rel(table[mesh.len() - 1].extremal_value(), interp) < 1e-6);
    }
    // 58 is 407/7 exactly on the seven-vertex mesh
    let interp = interpolated_pbminus1_value(&literal_mesh(&seven_vertex_example()));
    assert!((interp - 407.0 / 7.0).abs() < 1e-9);
}

/// The five diameter claims and two separated-set claims for the ten-vertex example,
/// as functions of the (unstated) edge count m.
fn ten_vertex_claims(m: usize, pk: &[f64]) -> [bool; 7] {
    let mink = |a, b, s, t| min_certified_k(pk, threshold_general(m, &BoundQuery::new(a, b, s, t)).ok()?, 0.0);
    [
        mink(2, 2, 1, 1) == Some(6),
        mink(2, 3, 1, 1) == Some(5),
        mink(2, 3, 1, 2) == Some(5),
        mink(3, 3, 2, 2) == Some(4),
        mink(2, 2, 3, 3) == Some(4),
        max_separated_set_size(m, 2, pk[5]) == 1,
        max_separated_set_size(m, 3, pk[3]) == 2,
    ]
}

#[test]
fn ten_vertex_chain_with_fourteen_edges() {
    let pk = ten_values();
    assert_eq!(ten_vertex_claims(14, &pk), [true; 7]);
}

#[test]
fn fourteen_is_the_only_consistent_edge_count() {
    let pk = ten_values();
    let consistent: Vec<usize> = (9..=45).filter(|&m| ten_vertex_claims(m, &pk) == [true; 7]).collect();
    assert_eq!(consistent, vec![14]);
}
