use super::{AltPolyError, AlternatingPolynomial, SolveMethod};
use crate::spectral::SpectralMesh;

/// P_1 in closed form: the affine map sending the outermost mesh points to ±1,
/// +1 at the point nearest the evaluation point.
pub fn closed_form_p1(mesh: &SpectralMesh) -> Result<AlternatingPolynomial, AltPolyError> {
    let b = mesh.len();
    if b < 2 {
        return Err(AltPolyError::MeshTooSmall { need: 2, b });
    }
    let pts = mesh.points();
    let (near, far) = (pts[0], pts[b - 1]);
    let values: Vec<f64> = pts.iter().map(|&x| (2.0 * x - near - far) / (near - far)).collect();
    Ok(AlternatingPolynomial::from_values(1, SolveMethod::ClosedForm, mesh, &values).0)
}

/// P_{b−1}(x_0) = Σ_i π_0 / π_i with π_i = Π_{j≠i} |x_i − x_j| over {x_0} ∪ mesh.
///
/// Equivalent to interpolating +1, −1, +1, … on the mesh (from the evaluation point
/// outward) and evaluating at x_0.
pub fn interpolated_pbminus1_value(mesh: &SpectralMesh) -> f64 {
    let all: Vec<f64> = std::iter::once(mesh.eval_point())
        .chain(mesh.points().iter().copied())
        .collect();
    let pi = |i: usize| -> f64 {
        all.iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| (all[i] - x).abs())
            .product()
    };
    let pi0 = pi(0);
    (1..all.len()).map(|i| pi0 / pi(i)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{MatrixKind, MeshSide};

    fn mesh(points: &[f64]) -> SpectralMesh {
        SpectralMesh::new(MatrixKind::DegreeAdjacency, MeshSide::Above, 1.0, points.to_vec()).unwrap()
    }

    #[test]
    fn p1_closed_form_values() {
        let p = closed_form_p1(&mesh(&[0.0, -1.0])).unwrap();
        assert!((p.extremal_value() - 3.0).abs() < 1e-14);
        assert!((p.evaluate(0.0) - 1.0).abs() < 1e-14);
        let a = 0.4;
        let p = closed_form_p1(&mesh(&[a, 0.1, -a])).unwrap();
        assert!((p.extremal_value() - 1.0 / a).abs() < 1e-12);
        assert_eq!(
            closed_form_p1(&mesh(&[0.2])).unwrap_err(),
            AltPolyError::MeshTooSmall { need: 2, b: 1 }
        );
    }

    #[test]
    fn interpolation_oracle_small_cases() {
        assert!((interpolated_pbminus1_value(&mesh(&[0.0, -1.0])) - 3.0).abs() < 1e-14);
        assert_eq!(interpolated_pbminus1_value(&mesh(&[0.3])), 1.0);
        // C_6 mesh: 2 + 2 + 1
        assert!((interpolated_pbminus1_value(&mesh(&[0.5, -0.5, -1.0])) - 5.0).abs() < 1e-13);
    }
}
