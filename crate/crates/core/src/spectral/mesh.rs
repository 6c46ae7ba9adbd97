use serde::Serialize;

use super::{MatrixKind, SpectralError, Spectrum};

pub const DEFAULT_DEDUP_TOL: f64 = 1e-8;

/// Which side of the mesh the evaluation point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeshSide {
    /// Evaluation point above every mesh point (𝒜, eval 1).
    Above,
    /// Evaluation point below every mesh point (L, eval 0).
    Below,
}

/// Distinct non-Perron eigenvalues, ordered from the Perron side outward, plus the
/// excluded Perron value used as the evaluation point.
///
/// For 𝒜 the points are λ_1 > … > λ_b with eval 1; for L they are μ_1 < … < μ_b with
/// eval 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralMesh {
    kind: MatrixKind,
    side: MeshSide,
    eval_point: f64,
    points: Vec<f64>,
}

impl SpectralMesh {
    /// Validates an explicit mesh: finite points strictly ordered away from `eval_point`,
    /// which must lie strictly outside on `side`.
    pub fn new(kind: MatrixKind, side: MeshSide, eval_point: f64, points: Vec<f64>) -> Result<Self, SpectralError> {
        if points.is_empty() {
            return Err(SpectralError::EmptyMesh);
        }
        if !eval_point.is_finite() || points.iter().any(|p| !p.is_finite()) {
            return Err(SpectralError::UnorderedMesh);
        }
        let ordered = points.windows(2).all(|w| match side {
            MeshSide::Above => w[0] > w[1],
            MeshSide::Below => w[0] < w[1],
        });
        if !ordered {
            return Err(SpectralError::UnorderedMesh);
        }
        let outside = match side {
            MeshSide::Above => eval_point > points[0],
            MeshSide::Below => eval_point < points[0],
        };
        if !outside {
            return Err(SpectralError::EvalInsideMesh { eval: eval_point });
        }
        Ok(SpectralMesh {
            kind,
            side,
            eval_point,
            points,
        })
    }

    /// Builds a mesh from a literal list of eigenvalues: entries within `dedup_tol` of
    /// `eval_point` are dropped, near-equal entries are merged, and the rest sorted.
    pub fn from_literal(
        kind: MatrixKind,
        side: MeshSide,
        eval_point: f64,
        values: &[f64],
        dedup_tol: f64,
    ) -> Result<Self, SpectralError> {
        if dedup_tol.is_nan() || dedup_tol <= 0.0 {
            return Err(SpectralError::InvalidTolerance(dedup_tol));
        }
        let kept: Vec<f64> = values
            .iter()
            .copied()
            .filter(|v| (v - eval_point).abs() >= dedup_tol)
            .collect();
        let mut points: Vec<f64> = cluster_descending(&kept, dedup_tol)
            .into_iter()
            .map(|(v, _)| v)
            .collect();
        if side == MeshSide::Below {
            points.reverse();
        }
        Self::new(kind, side, eval_point, points)
    }

    /// Same points, reflected through the origin with the evaluation point: x ↦ −x.
    pub fn reflected(&self) -> SpectralMesh {
        SpectralMesh {
            kind: self.kind,
            side: match self.side {
                MeshSide::Above => MeshSide::Below,
                MeshSide::Below => MeshSide::Above,
            },
            eval_point: -self.eval_point,
            points: self.points.iter().map(|p| -p).collect(),
        }
    }

    /// Same points with a different evaluation point on the same side.
    pub fn with_eval_point(&self, eval_point: f64) -> Result<SpectralMesh, SpectralError> {
        Self::new(self.kind, self.side, eval_point, self.points.clone())
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn side(&self) -> MeshSide {
        self.side
    }

    pub fn eval_point(&self) -> f64 {
        self.eval_point
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// b, the number of distinct mesh points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Chains values whose consecutive gap is below `tol` into one cluster represented by
/// its mean. Output is descending.
pub(crate) fn cluster_descending(values: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut sorted = values.to_vec();
    sorted.sort_by(|x, y| y.total_cmp(x));
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i - 1] - sorted[i] >= tol {
            let group = &sorted[start..i];
            if !group.is_empty() {
                out.push((group.iter().sum::<f64>() / group.len() as f64, group.len()));
            }
            start = i;
        }
    }
    out
}

/// Removes one copy of the Perron value (1 for 𝒜, 0 for L) and merges the remaining
/// eigenvalues into distinct mesh points.
pub fn extract_mesh(spectrum: &Spectrum, dedup_tol: f64) -> Result<SpectralMesh, SpectralError> {
    if dedup_tol.is_nan() || dedup_tol <= 0.0 {
        return Err(SpectralError::InvalidTolerance(dedup_tol));
    }
    let (side, perron) = match spectrum.kind() {
        MatrixKind::DegreeAdjacency => (MeshSide::Above, 1.0),
        MatrixKind::ChungLaplacian => (MeshSide::Below, 0.0),
        MatrixKind::StandardAdjacency => {
            return Err(SpectralError::UnsupportedKind(MatrixKind::StandardAdjacency.name()))
        }
    };
    let mut values = spectrum.values().to_vec();
    if side == MeshSide::Below {
        values.reverse();
    }
    let Some((&first, rest)) = values.split_first() else {
        return Err(SpectralError::EmptyMesh);
    };
    if (first - perron).abs() >= dedup_tol {
        return Err(SpectralError::PerronMissing {
            expected: perron,
            found: first,
        });
    }
    let Some(&next) = rest.first() else {
        return Err(SpectralError::EmptyMesh);
    };
    if (next - perron).abs() < dedup_tol {
        return Err(SpectralError::PerronMultiple { expected: perron, next });
    }
    let mut points: Vec<f64> = cluster_descending(rest, dedup_tol)
        .into_iter()
        .map(|(v, _)| v)
        .collect();
    if side == MeshSide::Below {
        points.reverse();
    }
    SpectralMesh::new(spectrum.kind(), side, perron, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adjacency(values: &[f64]) -> Spectrum {
        Spectrum::from_values(MatrixKind::DegreeAdjacency, values.to_vec())
    }

    #[test]
    fn cycle_four_mesh() {
        let mesh = extract_mesh(&adjacency(&[1.0, 0.0, 0.0, -1.0]), DEFAULT_DEDUP_TOL).unwrap();
        assert_eq!(mesh.points(), &[0.0, -1.0]);
        assert_eq!(mesh.eval_point(), 1.0);
        assert_eq!(mesh.side(), MeshSide::Above);
    }

    #[test]
    fn listed_spectra_collapse_repeats() {
        let s19 = 19f64.sqrt();
        let ten = [
            1.0,
            (1.0 + s19) / 6.0,
            0.5358,
            0.0,
            0.0,
            -1.0 / 3.0,
            -1.0 / 3.0,
            -0.3765,
            (1.0 - s19) / 6.0,
            -0.8259,
        ];
        let mesh = extract_mesh(&adjacency(&ten), DEFAULT_DEDUP_TOL).unwrap();
        assert_eq!(mesh.len(), 7);
        assert!(mesh.points().contains(&(-1.0 / 3.0)));

        let s249 = 249f64.sqrt();
        let seven = [1.0, (-3.0 + s249) / 24.0, 0.25, 0.0, -0.5, -0.5, (-3.0 - s249) / 24.0];
        assert_eq!(extract_mesh(&adjacency(&seven), DEFAULT_DEDUP_TOL).unwrap().len(), 5);
    }

    #[test]
    fn laplacian_mesh_ascends_from_zero() {
        let s = Spectrum::from_values(MatrixKind::ChungLaplacian, vec![2.0, 1.0, 1.0, 0.0]);
        let mesh = extract_mesh(&s, DEFAULT_DEDUP_TOL).unwrap();
        assert_eq!(mesh.points(), &[1.0, 2.0]);
        assert_eq!(mesh.eval_point(), 0.0);
        let r = mesh.reflected();
        assert_eq!(r.points(), &[-1.0, -2.0]);
        assert_eq!(r.side(), MeshSide::Above);
    }

    #[test]
    fn perron_failures() {
        let missing = adjacency(&[0.9, 0.0, -0.9]);
        assert!(matches!(
            extract_mesh(&missing, DEFAULT_DEDUP_TOL),
            Err(SpectralError::PerronMissing { .. })
        ));
        let twice = adjacency(&[1.0, 1.0, -1.0, -1.0]);
        assert!(matches!(
            extract_mesh(&twice, DEFAULT_DEDUP_TOL),
            Err(SpectralError::PerronMultiple { .. })
        ));
        assert_eq!(
            extract_mesh(&adjacency(&[1.0]), DEFAULT_DEDUP_TOL),
            Err(SpectralError::EmptyMesh)
        );
        let standard = Spectrum::from_values(MatrixKind::StandardAdjacency, vec![2.0, 0.0, -2.0]);
        assert!(matches!(
            extract_mesh(&standard, 1e-8),
            Err(SpectralError::UnsupportedKind(_))
        ));
    }

    #[test]
    fn near_equal_values_merge_to_mean() {
        let mesh = extract_mesh(&adjacency(&[1.0, 0.2 + 4e-9, 0.2 - 4e-9, -0.7]), DEFAULT_DEDUP_TOL).unwrap();
        assert_eq!(mesh.len(), 2);
        assert!((mesh.points()[0] - 0.2).abs() < 1e-15);
        let apart = extract_mesh(&adjacency(&[1.0, 0.2 + 1e-7, 0.2, -0.7]), DEFAULT_DEDUP_TOL).unwrap();
        assert_eq!(apart.len(), 3);
    }

    #[test]
    fn literal_meshes() {
        let m = SpectralMesh::from_literal(
            MatrixKind::DegreeAdjacency,
            MeshSide::Above,
            1.0,
            &[-1.0, 0.0, 1.0, 0.0],
            1e-8,
        )
        .unwrap();
        assert_eq!(m.points(), &[0.0, -1.0]);
        assert!(matches!(
            SpectralMesh::new(MatrixKind::DegreeAdjacency, MeshSide::Above, 0.5, vec![0.7, 0.1]),
            Err(SpectralError::EvalInsideMesh { .. })
        ));
        assert_eq!(
            SpectralMesh::new(MatrixKind::DegreeAdjacency, MeshSide::Above, 1.0, vec![0.1, 0.7]),
            Err(SpectralError::UnorderedMesh)
        );
    }
}
