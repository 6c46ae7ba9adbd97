//! k-alternating polynomials on an eigenvalue mesh.
//!
//! P_k is the polynomial of degree at most k that maximizes its value at the evaluation
//! point subject to |P(x_j)| ≤ 1 on every mesh point. It is found by linear programming
//! over the mesh values y_j = P(x_j): the box |y_j| ≤ 1 bounds the variables, and "degree
//! at most k" is the vanishing of every divided difference of order k+1 … b−1. The
//! objective is Σ ℓ_j(x_0) y_j with ℓ_j the Lagrange basis on the mesh.
//!
//! When that program is too ill-conditioned to certify (large meshes with tight
//! clusters), a second program over Chebyshev coefficients is tried, and at k = b − 1 the
//! sign-pattern interpolant is used directly. Whatever route produced it, a polynomial is
//! accepted only if its Newton form stays within 1 on the mesh and equioscillates on k + 1
//! points starting with +1 next to the evaluation point, which characterizes P_k.
//!
//! All work happens in a normalized coordinate t = scale·x + shift that sends the mesh
//! onto [−1, 1] with the evaluation point above 1. For a mesh whose evaluation point lies
//! below (the Laplacian side) the map first reflects x ↦ −x; the problem is invariant
//! under affine changes of variable, so extremal values are unaffected.

mod closed_form;
mod simplex;

pub use closed_form::{closed_form_p1, interpolated_pbminus1_value};
pub use simplex::{
    simplex_solve, simplex_solve_with_limit, LinearConstraint, LpError, LpProblem, LpSolution, LpStatus, Relation,
    DEFAULT_MAX_ITERATIONS,
};

use serde::Serialize;

use crate::spectral::{MeshSide, SpectralMesh, SymMatrix};

/// Tolerance for certifying that a mesh value sits on ±1.
pub const CERT_TOL: f64 = 1e-6;
/// Tighter threshold used when choosing interpolation nodes among the extremal points.
const NODE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AltPolyError {
    #[error("degree {k} out of range for a mesh of {b} points (0..={max})", max = .b.saturating_sub(1))]
    DegreeOutOfRange { k: usize, b: usize },
    #[error("closed form needs at least {need} mesh points, mesh has {b}")]
    MeshTooSmall { need: usize, b: usize },
    #[error("linear program failed: {0}")]
    Lp(#[from] LpError),
    #[error("linear program for k={k} ended {status:?} (this program is always bounded and feasible)")]
    LpStatus { k: usize, status: LpStatus },
    #[error("P_{k} failed certification: sup norm {sup_norm}, alternation length {alternation}")]
    Certification {
        k: usize,
        sup_norm: f64,
        alternation: usize,
    },
    #[error("P_{k}: no solver route produced a certified polynomial ({last})")]
    Unsolved { k: usize, last: Box<AltPolyError> },
}

/// t = scale·x + shift.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Affine {
    pub scale: f64,
    pub shift: f64,
}

impl Affine {
    pub fn apply(&self, x: f64) -> f64 {
        self.scale * x + self.shift
    }

    /// Map sending the mesh onto [−1, 1] with the evaluation point above 1.
    fn normalizing(mesh: &SpectralMesh) -> Affine {
        let sign = match mesh.side() {
            MeshSide::Above => 1.0,
            MeshSide::Below => -1.0,
        };
        let pts = mesh.points();
        // after reflection, first point is the largest, last the smallest
        let (hi, lo) = (sign * pts[0], sign * pts[pts.len() - 1]);
        if pts.len() == 1 {
            return Affine {
                scale: sign,
                shift: -hi + 1.0,
            };
        }
        let scale = 2.0 / (hi - lo);
        Affine {
            scale: sign * scale,
            shift: -(hi + lo) / (hi - lo),
        }
    }
}

/// Which program produced a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMethod {
    /// P_0 = 1, no program solved.
    Constant,
    ValueSpace,
    Chebyshev,
    /// Explicit line through the two extreme mesh points (k = 1).
    ClosedForm,
    /// k = b − 1 interpolant of +1, −1, +1, … on the mesh.
    SignPattern,
}

/// P_k for one mesh, with its values on the mesh and a Newton-form representation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlternatingPolynomial {
    k: usize,
    method: SolveMethod,
    mesh: SpectralMesh,
    values_at_mesh: Vec<f64>,
    extremal_value: f64,
    affine: Affine,
    /// Newton nodes in normalized coordinates (k of them).
    nodes: Vec<f64>,
    /// Newton coefficients (k + 1 of them).
    coeffs: Vec<f64>,
}

impl AlternatingPolynomial {
    /// Interpolates `values` at k+1 of its alternation points and re-evaluates the
    /// result on the whole mesh. Also returns the largest gap between the two.
    fn from_values(k: usize, method: SolveMethod, mesh: &SpectralMesh, values: &[f64]) -> (Self, f64) {
        let affine = Affine::normalizing(mesh);
        let t: Vec<f64> = mesh.points().iter().map(|&x| affine.apply(x)).collect();
        let picks = interpolation_nodes(values, k);
        let node_t: Vec<f64> = picks.iter().map(|&i| t[i]).collect();
        let node_y: Vec<f64> = picks.iter().map(|&i| values[i]).collect();
        let coeffs = divided_differences(&node_t, &node_y);
        let nodes = node_t[..k].to_vec();
        let mut p = AlternatingPolynomial {
            k,
            method,
            mesh: mesh.clone(),
            values_at_mesh: Vec::new(),
            extremal_value: f64::NAN,
            affine,
            nodes,
            coeffs,
        };
        p.values_at_mesh = mesh.points().iter().map(|&x| p.evaluate(x)).collect();
        p.extremal_value = p.evaluate(mesh.eval_point());
        let gap = p
            .values_at_mesh
            .iter()
            .zip(values)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        (p, gap)
    }

    fn constant_one(mesh: &SpectralMesh) -> Self {
        Self::from_values(0, SolveMethod::Constant, mesh, &vec![1.0; mesh.len()]).0
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn method(&self) -> SolveMethod {
        self.method
    }

    pub fn mesh(&self) -> &SpectralMesh {
        &self.mesh
    }

    /// y_j = P_k(x_j) in mesh order.
    pub fn values_at_mesh(&self) -> &[f64] {
        &self.values_at_mesh
    }

    /// P_k at the mesh's evaluation point.
    pub fn extremal_value(&self) -> f64 {
        self.extremal_value
    }

    pub fn affine(&self) -> Affine {
        self.affine
    }

    pub fn newton_nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn newton_coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// ‖P_k‖∞ over the mesh.
    pub fn sup_norm(&self) -> f64 {
        self.values_at_mesh.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Number of mesh points where |y_j| ≥ 1 − `CERT_TOL`.
    pub fn alternation_count(&self) -> usize {
        self.values_at_mesh.iter().filter(|v| v.abs() >= 1.0 - CERT_TOL).count()
    }

    /// Length of the longest sign-alternating run of near-±1 values that starts at +1,
    /// scanning the mesh from the evaluation point outward.
    pub fn alternation_length(&self) -> usize {
        let alt = alternating_indices(&self.values_at_mesh, CERT_TOL);
        match alt.first() {
            Some(&i) if self.values_at_mesh[i] < 0.0 => alt.len() - 1,
            _ => alt.len(),
        }
    }

    /// ‖P‖∞ ≤ 1 + tol on the mesh and k+1 alternation points starting with +1. Any
    /// degree-k polynomial with this property attains the maximum at the evaluation
    /// point, so the check does not depend on how the polynomial was found.
    pub fn is_certified(&self) -> bool {
        self.sup_norm() <= 1.0 + CERT_TOL && self.alternation_length() > self.k
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        let t = self.affine.apply(x);
        let mut acc = self.coeffs[self.k];
        for r in (0..self.k).rev() {
            acc = acc * (t - self.nodes[r]) + self.coeffs[r];
        }
        acc
    }
}

/// Free-function form of [`AlternatingPolynomial::evaluate`].
pub fn evaluate(p: &AlternatingPolynomial, x: f64) -> f64 {
    p.evaluate(x)
}

/// Indices of a longest alternating-sign subsequence among entries with |v| ≥ 1 − tol.
/// Within each run of equal sign the entry of largest modulus is kept.
fn alternating_indices(values: &[f64], tol: f64) -> Vec<usize> {
    let mut picked: Vec<usize> = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        if v.abs() < 1.0 - tol {
            continue;
        }
        match picked.last() {
            Some(&last) if values[last].signum() == v.signum() => {
                if v.abs() > values[last].abs() {
                    *picked.last_mut().unwrap() = i;
                }
            }
            _ => picked.push(i),
        }
    }
    picked
}

/// k+1 mesh indices to interpolate through: the alternation points when they are
/// available, otherwise evenly spread indices.
fn interpolation_nodes(values: &[f64], k: usize) -> Vec<usize> {
    let alt = alternating_indices(values, NODE_TOL);
    if alt.len() > k {
        return alt[..k + 1].to_vec();
    }
    let b = values.len();
    if k == 0 {
        return vec![0];
    }
    (0..=k).map(|i| (i * (b - 1) + k / 2) / k).collect()
}

/// Newton divided-difference coefficients f[x_0], f[x_0,x_1], …
fn divided_differences(x: &[f64], y: &[f64]) -> Vec<f64> {
    let mut table = y.to_vec();
    let n = x.len();
    for order in 1..n {
        for i in (order..n).rev() {
            table[i] = (table[i] - table[i - 1]) / (x[i] - x[i - order]);
        }
    }
    table
}

/// Row weights w_i with f[x_0..x_r] = Σ_{i≤r} w_i f(x_i).
fn divided_difference_weights(x: &[f64], r: usize) -> Vec<f64> {
    (0..=r)
        .map(|i| {
            let denom: f64 = (0..=r).filter(|&j| j != i).map(|j| x[i] - x[j]).product();
            1.0 / denom
        })
        .collect()
}

/// ℓ_j(at) for the Lagrange basis on `x`.
fn lagrange_basis_at(x: &[f64], at: f64) -> Vec<f64> {
    (0..x.len())
        .map(|j| {
            (0..x.len())
                .filter(|&i| i != j)
                .map(|i| (at - x[i]) / (x[j] - x[i]))
                .product()
        })
        .collect()
}

/// The value-space linear program for P_k in normalized coordinates.
pub fn alternating_lp(mesh: &SpectralMesh, k: usize) -> LpProblem {
    let affine = Affine::normalizing(mesh);
    let t: Vec<f64> = mesh.points().iter().map(|&x| affine.apply(x)).collect();
    let b = t.len();
    let constraints = (k + 1..b)
        .map(|r| {
            let mut coeffs = divided_difference_weights(&t, r);
            let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
            coeffs.iter_mut().for_each(|c| *c /= scale);
            coeffs.resize(b, 0.0);
            LinearConstraint {
                coeffs,
                relation: Relation::Eq,
                rhs: 0.0,
            }
        })
        .collect();
    LpProblem {
        objective: lagrange_basis_at(&t, affine.apply(mesh.eval_point())),
        constraints,
        bounds: vec![(-1.0, 1.0); b],
    }
}

/// The same program over Chebyshev coefficients c_0 … c_k of P(t) = Σ c_i T_i(t): free
/// variables, two inequality rows per mesh point.
pub fn chebyshev_lp(mesh: &SpectralMesh, k: usize) -> LpProblem {
    let affine = Affine::normalizing(mesh);
    let mut constraints = Vec::with_capacity(2 * mesh.len());
    for &x in mesh.points() {
        let row = chebyshev_row(affine.apply(x), k);
        constraints.push(LinearConstraint {
            coeffs: row.clone(),
            relation: Relation::Le,
            rhs: 1.0,
        });
        constraints.push(LinearConstraint {
            coeffs: row,
            relation: Relation::Ge,
            rhs: -1.0,
        });
    }
    LpProblem {
        objective: chebyshev_row(affine.apply(mesh.eval_point()), k),
        constraints,
        bounds: vec![(f64::NEG_INFINITY, f64::INFINITY); k + 1],
    }
}

/// T_0(t) … T_k(t).
fn chebyshev_row(t: f64, k: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(k + 1);
    row.push(1.0);
    if k >= 1 {
        row.push(t);
    }
    for i in 2..=k {
        row.push(2.0 * t * row[i - 1] - row[i - 2]);
    }
    row
}

fn certified(
    k: usize,
    method: SolveMethod,
    mesh: &SpectralMesh,
    values: &[f64],
) -> Result<AlternatingPolynomial, AltPolyError> {
    let clamped: Vec<f64> = values.iter().map(|v| v.clamp(-1.0, 1.0)).collect();
    let (p, gap) = AlternatingPolynomial::from_values(k, method, mesh, &clamped);
    if gap > CERT_TOL || !p.is_certified() {
        return Err(AltPolyError::Certification {
            k,
            sup_norm: p.sup_norm().max(1.0 + gap),
            alternation: p.alternation_length(),
        });
    }
    Ok(p)
}

fn solve_value_space(mesh: &SpectralMesh, k: usize) -> Result<AlternatingPolynomial, AltPolyError> {
    let sol = simplex_solve(&alternating_lp(mesh, k))?;
    if sol.status != LpStatus::Optimal {
        return Err(AltPolyError::LpStatus { k, status: sol.status });
    }
    certified(k, SolveMethod::ValueSpace, mesh, &sol.x)
}

fn solve_chebyshev(mesh: &SpectralMesh, k: usize) -> Result<AlternatingPolynomial, AltPolyError> {
    let sol = simplex_solve(&chebyshev_lp(mesh, k))?;
    if sol.status != LpStatus::Optimal {
        return Err(AltPolyError::LpStatus { k, status: sol.status });
    }
    let affine = Affine::normalizing(mesh);
    let values: Vec<f64> = mesh
        .points()
        .iter()
        .map(|&x| {
            chebyshev_row(affine.apply(x), k)
                .iter()
                .zip(&sol.x)
                .map(|(a, c)| a * c)
                .sum()
        })
        .collect();
    certified(k, SolveMethod::Chebyshev, mesh, &values)
}

/// Solves for P_k on `mesh`, 0 ≤ k ≤ b − 1.
///
/// The value-space program is tried first; on failure the Chebyshev program and, for
/// k = b − 1, the sign-pattern interpolant.
pub fn alternating_polynomial(mesh: &SpectralMesh, k: usize) -> Result<AlternatingPolynomial, AltPolyError> {
    let b = mesh.len();
    if k >= b {
        return Err(AltPolyError::DegreeOutOfRange { k, b });
    }
    if k == 0 {
        return Ok(AlternatingPolynomial::constant_one(mesh));
    }
    if let Ok(p) = solve_value_space(mesh, k) {
        return Ok(p);
    }
    if k == b - 1 {
        let signs: Vec<f64> = (0..b).map(|j| if j % 2 == 0 { 1.0 } else { -1.0 }).collect();
        if let Ok(p) = certified(k, SolveMethod::SignPattern, mesh, &signs) {
            return Ok(p);
        }
    }
    solve_chebyshev(mesh, k).map_err(|e| AltPolyError::Unsolved { k, last: Box::new(e) })
}

/// P_0 … P_{b−1} for one mesh.
pub fn polynomial_table(mesh: &SpectralMesh) -> Result<Vec<AlternatingPolynomial>, AltPolyError> {
    (0..mesh.len()).map(|k| alternating_polynomial(mesh, k)).collect()
}

/// P(A) by Newton–Horner accumulation of matrix products.
pub fn apply_to_matrix(p: &AlternatingPolynomial, a: &SymMatrix) -> SymMatrix {
    let n = a.n();
    // T = scale·A + shift·I is the matrix in normalized coordinates
    let mut t = a.clone();
    t.scale_add_identity(p.affine.scale, p.affine.shift);
    let mut acc = SymMatrix::identity(n);
    acc.scale_add_identity(p.coeffs[p.k], 0.0);
    for r in (0..p.k).rev() {
        let mut factor = t.clone();
        factor.scale_add_identity(1.0, -p.nodes[r]);
        acc = acc.mul_commuting(&factor);
        acc.scale_add_identity(1.0, p.coeffs[r]);
    }
    acc
}
