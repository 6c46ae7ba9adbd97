use super::{SpectralError, SymMatrix};

pub const DEFAULT_CONVERGENCE_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_SWEEPS: usize = 100;

/// Frobenius norm of the strictly upper triangle, times √2 (i.e. of all off-diagonal entries).
fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * sum).sqrt()
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted descending.
///
/// Each sweep visits every upper-triangular pair `(p, q)` in row order and applies the
/// plane rotation that zeroes `a[p][q]`. Iteration stops once the off-diagonal norm drops
/// below `convergence_tol · max(‖A‖_F, 1)`.
pub fn jacobi_eigenvalues(a: &SymMatrix, convergence_tol: f64, max_sweeps: usize) -> Result<Vec<f64>, SpectralError> {
    if convergence_tol.is_nan() || convergence_tol <= 0.0 {
        return Err(SpectralError::InvalidTolerance(convergence_tol));
    }
    let n = a.n();
    let mut w = a.as_slice().to_vec();
    let scale = w.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let target = convergence_tol * scale;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&w, n);
        if off <= target {
            break;
        }
        if sweeps == max_sweeps {
            return Err(SpectralError::NoConvergence { sweeps, residual: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = w[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = w[p * n + p];
                let aqq = w[q * n + q];
                // tan of the rotation angle, smaller root for stability
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                w[p * n + p] = app - t * apq;
                w[q * n + q] = aqq + t * apq;
                w[p * n + q] = 0.0;
                w[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = w[r * n + p];
                    let arq = w[r * n + q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    w[r * n + p] = new_rp;
                    w[p * n + r] = new_rp;
                    w[r * n + q] = new_rq;
                    w[q * n + r] = new_rq;
                }
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| w[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}
