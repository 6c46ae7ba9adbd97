//! Dense two-phase primal simplex with Bland's anti-cycling rule.
//!
//! Problems are stated as `maximize c·x` subject to linear rows and per-variable bounds.
//! Internally every variable is shifted/split to be nonnegative, finite upper bounds
//! become rows, and phase one drives artificial variables to zero.

use serde::Serialize;

const PIVOT_TOL: f64 = 1e-11;
const FEASIBILITY_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_ITERATIONS: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinearConstraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// `maximize objective·x` subject to `constraints` and `lower ≤ x ≤ upper`
/// (bounds may be infinite).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpProblem {
    pub objective: Vec<f64>,
    pub constraints: Vec<LinearConstraint>,
    pub bounds: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Objective at `x`; meaningful only when optimal.
    pub value: f64,
    pub x: Vec<f64>,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LpError {
    #[error("constraint {row} has {found} coefficients, expected {expected}")]
    Dimension { row: usize, expected: usize, found: usize },
    #[error("variable {var} has inconsistent or NaN bounds [{lo}, {hi}]")]
    Bounds { var: usize, lo: f64, hi: f64 },
    #[error("simplex exceeded {0} iterations")]
    IterationLimit(usize),
}

/// How an original variable is rebuilt from nonnegative internal columns.
#[derive(Debug, Clone, Copy)]
enum VarMap {
    /// x = offset + col
    Shift { col: usize, offset: f64 },
    /// x = offset − col
    Mirror { col: usize, offset: f64 },
    /// x = pos − neg
    Split { pos: usize, neg: usize },
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    basis: Vec<usize>,
    cols: usize,
    iterations: usize,
    max_iterations: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c];
        for v in &mut self.rows[r] {
            *v /= p;
        }
        self.rhs[r] /= p;
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r]);
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][c];
            if f != 0.0 {
                for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
                self.rows[i][c] = 0.0;
                self.rhs[i] -= f * pivot_rhs;
            }
        }
        self.basis[r] = c;
    }

    fn reduced_costs(&self, cost: &[f64]) -> Vec<f64> {
        let mut d = cost.to_vec();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = cost[b];
            if cb != 0.0 {
                for (dj, aij) in d.iter_mut().zip(row) {
                    *dj -= cb * aij;
                }
            }
        }
        d
    }

    /// Maximizes `cost` over the current basis. Columns with `allowed[j] == false` never enter.
    fn optimize(&mut self, cost: &[f64], allowed: &[bool]) -> Result<Outcome, LpError> {
        loop {
            let d = self.reduced_costs(cost);
            // Bland: lowest-index improving column
            let Some(enter) = (0..self.cols).find(|&j| allowed[j] && d[j] > FEASIBILITY_TOL) else {
                return Ok(Outcome::Optimal);
            };
            let mut leave: Option<(usize, f64)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                let a = row[enter];
                if a > PIVOT_TOL {
                    let ratio = self.rhs[r].max(0.0) / a;
                    let better = match leave {
                        None => true,
                        Some((lr, best)) => {
                            ratio < best - 1e-12 || (ratio <= best + 1e-12 && self.basis[r] < self.basis[lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return Ok(Outcome::Unbounded);
            };
            if self.iterations == self.max_iterations {
                return Err(LpError::IterationLimit(self.max_iterations));
            }
            self.iterations += 1;
            self.pivot(r, enter);
        }
    }
}

pub fn simplex_solve(lp: &LpProblem) -> Result<LpSolution, LpError> {
    simplex_solve_with_limit(lp, DEFAULT_MAX_ITERATIONS)
}

pub fn simplex_solve_with_limit(lp: &LpProblem, max_iterations: usize) -> Result<LpSolution, LpError> {
    let nvars = lp.objective.len();
    if lp.bounds.len() != nvars {
        return Err(LpError::Dimension {
            row: usize::MAX,
            expected: nvars,
            found: lp.bounds.len(),
        });
    }
    for (row, c) in lp.constraints.iter().enumerate() {
        if c.coeffs.len() != nvars {
            return Err(LpError::Dimension {
                row,
                expected: nvars,
                found: c.coeffs.len(),
            });
        }
    }

    // Map original variables onto nonnegative columns.
    let mut maps = Vec::with_capacity(nvars);
    let mut ncols = 0;
    let mut upper_rows: Vec<(usize, f64)> = Vec::new();
    for (var, &(lo, hi)) in lp.bounds.iter().enumerate() {
        if lo.is_nan() || hi.is_nan() || lo > hi || lo == f64::INFINITY || hi == f64::NEG_INFINITY {
            return Err(LpError::Bounds { var, lo, hi });
        }
        let map = if lo.is_finite() {
            if hi.is_finite() {
                upper_rows.push((ncols, hi - lo));
            }
            VarMap::Shift { col: ncols, offset: lo }
        } else if hi.is_finite() {
            VarMap::Mirror { col: ncols, offset: hi }
        } else {
            ncols += 1;
            VarMap::Split {
                pos: ncols - 1,
                neg: ncols,
            }
        };
        ncols += 1;
        maps.push(map);
    }

    // Rows over internal columns: (coeffs, relation, rhs).
    let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::new();
    for c in &lp.constraints {
        let mut coeffs = vec![0.0; ncols];
        let mut rhs = c.rhs;
        for (a, map) in c.coeffs.iter().zip(&maps) {
            match *map {
                VarMap::Shift { col, offset } => {
                    coeffs[col] += a;
                    rhs -= a * offset;
                }
                VarMap::Mirror { col, offset } => {
                    coeffs[col] -= a;
                    rhs -= a * offset;
                }
                VarMap::Split { pos, neg } => {
                    coeffs[pos] += a;
                    coeffs[neg] -= a;
                }
            }
        }
        rows.push((coeffs, c.relation, rhs));
    }
    for &(col, width) in &upper_rows {
        let mut coeffs = vec![0.0; ncols];
        coeffs[col] = 1.0;
        rows.push((coeffs, Relation::Le, width));
    }
    for row in &mut rows {
        if row.2 < 0.0 {
            row.0.iter_mut().for_each(|v| *v = -*v);
            row.2 = -row.2;
            row.1 = match row.1 {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    // Slack/surplus then artificial columns.
    let nslack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let nart = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let total = ncols + nslack + nart;
    let mut tab = Tableau {
        rows: Vec::with_capacity(rows.len()),
        rhs: Vec::with_capacity(rows.len()),
        basis: Vec::with_capacity(rows.len()),
        cols: total,
        iterations: 0,
        max_iterations,
    };
    let (mut next_slack, mut next_art) = (ncols, ncols + nslack);
    for (coeffs, rel, rhs) in rows {
        let mut full = coeffs;
        full.resize(total, 0.0);
        match rel {
            Relation::Le => {
                full[next_slack] = 1.0;
                tab.basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                full[next_slack] = -1.0;
                next_slack += 1;
                full[next_art] = 1.0;
                tab.basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                full[next_art] = 1.0;
                tab.basis.push(next_art);
                next_art += 1;
            }
        }
        tab.rows.push(full);
        tab.rhs.push(rhs);
    }
    let is_artificial = |j: usize| j >= ncols + nslack;

    if nart > 0 {
        let cost: Vec<f64> = (0..total).map(|j| if is_artificial(j) { -1.0 } else { 0.0 }).collect();
        let allowed = vec![true; total];
        tab.optimize(&cost, &allowed)?;
        let infeasibility: f64 = tab
            .basis
            .iter()
            .zip(&tab.rhs)
            .filter(|(&b, _)| is_artificial(b))
            .map(|(_, &v)| v)
            .sum();
        if infeasibility > FEASIBILITY_TOL {
            return Ok(LpSolution {
                status: LpStatus::Infeasible,
                value: f64::NAN,
                x: vec![f64::NAN; nvars],
                iterations: tab.iterations,
            });
        }
        // Drive remaining (zero-valued) artificials out; drop rows that are redundant.
        let mut r = 0;
        while r < tab.rows.len() {
            if is_artificial(tab.basis[r]) {
                if let Some(c) = (0..ncols + nslack).find(|&j| tab.rows[r][j].abs() > 1e-9) {
                    tab.pivot(r, c);
                } else {
                    tab.rows.remove(r);
                    tab.rhs.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
            r += 1;
        }
    }

    let mut cost = vec![0.0; total];
    for (c, map) in lp.objective.iter().zip(&maps) {
        match *map {
            VarMap::Shift { col, .. } => cost[col] += c,
            VarMap::Mirror { col, .. } => cost[col] -= c,
            VarMap::Split { pos, neg } => {
                cost[pos] += c;
                cost[neg] -= c;
            }
        }
    }
    let allowed: Vec<bool> = (0..total).map(|j| !is_artificial(j)).collect();
    let outcome = tab.optimize(&cost, &allowed)?;

    let mut internal = vec![0.0; total];
    for (&b, &v) in tab.basis.iter().zip(&tab.rhs) {
        internal[b] = v.max(0.0);
    }
    let x: Vec<f64> = maps
        .iter()
        .map(|map| match *map {
            VarMap::Shift { col, offset } => offset + internal[col],
            VarMap::Mirror { col, offset } => offset - internal[col],
            VarMap::Split { pos, neg } => internal[pos] - internal[neg],
        })
        .collect();
    let status = match outcome {
        Outcome::Optimal => LpStatus::Optimal,
        Outcome::Unbounded => LpStatus::Unbounded,
    };
    let value = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    Ok(LpSolution {
        status,
        value,
        x,
        iterations: tab.iterations,
    })
}

impl LpProblem {
    /// Largest violation of any row or bound at `x` (0 when feasible).
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let mut worst: f64 = 0.0;
        for c in &self.constraints {
            let lhs: f64 = c.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
            let v = match c.relation {
                Relation::Le => lhs - c.rhs,
                Relation::Ge => c.rhs - lhs,
                Relation::Eq => (lhs - c.rhs).abs(),
            };
            worst = worst.max(v);
        }
        for (&(lo, hi), &v) in self.bounds.iter().zip(x) {
            worst = worst.max(lo - v).max(v - hi);
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(coeffs: &[f64], relation: Relation, rhs: f64) -> LinearConstraint {
        LinearConstraint {
            coeffs: coeffs.to_vec(),
            relation,
            rhs,
        }
    }

    #[test]
    fn single_upper_bound() {
        let lp = LpProblem {
            objective: vec![1.0],
            constraints: vec![row(&[1.0], Relation::Le, 1.0)],
            bounds: vec![(f64::NEG_INFINITY, f64::INFINITY)],
        };
        let sol = simplex_solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn box_constrained_sum() {
        let lp = LpProblem {
            objective: vec![1.0, 1.0],
            constraints: vec![],
            bounds: vec![(-1.0, 1.0); 2],
        };
        let sol = simplex_solve(&lp).unwrap();
        assert!((sol.value - 2.0).abs() < 1e-12);
        assert_eq!(sol.x, vec![1.0, 1.0]);
    }

    #[test]
    fn classic_two_variable_program() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        let lp = LpProblem {
            objective: vec![3.0, 5.0],
            constraints: vec![
                row(&[1.0, 0.0], Relation::Le, 4.0),
                row(&[0.0, 2.0], Relation::Le, 12.0),
                row(&[3.0, 2.0], Relation::Le, 18.0),
            ],
            bounds: vec![(0.0, f64::INFINITY); 2],
        };
        let sol = simplex_solve(&lp).unwrap();
        assert!((sol.value - 36.0).abs() < 1e-9);
        assert!((sol.x[0] - 2.0).abs() < 1e-9 && (sol.x[1] - 6.0).abs() < 1e-9);
        assert!(lp.max_violation(&sol.x) < 1e-9);
    }

    #[test]
    fn equalities_and_ge_rows() {
        // max -x - y, x + y = 3, x >= 1 (via row), y <= 5 mirrored bound
        let lp = LpProblem {
            objective: vec![-1.0, 2.0],
            constraints: vec![row(&[1.0, 1.0], Relation::Eq, 3.0), row(&[1.0, 0.0], Relation::Ge, 1.0)],
            bounds: vec![(f64::NEG_INFINITY, f64::INFINITY), (f64::NEG_INFINITY, 5.0)],
        };
        let sol = simplex_solve(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.x[0] - 1.0).abs() < 1e-9 && (sol.x[1] - 2.0).abs() < 1e-9);
        assert!((sol.value - 3.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let lp = LpProblem {
            objective: vec![1.0],
            constraints: vec![row(&[1.0], Relation::Ge, 2.0), row(&[1.0], Relation::Le, 1.0)],
            bounds: vec![(0.0, f64::INFINITY)],
        };
        assert_eq!(simplex_solve(&lp).unwrap().status, LpStatus::Infeasible);
        let lp = LpProblem {
            objective: vec![1.0],
            constraints: vec![],
            bounds: vec![(0.0, f64::INFINITY)],
        };
        assert_eq!(simplex_solve(&lp).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn rejects_bad_shapes() {
        let lp = LpProblem {
            objective: vec![1.0],
            constraints: vec![row(&[1.0, 2.0], Relation::Le, 1.0)],
            bounds: vec![(0.0, 1.0)],
        };
        assert!(matches!(simplex_solve(&lp), Err(LpError::Dimension { row: 0, .. })));
        let lp = LpProblem {
            objective: vec![1.0],
            constraints: vec![],
            bounds: vec![(2.0, 1.0)],
        };
        assert!(matches!(simplex_solve(&lp), Err(LpError::Bounds { .. })));
    }

    #[test]
    fn iteration_guard() {
        let lp = LpProblem {
            objective: vec![1.0, 1.0],
            constraints: vec![],
            bounds: vec![(-1.0, 1.0); 2],
        };
        assert_eq!(simplex_solve_with_limit(&lp, 0), Err(LpError::IterationLimit(0)));
    }

    #[test]
    fn degenerate_program_terminates() {
        // Beale's cycling example; Bland's rule must terminate at value 1/20.
        let lp = LpProblem {
            objective: vec![0.75, -150.0, 0.02, -6.0],
            constraints: vec![
                row(&[0.25, -60.0, -0.04, 9.0], Relation::Le, 0.0),
                row(&[0.5, -90.0, -0.02, 3.0], Relation::Le, 0.0),
                row(&[0.0, 0.0, 1.0, 0.0], Relation::Le, 1.0),
            ],
            bounds: vec![(0.0, f64::INFINITY); 4],
        };
        let sol = simplex_solve(&lp).unwrap();
        assert!((sol.value - 0.05).abs() < 1e-12);
    }
}
