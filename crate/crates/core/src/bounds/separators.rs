use serde::Serialize;

use super::TIE_REL_TOL;

/// ⌊x⌋ that does not drop an exact integer computed as `k − ε`.
fn guarded_floor(x: f64) -> usize {
    if x <= 0.0 {
        0
    } else {
        (x * (1.0 + TIE_REL_TOL)).floor() as usize
    }
}

/// Upper bound on s for two sets of size s, min degree ≥ α, at distance > k:
/// ⌊2m / (α(P_k + 1))⌋.
pub fn max_separated_set_size(m: usize, alpha: usize, pk_value: f64) -> usize {
    guarded_floor((2 * m) as f64 / (alpha as f64 * (pk_value + 1.0)))
}

/// Upper bound on α given the set size: ⌊2m / (s(P_k + 1))⌋.
pub fn max_separated_degree(m: usize, s: usize, pk_value: f64) -> usize {
    guarded_floor((2 * m) as f64 / (s as f64 * (pk_value + 1.0)))
}

/// Regular graphs: ⌊n / (P_k + 1)⌋.
pub fn regular_separated_size(n: usize, pk_value: f64) -> usize {
    guarded_floor(n as f64 / (pk_value + 1.0))
}

/// vs_(α,k) ≥ n − 2⌊2m / (α(P_k + 1))⌋, floored at 0.
pub fn vertex_separator_lower_bound(n: usize, m: usize, alpha: usize, pk_value: f64) -> usize {
    n.saturating_sub(2 * max_separated_set_size(m, alpha, pk_value))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeparatorReport {
    pub alpha: usize,
    pub k: usize,
    pub pk_value: f64,
    pub max_separated_set_size: usize,
    pub separator_lower_bound: usize,
}

impl SeparatorReport {
    pub fn new(n: usize, m: usize, alpha: usize, k: usize, pk_value: f64) -> Self {
        SeparatorReport {
            alpha,
            k,
            pk_value,
            max_separated_set_size: max_separated_set_size(m, alpha, pk_value),
            separator_lower_bound: vertex_separator_lower_bound(n, m, alpha, pk_value),
        }
    }
}
