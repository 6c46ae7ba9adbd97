use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Graph, GraphError};

/// Probability with which `random_connected` adds each non-tree pair.
pub const EXTRA_EDGE_PROBABILITY: f64 = 0.3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cycle,
    Path,
    Complete,
    Star,
    Petersen,
    RandomConnected,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Petersen => "petersen",
            Family::RandomConnected => "random_connected",
        }
    }

    fn min_order(self) -> usize {
        match self {
            Family::Cycle => 3,
            Family::Petersen => 10,
            _ => 2,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "cycle" => Family::Cycle,
            "path" => Family::Path,
            "complete" => Family::Complete,
            "star" => Family::Star,
            "petersen" => Family::Petersen,
            "random_connected" | "random" => Family::RandomConnected,
            other => return Err(format!("unknown graph family `{other}`")),
        })
    }
}

/// Builds a member of `family` on `n` vertices. Only `RandomConnected` reads `seed`.
///
/// `Star` has vertex 0 as its center; `Petersen` ignores `n` beyond checking it is 10.
pub fn generate(family: Family, n: usize, seed: u64) -> Result<Graph, GraphError> {
    let min = family.min_order();
    if n < min || (family == Family::Petersen && n != 10) {
        return Err(GraphError::FamilyTooSmall {
            family: family.name(),
            min,
            n,
        });
    }
    let pairs: Vec<(usize, usize)> = match family {
        Family::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        Family::Path => (1..n).map(|i| (i - 1, i)).collect(),
        Family::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        Family::Star => (1..n).map(|i| (0, i)).collect(),
        Family::Petersen => (0..5)
            .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)])
            .collect(),
        Family::RandomConnected => random_connected_pairs(n, seed),
    };
    Graph::from_pairs(n, &pairs)
}

/// Uniform labelled spanning tree (random Prüfer sequence) plus independent extra edges.
fn random_connected_pairs(n: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = prufer_tree(n, &mut rng);
    let mut present = vec![false; n * n];
    for &(u, v) in &pairs {
        present[u * n + v] = true;
        present[v * n + u] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u * n + v] && rng.random_bool(EXTRA_EDGE_PROBABILITY) {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

fn prufer_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut remaining = vec![1usize; n];
    for &c in &code {
        remaining[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = remaining.iter().position(|&d| d == 1).expect("a leaf always exists");
        edges.push((leaf, c));
        remaining[leaf] = 0;
        remaining[c] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| remaining[v] == 1).collect();
    edges.push((last[0], last[1]));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distance_matrix;

    #[test]
    fn named_families() {
        let star = generate(Family::Star, 4, 0).unwrap();
        assert_eq!(star.degrees(), &[3, 1, 1, 1]);
        let c4 = generate(Family::Cycle, 4, 0).unwrap();
        assert!(c4.degrees().iter().all(|&d| d == 2));
        let k5 = generate(Family::Complete, 5, 0).unwrap();
        assert_eq!(k5.m(), 10);
        assert_eq!(generate(Family::Path, 5, 0).unwrap().m(), 4);
    }

    #[test]
    fn petersen_is_cubic_with_diameter_two() {
        let pet = generate(Family::Petersen, 10, 0).unwrap();
        assert_eq!(pet.m(), 15);
        assert!(pet.degrees().iter().all(|&d| d == 3));
        assert_eq!(distance_matrix(&pet).diameter(), 2);
    }

    #[test]
    fn too_small_is_rejected() {
        assert!(generate(Family::Cycle, 2, 0).is_err());
        assert!(generate(Family::Path, 1, 0).is_err());
        assert!(generate(Family::Petersen, 9, 0).is_err());
    }

    #[test]
    fn random_is_seed_deterministic_and_connected() {
        for seed in 0..50 {
            for n in 2..14 {
                let a = generate(Family::RandomConnected, n, seed).unwrap();
                let b = generate(Family::RandomConnected, n, seed).unwrap();
                assert_eq!(a, b);
                assert!(a.m() >= n - 1);
            }
        }
        assert_ne!(
            generate(Family::RandomConnected, 12, 1).unwrap(),
            generate(Family::RandomConnected, 12, 2).unwrap()
        );
    }
}
