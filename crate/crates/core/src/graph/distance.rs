use std::collections::VecDeque;

use super::{Graph, GraphError, VertexSet};

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<usize>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> usize {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

/// BFS from every vertex.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut data = vec![usize::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for source in 0..n {
        let row = &mut data[source * n..(source + 1) * n];
        row[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] == usize::MAX {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, data }
}

/// ∂(S, T): the smallest distance between a member of `s` and a member of `t`.
pub fn set_distance(d: &DistanceMatrix, s: &VertexSet, t: &VertexSet) -> Result<usize, GraphError> {
    set_distance_raw(d, s.members(), t.members())
}

pub(crate) fn set_distance_raw(d: &DistanceMatrix, s: &[usize], t: &[usize]) -> Result<usize, GraphError> {
    if s.is_empty() || t.is_empty() {
        return Err(GraphError::EmptySet);
    }
    let mut best = usize::MAX;
    for &u in s {
        let row = d.row(u);
        for &v in t {
            best = best.min(row[v]);
        }
    }
    Ok(best)
}
