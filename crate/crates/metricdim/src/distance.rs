//! Exact hop-count distances from all-pairs BFS.

use std::collections::VecDeque;

use crate::graph::{Graph, GraphError, VertexId};

/// Dense symmetric table of shortest-path hop counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.d[u.0 * self.n + v.0]
    }

    pub(crate) fn get_raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Distances from `u` to every vertex, indexed by vertex id.
    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.d[u.0 * self.n..(u.0 + 1) * self.n]
    }

    pub(crate) fn row_raw(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

/// BFS from every vertex. Fails with [`GraphError::Disconnected`] if any
/// pair of vertices has no connecting path.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.order();
    let mut d = vec![u32::MAX; n * n];
    let mut queue = VecDeque::new();
    for source in 0..n {
        let row = &mut d[source * n..(source + 1) * n];
        row[source] = 0;
        queue.clear();
        queue.push_back(source);
        let mut seen = 1usize;
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &VertexId(v) in g.neighbors(VertexId(u)) {
                if row[v] == u32::MAX {
                    row[v] = du + 1;
                    seen += 1;
                    queue.push_back(v);
                }
            }
        }
        if seen < n {
            return Err(GraphError::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, d })
}
