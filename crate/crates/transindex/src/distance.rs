//! All-pairs shortest paths by repeated BFS, transmissions, and the
//! per-edge closer/farther/equidistant decomposition.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sentinel distance for unreachable vertices in a single-source row.
pub(crate) const UNREACHED: u32 = u32::MAX;

/// Single-source BFS distances; unreachable vertices hold [`UNREACHED`].
pub(crate) fn bfs_row(g: &Graph, src: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == UNREACHED {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Exact distance data for a connected graph: the full distance matrix,
/// per-vertex transmissions and eccentricities, diameter, and Wiener index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>,
    sigma: Vec<u64>,
    ecc: Vec<u32>,
    diameter: u32,
    wiener: u64,
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Transmissions: sigma(v) = sum of distances from v to all vertices.
    pub fn sigma(&self) -> &[u64] {
        &self.sigma
    }

    pub fn ecc(&self) -> &[u32] {
        &self.ecc
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn wiener(&self) -> u64 {
        self.wiener
    }

    /// `Some(k)` when every vertex has transmission k. Exact comparison.
    pub fn transmission_regular(&self) -> Option<u64> {
        let first = *self.sigma.first()?;
        self.sigma.iter().all(|&s| s == first).then_some(first)
    }
}

/// Runs one BFS per vertex. Fails with the first unreachable pair when the
/// graph is disconnected.
pub fn bfs_apsp(g: &Graph) -> Result<DistanceData> {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    let mut sigma = Vec::with_capacity(n);
    let mut ecc = Vec::with_capacity(n);
    for src in 0..n {
        let row = bfs_row(g, src);
        if let Some(far) = row.iter().position(|&d| d == UNREACHED) {
            return Err(Error::GraphNotConnected(src, far));
        }
        sigma.push(row.iter().map(|&d| d as u64).sum());
        ecc.push(row.iter().copied().max().unwrap_or(0));
        dist.extend_from_slice(&row);
    }
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    let total: u64 = sigma.iter().sum();
    debug_assert!(
        total.is_multiple_of(2),
        "transmissions sum to twice the Wiener index"
    );
    Ok(DistanceData {
        n,
        dist,
        sigma,
        ecc,
        diameter,
        wiener: total / 2,
    })
}

/// For an edge uv: how many vertices sit strictly closer to u, strictly
/// closer to v, and equidistant. `sigma_diff` carries sigma(u) - sigma(v),
/// computed from the transmissions; the identity sigma_diff = n_v - n_u is a
/// theorem about these counts, asserted in tests rather than assumed here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSplit {
    pub edge: (usize, usize),
    pub n_u: usize,
    pub n_v: usize,
    pub n_uv: usize,
    pub sigma_diff: i64,
}

/// Splits every edge in canonical edge order.
pub fn edge_splits(g: &Graph, dd: &DistanceData) -> Vec<EdgeSplit> {
    let n = g.n();
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let mut n_u = 0;
            let mut n_v = 0;
            for w in 0..n {
                let du = dd.dist(w, u);
                let dv = dd.dist(w, v);
                if du < dv {
                    n_u += 1;
                } else if dv < du {
                    n_v += 1;
                }
            }
            EdgeSplit {
                edge: (u, v),
                n_u,
                n_v,
                n_uv: n - n_u - n_v,
                sigma_diff: dd.sigma()[u] as i64 - dd.sigma()[v] as i64,
            }
        })
        .collect()
}
