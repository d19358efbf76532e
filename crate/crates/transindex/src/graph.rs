use crate::error::{Error, Result};

/// Immutable simple undirected graph on the vertex set `0..n`.
///
/// Adjacency lists are kept sorted and the edge list is sorted
/// lexicographically with `u < v` in every pair. Every index computation
/// iterates edges in that canonical order, which pins down floating-point
/// accumulation order and makes results bit-reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Edges may arrive in any order
    /// and orientation; self loops, duplicates, and out-of-range labels are
    /// rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(Error::VertexOutOfRange { label: v.max(u), n });
            }
            norm.push((u, v));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            edges: norm,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges sorted lexicographically, `u < v` in every pair.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree_data(&self) -> DegreeData {
        let deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let min = deg.iter().copied().min().unwrap_or(0);
        let max = deg.iter().copied().max().unwrap_or(0);
        DegreeData {
            deg,
            min,
            max,
            m: self.edges.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Proper 2-coloring if one exists (per component), else `None`.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }
}

/// Degree sequence summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeData {
    pub deg: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub m: usize,
}

impl DegreeData {
    pub fn is_regular(&self) -> bool {
        self.min == self.max
    }

    /// One vertex of degree n-1, the rest pendant. Holds for K2.
    pub fn is_star(&self) -> bool {
        let n = self.deg.len();
        if n < 2 {
            return false;
        }
        let hubs = self.deg.iter().filter(|&&d| d == n - 1).count();
        let leaves = self.deg.iter().filter(|&&d| d == 1).count();
        if n == 2 {
            return hubs == 2; // K2: both endpoints qualify as hub and leaf
        }
        hubs == 1 && leaves == n - 1
    }

    /// Complement degree sequence contained in {0, 1}: the graph is K_n with
    /// a set of pairwise disjoint edges removed (possibly none).
    pub fn is_complete_minus_matching(&self) -> bool {
        let n = self.deg.len();
        self.deg.iter().all(|&d| n - d <= 2)
    }
}
