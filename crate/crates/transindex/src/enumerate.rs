//! Exhaustive enumerators for the verification corpus: all connected
//! labelled graphs up to 7 vertices and all labelled trees up to 8 vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_CONNECTED_N: usize = 7;
pub const MAX_TREE_N: usize = 8;

/// Streams every connected labelled simple graph on `n` vertices.
///
/// Vertex pairs are listed lexicographically and each graph corresponds to
/// one subset bitmask; masks are visited in increasing order, so the stream
/// order is deterministic.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs> {
    if !(1..=MAX_CONNECTED_N).contains(&n) {
        return Err(Error::EnumerationTooLarge {
            n,
            cap: MAX_CONNECTED_N,
        });
    }
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let end = 1u32 << pairs.len();
    Ok(ConnectedGraphs {
        n,
        pairs,
        next_mask: 0,
        end,
    })
}

pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u32,
    end: u32,
}

impl ConnectedGraphs {
    /// Union-find connectivity over the mask, cheap pre-filter before any
    /// allocation.
    fn mask_connected(&self, mask: u32) -> bool {
        let mut parent: [u8; MAX_CONNECTED_N] = [0; MAX_CONNECTED_N];
        for (i, p) in parent[..self.n].iter_mut().enumerate() {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; MAX_CONNECTED_N], x: u8) -> u8 {
            let mut x = x;
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut components = self.n;
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                let (ru, rv) = (find(&mut parent, u as u8), find(&mut parent, v as u8));
                if ru != rv {
                    parent[ru as usize] = rv;
                    components -= 1;
                }
            }
        }
        components == 1
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if !self.mask_connected(mask) {
                continue;
            }
            let edges: Vec<(usize, usize)> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << *k) != 0)
                .map(|(_, &p)| p)
                .collect();
            let g =
                Graph::from_edges(self.n, edges).expect("enumerated edge subset is always valid");
            return Some(g);
        }
        None
    }
}

/// Streams the n^(n-2) labelled trees on `n` vertices by decoding every
/// Pruefer sequence in lexicographic order.
pub fn enumerate_trees(n: usize) -> Result<Trees> {
    if !(2..=MAX_TREE_N).contains(&n) {
        return Err(Error::EnumerationTooLarge { n, cap: MAX_TREE_N });
    }
    Ok(Trees {
        n,
        seq: vec![0; n - 2],
        done: false,
    })
}

pub struct Trees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for Trees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let g = decode_pruefer(self.n, &self.seq);
        // odometer step over {0..n-1}^(n-2)
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.seq[i] + 1 < self.n {
                self.seq[i] += 1;
                for s in &mut self.seq[i + 1..] {
                    *s = 0;
                }
                break;
            }
        }
        Some(g)
    }
}

/// Standard linear-time Pruefer decode; every sequence yields a tree and
/// distinct sequences yield distinct labelled trees.
fn decode_pruefer(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1u32; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges).expect("Pruefer decode yields a simple tree")
}
