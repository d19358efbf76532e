//! Ordered partitions and equitable refinement, the backbone of the
//! automorphism search.

use crate::distance::DistanceData;
use crate::graph::Graph;

/// A partition of 0..n into an ordered list of sorted cells.
///
/// Cell order is part of the data: refinement keeps it label-invariant, so
/// isomorphic graphs with corresponding input partitions refine to
/// corresponding output partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl OrderedPartition {
    pub fn unit(n: usize) -> OrderedPartition {
        OrderedPartition {
            cells: vec![(0..n).collect()],
            cell_of: vec![0; n],
        }
    }

    pub fn from_cells(n: usize, cells: Vec<Vec<usize>>) -> OrderedPartition {
        let mut cell_of = vec![usize::MAX; n];
        for (i, cell) in cells.iter().enumerate() {
            debug_assert!(cell.windows(2).all(|w| w[0] < w[1]), "cells must be sorted");
            for &v in cell {
                debug_assert_eq!(cell_of[v], usize::MAX, "vertex in two cells");
                cell_of[v] = i;
            }
        }
        debug_assert!(
            cell_of.iter().all(|&c| c != usize::MAX),
            "partition must cover"
        );
        OrderedPartition { cells, cell_of }
    }

    pub fn n(&self) -> usize {
        self.cell_of.len()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// For a discrete partition, the vertex at each cell position.
    pub fn labeling(&self) -> Option<Vec<usize>> {
        if !self.is_discrete() {
            return None;
        }
        Some(self.cells.iter().map(|c| c[0]).collect())
    }

    /// Splits v's cell into [v] followed by the rest; v's singleton comes
    /// first so corresponding choices in isomorphic graphs stay aligned.
    pub fn individualize(&self, v: usize) -> OrderedPartition {
        let c = self.cell_of[v];
        debug_assert!(self.cells[c].len() > 1, "individualizing a singleton");
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for (i, cell) in self.cells.iter().enumerate() {
            if i == c {
                cells.push(vec![v]);
                cells.push(cell.iter().copied().filter(|&u| u != v).collect());
            } else {
                cells.push(cell.clone());
            }
        }
        OrderedPartition::from_cells(self.n(), cells)
    }
}

/// Initial partition keyed by the label-invariant pair
/// (degree, sorted distance multiset); cells ordered by key.
pub fn seed_partition(g: &Graph, dist: &DistanceData) -> OrderedPartition {
    let n = g.n();
    let mut keyed: Vec<(usize, Vec<u32>, usize)> = (0..n)
        .map(|v| {
            let mut row = dist.row(v).to_vec();
            row.sort_unstable();
            (g.degree(v), row, v)
        })
        .collect();
    keyed.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut prev: Option<(&usize, &Vec<u32>)> = None;
    for (deg, row, v) in &keyed {
        let same = matches!(prev, Some((d, r)) if d == deg && r == row);
        if !same {
            cells.push(Vec::new());
        }
        cells.last_mut().unwrap().push(*v);
        prev = Some((deg, row));
    }
    // keyed is sorted by (deg, row, v), so each cell is sorted too
    OrderedPartition::from_cells(n, cells)
}

/// Fragments of one split cell as (neighbor-cell signature, members) pairs.
type SplitGroups = Vec<(Vec<usize>, Vec<usize>)>;

/// Refines `p` in place to the coarsest equitable partition below it: every
/// vertex of a cell has the same multiset of neighbor cells. Split
/// fragments are ordered by (size ascending, signature ascending), which
/// depends only on label-invariant data, so the refined cell order is
/// label-invariant as well.
pub fn refine(g: &Graph, p: &mut OrderedPartition) {
    loop {
        let mut split_at: Option<(usize, SplitGroups)> = None;
        for (c, cell) in p.cells.iter().enumerate() {
            if cell.len() <= 1 {
                continue;
            }
            // signature: sorted neighbor-cell multiset
            let mut groups: SplitGroups = Vec::new();
            for &v in cell {
                let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| p.cell_of[w]).collect();
                sig.sort_unstable();
                if let Some((_, members)) = groups.iter_mut().find(|(s, _)| *s == sig) {
                    members.push(v);
                } else {
                    groups.push((sig, vec![v]));
                }
            }
            if groups.len() > 1 {
                groups.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.0.cmp(&b.0)));
                split_at = Some((c, groups));
                break;
            }
        }
        match split_at {
            None => return,
            Some((c, groups)) => {
                let mut cells = Vec::with_capacity(p.cells.len() + groups.len() - 1);
                for (i, cell) in p.cells.iter().enumerate() {
                    if i == c {
                        for (_, members) in &groups {
                            cells.push(members.clone());
                        }
                    } else {
                        cells.push(cell.clone());
                    }
                }
                *p = OrderedPartition::from_cells(p.n(), cells);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::bfs_apsp;
    use crate::graph::Graph;

    fn refined(g: &Graph) -> OrderedPartition {
        let dist = bfs_apsp(g).unwrap();
        let mut p = seed_partition(g, &dist);
        refine(g, &mut p);
        p
    }

    #[test]
    fn complete_graph_stays_single_cell() {
        let g = Graph::from_edges(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = refined(&g);
        assert_eq!(p.cells().len(), 1);
        assert_eq!(p.cells()[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn star_splits_center_from_leaves() {
        let g = Graph::from_edges(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let p = refined(&g);
        assert_eq!(p.cells().len(), 2);
        // leaf cell (degree 1) sorts before the hub cell (degree 4)
        assert_eq!(p.cells()[0], vec![1, 2, 3, 4]);
        assert_eq!(p.cells()[1], vec![0]);
    }

    #[test]
    fn path4_splits_ends_from_middle() {
        let g = Graph::from_edges(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = refined(&g);
        assert_eq!(p.cells().len(), 2);
        assert_eq!(p.cells()[0], vec![0, 3]);
        assert_eq!(p.cells()[1], vec![1, 2]);
    }

    #[test]
    fn partition_is_equitable_after_refine() {
        // 5-cycle with a chord: non-trivial refinement target
        let g = Graph::from_edges(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap();
        let p = refined(&g);
        for cell in p.cells() {
            let mut sigs: Vec<Vec<usize>> = Vec::new();
            for &v in cell {
                let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&w| p.cell_of(w)).collect();
                sig.sort_unstable();
                sigs.push(sig);
            }
            sigs.dedup();
            assert_eq!(sigs.len(), 1, "cell {cell:?} not equitable");
        }
    }

    #[test]
    fn individualize_puts_singleton_first() {
        let p = OrderedPartition::unit(4).individualize(2);
        assert_eq!(p.cells()[0], vec![2]);
        assert_eq!(p.cells()[1], vec![0, 1, 3]);
        assert_eq!(p.cell_of(2), 0);
    }

    #[test]
    fn discrete_labeling() {
        let p = OrderedPartition::from_cells(3, vec![vec![1], vec![0], vec![2]]);
        assert!(p.is_discrete());
        assert_eq!(p.labeling(), Some(vec![1, 0, 2]));
        assert_eq!(OrderedPartition::unit(3).labeling(), None);
    }
}
