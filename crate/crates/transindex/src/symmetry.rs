//! Automorphism generators, vertex/edge orbits, and orbit-weighted index
//! evaluation.
//!
//! The search is individualization-refinement backtracking: refine an
//! invariant-seeded partition, individualize one vertex of the first
//! smallest non-singleton cell, recurse. The first leaf fixes a base
//! labelling; every other leaf proposes the permutation mapping the base to
//! it, verified edge-by-edge before acceptance. Candidate children equal to
//! an earlier sibling under an already-found automorphism fixing the branch
//! prefix are skipped; such subtrees are conjugate and add nothing.

use crate::distance::DistanceData;
use crate::error::{Error, Result};
use crate::exact::{checked_add, checked_mul, Ratio};
use crate::graph::Graph;
use crate::indices::{IndexId, IndexReport, Provenance, Value};
use crate::refine::{refine, seed_partition, OrderedPartition};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Automorphism generators plus the orbit decomposition they induce.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    /// Verified automorphisms, as images indexed by vertex.
    pub generators: Vec<Vec<usize>>,
    /// Vertex classes, each sorted, ordered by minimum label (the
    /// representative).
    pub vertex_orbits: Vec<Vec<usize>>,
    /// Edge classes, each in canonical edge order; the first edge is the
    /// representative.
    pub edge_orbits: Vec<Vec<(usize, usize)>>,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut x = x;
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // root at the smaller label so representatives are minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

fn is_automorphism(g: &Graph, gamma: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| g.has_edge(gamma[u], gamma[v]))
}

struct Searcher<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    base: Option<Vec<usize>>,
    prefix: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Searcher<'a> {
    /// Union-find over the subgroup generated by found generators that fix
    /// the current prefix pointwise.
    fn prefix_stabilizer_orbits(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.g.n());
        for gen in &self.generators {
            if self.prefix.iter().all(|&v| gen[v] == v) {
                for (v, &img) in gen.iter().enumerate() {
                    uf.union(v, img);
                }
            }
        }
        uf
    }

    fn explore(&mut self, p: &OrderedPartition) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SymmetrySearchBudgetExceeded(self.budget));
        }
        if let Some(leaf) = p.labeling() {
            match &self.base {
                None => self.base = Some(leaf),
                Some(base) => {
                    let mut gamma = vec![0usize; self.g.n()];
                    for (b, l) in base.iter().zip(&leaf) {
                        gamma[*b] = *l;
                    }
                    if is_automorphism(self.g, &gamma) {
                        self.generators.push(gamma);
                    }
                }
            }
            return Ok(());
        }
        // first smallest non-singleton cell
        let target = p
            .cells()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let candidates = p.cells()[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            let mut uf = self.prefix_stabilizer_orbits();
            if tried.iter().any(|&u| uf.find(u) == uf.find(v)) {
                continue;
            }
            tried.push(v);
            self.prefix.push(v);
            let mut child = p.individualize(v);
            refine(self.g, &mut child);
            let res = self.explore(&child);
            self.prefix.pop();
            res?;
        }
        Ok(())
    }
}

/// Finds automorphism generators and orbits for a connected graph.
///
/// All-or-nothing: exceeding the node budget returns an error rather than
/// partial orbits, which would be finer than the truth and unusable for
/// orbit-weighted sums.
pub fn automorphisms(g: &Graph, dist: &DistanceData, budget: u64) -> Result<OrbitPartition> {
    let n = g.n();
    let mut root = seed_partition(g, dist);
    refine(g, &mut root);
    let mut searcher = Searcher {
        g,
        budget,
        nodes: 0,
        base: None,
        prefix: Vec::new(),
        generators: Vec::new(),
    };
    searcher.explore(&root)?;
    let generators = searcher.generators;

    let mut vuf = UnionFind::new(n);
    for gen in &generators {
        for (v, &img) in gen.iter().enumerate() {
            vuf.union(v, img);
        }
    }
    let vertex_orbits = vuf.classes();

    let edges = g.edges();
    let edge_index = |u: usize, v: usize| -> usize {
        let key = if u < v { (u, v) } else { (v, u) };
        edges
            .binary_search(&key)
            .expect("image of an edge is an edge")
    };
    let mut euf = UnionFind::new(edges.len());
    for gen in &generators {
        for (i, &(u, v)) in edges.iter().enumerate() {
            euf.union(i, edge_index(gen[u], gen[v]));
        }
    }
    let edge_orbits: Vec<Vec<(usize, usize)>> = euf
        .classes()
        .into_iter()
        .map(|class| class.into_iter().map(|i| edges[i]).collect())
        .collect();

    let vertex_transitive = vertex_orbits.len() == 1;
    let edge_transitive = edge_orbits.len() <= 1;
    Ok(OrbitPartition {
        generators,
        vertex_orbits,
        edge_orbits,
        vertex_transitive,
        edge_transitive,
    })
}

/// Edge-sum indices evaluated one representative per edge orbit, weighted
/// by orbit size. Transmissions are constant along orbits, so exact indices
/// agree exactly with direct evaluation and float indices agree to rounding.
pub fn orbit_index_eval(
    g: &Graph,
    dist: &DistanceData,
    orbits: &OrbitPartition,
) -> Result<IndexReport> {
    let n = g.n();
    let m = g.m();
    let sig = dist.sigma();
    let mut rep = IndexReport::new();

    let mut ms1: i128 = 0;
    let mut ms2: i128 = 0;
    let mut irr_tr: i128 = 0;
    let mut rs = 0.0f64;
    let mut xs = 0.0f64;
    let mut gas_sum = 0.0f64;
    let mut hs = Some(Ratio::ZERO);
    for class in &orbits.edge_orbits {
        let (u, v) = class[0];
        let w = class.len() as i128;
        let (su, sv) = (sig[u] as i128, sig[v] as i128);
        ms1 = checked_add(ms1, checked_mul(w, checked_add(su, sv)?)?)?;
        ms2 = checked_add(ms2, checked_mul(w, checked_mul(su, sv)?)?)?;
        irr_tr = checked_add(irr_tr, checked_mul(w, (su - sv).abs())?)?;
        let wf = w as f64;
        rs += wf / ((sig[u] as f64) * (sig[v] as f64)).sqrt();
        xs += wf / ((sig[u] + sig[v]) as f64).sqrt();
        gas_sum += if sig[u] == sig[v] {
            wf
        } else {
            wf * 2.0 * ((sig[u] as f64) * (sig[v] as f64)).sqrt() / ((sig[u] + sig[v]) as f64)
        };
        hs = match hs {
            Some(acc) => {
                let term = Ratio::new(2 * w, checked_add(su, sv)?)?;
                match acc.checked_add(term) {
                    Ok(next) => Some(next),
                    Err(Error::ArithmeticOverflow) => None,
                    Err(e) => return Err(e),
                }
            }
            None => None,
        };
    }
    let hs_value = match hs {
        Some(r) => Value::Ratio(r),
        None => {
            let mut f = 0.0f64;
            for class in &orbits.edge_orbits {
                let (u, v) = class[0];
                f += class.len() as f64 * 2.0 / ((sig[u] + sig[v]) as f64);
            }
            Value::Float(f)
        }
    };
    let gas = if m == 0 {
        0.0
    } else {
        (n as f64) * gas_sum / (2.0 * m as f64)
    };
    let balaban = if m == 0 {
        0.0
    } else {
        m as f64 / ((m as i64 - n as i64 + 2) as f64)
    };
    let qs_e = if m == 0 {
        0.0
    } else {
        irr_tr as f64 / m as f64
    };
    let qs_ve = (n as f64) / 2.0 * (1.0 + qs_e);

    let p = Provenance::OrbitSum;
    rep.push(IndexId::RS, Value::Float(rs), p);
    rep.push(IndexId::XS, Value::Float(xs), p);
    rep.push(IndexId::HS, hs_value, p);
    rep.push(IndexId::GAS, Value::Float(gas), p);
    rep.push(IndexId::J, Value::Float(balaban * rs), p);
    rep.push(IndexId::SJ, Value::Float(balaban * xs), p);
    rep.push(IndexId::MS1, Value::Int(ms1), p);
    rep.push(IndexId::MS2, Value::Int(ms2), p);
    rep.push(IndexId::IrrTr, Value::Int(irr_tr), p);
    rep.push(IndexId::QSe, Value::Float(qs_e), p);
    rep.push(IndexId::QSve, Value::Float(qs_ve), p);
    Ok(rep)
}
