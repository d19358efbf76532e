//! Deterministic generators for the named graph families.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named families understood by the generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    CompleteBipartite,
    Star,
    Path,
    Cycle,
    Windmill,
    Hypercube,
    RhombicDodecahedron,
    DodecahedronC20,
    TruncatedIcosahedronC60,
    PolyhexNanotorus,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::Path,
        Family::Cycle,
        Family::Windmill,
        Family::Hypercube,
        Family::RhombicDodecahedron,
        Family::DodecahedronC20,
        Family::TruncatedIcosahedronC60,
        Family::PolyhexNanotorus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Windmill => "windmill",
            Family::Hypercube => "hypercube",
            Family::RhombicDodecahedron => "rhombic_dodecahedron",
            Family::DodecahedronC20 => "dodecahedron_C20",
            Family::TruncatedIcosahedronC60 => "truncated_icosahedron_C60",
            Family::PolyhexNanotorus => "polyhex_nanotorus",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Number of integer parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::RhombicDodecahedron
            | Family::DodecahedronC20
            | Family::TruncatedIcosahedronC60 => 0,
            Family::CompleteBipartite | Family::PolyhexNanotorus => 2,
            _ => 1,
        }
    }
}

/// A family together with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<u64>) -> FamilySpec {
        FamilySpec { family, params }
    }

    /// Builds the labelled graph for this spec.
    pub fn generate(&self) -> Result<Graph> {
        let f = self.family;
        if self.params.len() != f.arity() {
            return Err(Error::InvalidFamilyParams(format!(
                "{} takes {} parameter(s), got {}",
                f.name(),
                f.arity(),
                self.params.len()
            )));
        }
        let p = |i: usize| self.params[i] as usize;
        match f {
            Family::Complete => {
                let n = require(f, p(0) >= 1, p(0), "order must be at least 1")?;
                let mut e = Vec::with_capacity(n * (n - 1) / 2);
                for u in 0..n {
                    for v in u + 1..n {
                        e.push((u, v));
                    }
                }
                Graph::from_edges(n, e)
            }
            Family::CompleteBipartite => {
                let a = require(f, p(0) >= 1, p(0), "part sizes must be at least 1")?;
                let b = require(f, p(1) >= 1, p(1), "part sizes must be at least 1")?;
                let mut e = Vec::with_capacity(a * b);
                for u in 0..a {
                    for v in 0..b {
                        e.push((u, a + v));
                    }
                }
                Graph::from_edges(a + b, e)
            }
            Family::Star => {
                let n = require(f, p(0) >= 2, p(0), "order must be at least 2")?;
                Graph::from_edges(n, (1..n).map(|i| (0, i)))
            }
            Family::Path => {
                let n = require(f, p(0) >= 1, p(0), "order must be at least 1")?;
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            }
            Family::Cycle => {
                let n = require(f, p(0) >= 3, p(0), "order must be at least 3")?;
                let mut e: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
                e.push((0, n - 1));
                Graph::from_edges(n, e)
            }
            Family::Windmill => {
                let n = require(
                    f,
                    p(0) >= 5 && p(0) % 2 == 1,
                    p(0),
                    "order must be odd and at least 5",
                )?;
                // k triangles sharing hub 0
                let k = (n - 1) / 2;
                let mut e = Vec::with_capacity(3 * k);
                for i in 0..k {
                    let (a, b) = (2 * i + 1, 2 * i + 2);
                    e.push((0, a));
                    e.push((0, b));
                    e.push((a, b));
                }
                Graph::from_edges(n, e)
            }
            Family::Hypercube => {
                let d = require(
                    f,
                    (1..=16).contains(&p(0)),
                    p(0),
                    "dimension must be between 1 and 16",
                )?;
                let n = 1usize << d;
                let mut e = Vec::with_capacity(d * n / 2);
                for u in 0..n {
                    for b in 0..d {
                        let v = u ^ (1 << b);
                        if u < v {
                            e.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, e)
            }
            Family::RhombicDodecahedron => rhombic_dodecahedron(),
            Family::DodecahedronC20 => embedded(20, &C20_EDGES, C20_FNV),
            Family::TruncatedIcosahedronC60 => embedded(60, &C60_EDGES, C60_FNV),
            Family::PolyhexNanotorus => {
                let cp = require(
                    f,
                    p(0) >= 4 && p(0) % 2 == 0,
                    p(0),
                    "circumference must be even and at least 4",
                )?;
                let cq = require(
                    f,
                    p(1) >= 2 && p(1) % 2 == 0,
                    p(1),
                    "length must be even and at least 2",
                )?;
                nanotorus(cp, cq)
            }
        }
    }
}

fn require(f: Family, ok: bool, got: usize, msg: &str) -> Result<usize> {
    if ok {
        Ok(got)
    } else {
        Err(Error::InvalidFamilyParams(format!(
            "{}: {msg} (got {got})",
            f.name()
        )))
    }
}

/// Corners of the cube joined to the three faces containing them: 8 corner
/// vertices 0..8 (bit triples) and 6 face vertices 8..14 (axis, side).
fn rhombic_dodecahedron() -> Result<Graph> {
    let mut e = Vec::with_capacity(24);
    for c in 0..8usize {
        for axis in 0..3 {
            let side = (c >> axis) & 1;
            e.push((c, 8 + 2 * axis + side));
        }
    }
    Graph::from_edges(14, e)
}

/// Brick-wall hexagonal torus: q rows of p vertices; every row is a p-cycle
/// and column i of row j carries a vertical edge exactly when i + j is even.
/// Both parities even keeps the wrap-around simple and 3-regular.
fn nanotorus(p: usize, q: usize) -> Result<Graph> {
    let vid = |i: usize, j: usize| j * p + i;
    let mut e = Vec::with_capacity(3 * p * q / 2);
    for j in 0..q {
        for i in 0..p {
            e.push((vid(i, j), vid((i + 1) % p, j)));
            if (i + j) % 2 == 0 {
                e.push((vid(i, j), vid(i, (j + 1) % q)));
            }
        }
    }
    Graph::from_edges(p * q, e)
}

fn embedded(n: usize, edges: &[(u8, u8)], fnv: u64) -> Result<Graph> {
    assert_eq!(fnv1a(edges), fnv, "embedded edge list corrupted");
    Graph::from_edges(n, edges.iter().map(|&(a, b)| (a as usize, b as usize)))
}

fn fnv1a(edges: &[(u8, u8)]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &(a, b) in edges {
        for byte in [a, b] {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

const C20_FNV: u64 = 0x2baed85cff37fa01;
/// Dodecahedral graph: outer 10-cycle 0..9 bridged through 10..19.
const C20_EDGES: [(u8, u8); 30] = [
    (0, 1),
    (0, 9),
    (0, 10),
    (1, 2),
    (1, 11),
    (2, 3),
    (2, 12),
    (3, 4),
    (3, 13),
    (4, 5),
    (4, 14),
    (5, 6),
    (5, 15),
    (6, 7),
    (6, 16),
    (7, 8),
    (7, 17),
    (8, 9),
    (8, 18),
    (9, 19),
    (10, 12),
    (10, 18),
    (11, 13),
    (11, 19),
    (12, 14),
    (13, 15),
    (14, 16),
    (15, 17),
    (16, 18),
    (17, 19),
];

const C60_FNV: u64 = 0x0d4273fa29babc6d;
/// Truncated icosahedron: 12 pentagons (vertex 5a+k is corner k of pentagon
/// a) joined along the icosahedron edges.
const C60_EDGES: [(u8, u8); 90] = [
    (0, 1),
    (0, 4),
    (0, 32),
    (1, 2),
    (1, 52),
    (2, 3),
    (2, 12),
    (3, 4),
    (3, 42),
    (4, 22),
    (5, 6),
    (5, 9),
    (5, 20),
    (6, 7),
    (6, 47),
    (7, 8),
    (7, 17),
    (8, 9),
    (8, 57),
    (9, 34),
    (10, 11),
    (10, 14),
    (10, 27),
    (11, 12),
    (11, 43),
    (12, 13),
    (13, 14),
    (13, 51),
    (14, 37),
    (15, 16),
    (15, 19),
    (15, 35),
    (16, 17),
    (16, 58),
    (17, 18),
    (18, 19),
    (18, 46),
    (19, 29),
    (20, 21),
    (20, 24),
    (21, 22),
    (21, 33),
    (22, 23),
    (23, 24),
    (23, 41),
    (24, 48),
    (25, 26),
    (25, 29),
    (25, 45),
    (26, 27),
    (26, 44),
    (27, 28),
    (28, 29),
    (28, 36),
    (30, 31),
    (30, 34),
    (30, 56),
    (31, 32),
    (31, 53),
    (32, 33),
    (33, 34),
    (35, 36),
    (35, 39),
    (36, 37),
    (37, 38),
    (38, 39),
    (38, 50),
    (39, 59),
    (40, 41),
    (40, 44),
    (40, 49),
    (41, 42),
    (42, 43),
    (43, 44),
    (45, 46),
    (45, 49),
    (46, 47),
    (47, 48),
    (48, 49),
    (50, 51),
    (50, 54),
    (51, 52),
    (52, 53),
    (53, 54),
    (54, 55),
    (55, 56),
    (55, 59),
    (56, 57),
    (57, 58),
    (58, 59),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::bfs_apsp;

    fn gen(f: Family, params: &[u64]) -> Graph {
        FamilySpec::new(f, params.to_vec()).generate().unwrap()
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(Family::from_name(f.name()), Some(f));
        }
        assert_eq!(Family::from_name("petersen"), None);
    }

    #[test]
    fn parameter_validation() {
        let bad = [
            (Family::Star, vec![1]),
            (Family::Cycle, vec![2]),
            (Family::Windmill, vec![6]),
            (Family::Windmill, vec![3]),
            (Family::Hypercube, vec![0]),
            (Family::Hypercube, vec![17]),
            (Family::PolyhexNanotorus, vec![3, 4]),
            (Family::PolyhexNanotorus, vec![4, 3]),
            (Family::PolyhexNanotorus, vec![2, 4]),
            (Family::Complete, vec![]),
            (Family::DodecahedronC20, vec![20]),
        ];
        for (f, params) in bad {
            assert!(
                matches!(
                    FamilySpec::new(f, params.clone()).generate(),
                    Err(Error::InvalidFamilyParams(_))
                ),
                "{:?} {:?} should be rejected",
                f,
                params
            );
        }
    }

    #[test]
    fn basic_shapes() {
        assert_eq!(gen(Family::Complete, &[5]).m(), 10);
        assert_eq!(gen(Family::CompleteBipartite, &[2, 3]).m(), 6);
        let s = gen(Family::Star, &[6]);
        assert!(s.degree_data().is_star());
        let c = gen(Family::Cycle, &[7]);
        assert!(c.degree_data().is_regular() && c.m() == 7);
        assert_eq!(gen(Family::Path, &[1]).n(), 1);
    }

    #[test]
    fn windmill_shape() {
        let g = gen(Family::Windmill, &[7]);
        assert_eq!((g.n(), g.m()), (7, 9));
        assert_eq!(g.degree(0), 6);
        let dd = bfs_apsp(&g).unwrap();
        let sig = dd.sigma();
        let irr_tr: i64 = g
            .edges()
            .iter()
            .map(|&(u, v)| (sig[u] as i64 - sig[v] as i64).abs())
            .sum();
        assert_eq!(irr_tr, 24); // (n-1)(n-3)
    }

    #[test]
    fn hypercube_transmission_regular() {
        for d in 1..=4u64 {
            let g = gen(Family::Hypercube, &[d]);
            let n = 1usize << d;
            assert_eq!((g.n(), g.m()), (n, d as usize * n / 2));
            let dd = bfs_apsp(&g).unwrap();
            assert_eq!(dd.transmission_regular(), Some(d * (1u64 << (d - 1))));
        }
    }

    #[test]
    fn rhombic_dodecahedron_shape() {
        let g = gen(Family::RhombicDodecahedron, &[]);
        assert_eq!((g.n(), g.m()), (14, 24));
        let mut degs: Vec<usize> = (0..14).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(&degs[..8], &[3; 8]);
        assert_eq!(&degs[8..], &[4; 6]);
        assert!(g.bipartition().is_some());
        let dd = bfs_apsp(&g).unwrap();
        assert_eq!(dd.transmission_regular(), Some(28));
    }

    #[test]
    fn dodecahedron_shape() {
        let g = gen(Family::DodecahedronC20, &[]);
        assert_eq!((g.n(), g.m()), (20, 30));
        assert!((0..20).all(|v| g.degree(v) == 3));
        let dd = bfs_apsp(&g).unwrap();
        assert_eq!(dd.transmission_regular(), Some(50));
        assert_eq!(dd.diameter(), 5);
    }

    #[test]
    fn truncated_icosahedron_shape() {
        let g = gen(Family::TruncatedIcosahedronC60, &[]);
        assert_eq!((g.n(), g.m()), (60, 90));
        assert!((0..60).all(|v| g.degree(v) == 3));
        let dd = bfs_apsp(&g).unwrap();
        assert_eq!(dd.transmission_regular(), Some(278));
        assert_eq!(dd.diameter(), 9);
    }

    #[test]
    fn nanotorus_shape() {
        for (p, q, sigma) in [(4u64, 2u64, 12u64), (4, 4, 36), (6, 4, 64), (8, 6, 184)] {
            let g = gen(Family::PolyhexNanotorus, &[p, q]);
            assert_eq!((g.n() as u64, g.m() as u64), (p * q, 3 * p * q / 2));
            assert!((0..g.n()).all(|v| g.degree(v) == 3));
            assert!(g.bipartition().is_some());
            let dd = bfs_apsp(&g).unwrap();
            assert_eq!(dd.transmission_regular(), Some(sigma), "T[{p},{q}]");
        }
    }

    #[test]
    fn embedded_lists_pass_checksum() {
        assert_eq!(fnv1a(&C20_EDGES), C20_FNV);
        assert_eq!(fnv1a(&C60_EDGES), C60_FNV);
    }

    #[test]
    fn path_transmissions_match_closed_form() {
        for n in 2..=30usize {
            let g = gen(Family::Path, &[n as u64]);
            let dd = bfs_apsp(&g).unwrap();
            for (i, &s) in dd.sigma().iter().enumerate() {
                let i = i as u64;
                let n = n as u64;
                let expect = (2 * i * i + (n - 1) * (n - 1) + (n - 1))
                    .checked_sub(2 * (n - 1) * i)
                    .unwrap()
                    / 2;
                assert_eq!(s, expect);
            }
        }
    }
}
