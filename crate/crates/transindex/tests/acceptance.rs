//! Acceptance gate: one test per shipped guarantee.
//!
//! Every numeric claim is checked at its stated tolerance against oracles
//! recomputed inside this file: closed forms evaluated in integer
//! arithmetic, Floyd-Warshall distances independent of the library's BFS,
//! and structural predicates written directly on adjacency lists.

// the oracles keep their textbook index-loop form on purpose
#![allow(clippy::needless_range_loop)]

use transindex::distance::bfs_apsp;
use transindex::enumerate::{enumerate_connected, enumerate_trees};
use transindex::exact::Ratio;
use transindex::families::{Family, FamilySpec};
use transindex::graph6::{parse_graph6, write_graph6};
use transindex::indices::{
    szeged_indices, transmission_edge_indices, transmission_vertex_indices, IndexId, IndexReport,
    Value,
};
use transindex::spectral::distance_spectral_radius;
use transindex::symmetry::{automorphisms, orbit_index_eval, DEFAULT_BUDGET};
use transindex::verify::{verify_stream, VerifySource, WITNESS_CAP};
use transindex::{CheckId, Graph};

fn fam(family: Family, params: &[u64]) -> Graph {
    FamilySpec::new(family, params.to_vec()).generate().unwrap()
}

fn int_value(rep: &IndexReport, id: IndexId) -> i128 {
    match rep.get(id) {
        Some(Value::Int(v)) => *v,
        other => panic!("{id} should be an exact integer, got {other:?}"),
    }
}

fn ratio_value(rep: &IndexReport, id: IndexId) -> Ratio {
    match rep.get(id) {
        Some(Value::Ratio(r)) => *r,
        other => panic!("{id} should be an exact rational, got {other:?}"),
    }
}

fn float_value(rep: &IndexReport, id: IndexId) -> f64 {
    rep.get(id)
        .unwrap_or_else(|| panic!("missing {id}"))
        .as_f64()
}

fn edge_report(g: &Graph) -> IndexReport {
    transmission_edge_indices(g, &bfs_apsp(g).unwrap()).unwrap()
}

/// Distances by Floyd-Warshall, sharing nothing with the library's BFS.
fn fw_distances(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.n();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let alt = d[i][k] + d[k][j];
                if alt < d[i][j] {
                    d[i][j] = alt;
                }
            }
        }
    }
    d
}

fn fw_sigma(d: &[Vec<u64>]) -> Vec<u64> {
    d.iter().map(|row| row.iter().sum()).collect()
}

fn fw_diameter(d: &[Vec<u64>]) -> u64 {
    d.iter().flatten().copied().max().unwrap_or(0)
}

fn local_degrees(g: &Graph) -> Vec<usize> {
    (0..g.n()).map(|v| g.degree(v)).collect()
}

/// n >= 2 with one hub joined to all leaves; the degree sum forces the
/// profile, so testing size and maximum suffices.
fn local_star(g: &Graph) -> bool {
    g.n() >= 2 && g.m() == g.n() - 1 && local_degrees(g).into_iter().max() == Some(g.n() - 1)
}

fn local_path(g: &Graph) -> bool {
    let deg = local_degrees(g);
    g.n() == 1
        || (deg.iter().filter(|&&d| d == 1).count() == 2
            && deg.iter().filter(|&&d| d == 2).count() == g.n() - 2)
}

fn local_regular(g: &Graph) -> bool {
    let deg = local_degrees(g);
    deg.iter().all(|&d| d == deg[0])
}

fn local_complement_matching(g: &Graph) -> bool {
    local_degrees(g).into_iter().all(|d| g.n() - 1 - d <= 1)
}

fn local_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = vec![s];
        while let Some(u) = queue.pop() {
            for &v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push(v);
                } else if color[v] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Per-edge near-side counts straight from the Floyd-Warshall matrix.
fn local_splits(g: &Graph, d: &[Vec<u64>]) -> Vec<(usize, usize, usize)> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let mut nu = 0;
            let mut nv = 0;
            let mut nuv = 0;
            for w in 0..g.n() {
                match d[w][u].cmp(&d[w][v]) {
                    std::cmp::Ordering::Less => nu += 1,
                    std::cmp::Ordering::Greater => nv += 1,
                    std::cmp::Ordering::Equal => nuv += 1,
                }
            }
            (nu, nv, nuv)
        })
        .collect()
}

struct Facts {
    n: usize,
    star: bool,
    treg: bool,
    regular: bool,
    bipartite: bool,
    diam2: bool,
    path: bool,
    complement_matching: bool,
    tree: bool,
    const_diff: bool,
    const_sum: bool,
    split_structure: bool,
}

fn facts(g: &Graph) -> Facts {
    let d = fw_distances(g);
    let sigma = fw_sigma(&d);
    let diffs: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(u, v)| sigma[u].abs_diff(sigma[v]))
        .collect();
    let sums: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(u, v)| sigma[u] + sigma[v])
        .collect();
    let splits = local_splits(g, &d);
    Facts {
        n: g.n(),
        star: local_star(g),
        treg: sigma.iter().all(|&s| s == sigma[0]),
        regular: local_regular(g),
        bipartite: local_bipartite(g),
        diam2: fw_diameter(&d) <= 2,
        path: local_path(g),
        complement_matching: local_complement_matching(g),
        tree: g.m() == g.n() - 1,
        const_diff: diffs.windows(2).all(|w| w[0] == w[1]),
        const_sum: sums.windows(2).all(|w| w[0] == w[1]),
        split_structure: splits.iter().all(|&(nu, nv, nuv)| nu == nv || nuv == 0),
    }
}

/// The structural side of each check's reported equality, including its
/// gate, written only in terms of the local predicates above.
fn expected_equality(id: CheckId, f: &Facts) -> bool {
    match id {
        CheckId::C1 => f.n >= 2 && f.star,
        CheckId::C2 => f.n >= 2 && f.treg,
        CheckId::C3 | CheckId::C4 | CheckId::C5 | CheckId::C13 | CheckId::C18 => f.diam2,
        CheckId::C6 | CheckId::C14 | CheckId::C15 => f.treg,
        CheckId::C7 | CheckId::C9 => f.bipartite,
        CheckId::C8 => f.split_structure,
        CheckId::C10 => f.regular,
        CheckId::C11 => f.const_diff,
        CheckId::C12 => f.const_sum,
        CheckId::C16 => f.n >= 3 && ((f.n == 4 && f.path) || f.complement_matching),
        CheckId::C17 => f.tree && f.n >= 2 && f.star,
    }
}

#[test]
fn criterion_1_path_closed_forms() {
    for n in 2..=100usize {
        let g = fam(Family::Path, &[n as u64]);
        let dist = bfs_apsp(&g).unwrap();
        let nn = n as i128;
        let closed: Vec<i128> = (0..nn)
            .map(|i| {
                let num = 2 * i * i - 2 * (nn - 1) * i + (nn - 1) * (nn - 1) + (nn - 1);
                assert_eq!(num % 2, 0);
                num / 2
            })
            .collect();
        for v in 0..n {
            assert_eq!(
                dist.sigma()[v] as i128,
                closed[v],
                "sigma of P_{n} vertex {v}"
            );
        }
        assert_eq!(dist.wiener() as i128, (nn * nn * nn - nn) / 6, "W of P_{n}");

        let engine = int_value(
            &transmission_edge_indices(&g, &dist).unwrap(),
            IndexId::IrrTr,
        );
        let from_closed: i128 = (0..n - 1).map(|i| (closed[i + 1] - closed[i]).abs()).sum();
        // consecutive transmissions differ by 2i + 2 - n, so the even-order
        // total is n(n-2)/2 and the odd-order total is (n-1)^2/2
        let formula = if n % 2 == 0 {
            nn * (nn - 2) / 2
        } else {
            (nn - 1) * (nn - 1) / 2
        };
        assert_eq!(engine, from_closed, "irr_Tr route mismatch on P_{n}");
        assert_eq!(engine, formula, "irr_Tr closed form on P_{n}");
    }
}

#[test]
fn criterion_2_star_bipartite_windmill_forms() {
    for p in 1..=12u64 {
        for q in 1..=12u64 {
            let g = fam(Family::CompleteBipartite, &[p, q]);
            let rep = edge_report(&g);
            let (pi, qi) = (p as i128, q as i128);
            assert_eq!(
                int_value(&rep, IndexId::IrrTr),
                pi * qi * (pi - qi).abs(),
                "irr_Tr of K_{{{p},{q}}}"
            );
            let expected = (p + q) as f64 / 2.0 * (1.0 + (pi - qi).abs() as f64);
            assert_eq!(
                float_value(&rep, IndexId::QSve),
                expected,
                "QS_ve of K_{{{p},{q}}}"
            );
        }
    }
    for n in 2..=50usize {
        let g = fam(Family::Star, &[n as u64]);
        let rep = edge_report(&g);
        let expected = (n * (n - 1)) as f64 / 2.0;
        assert_eq!(float_value(&rep, IndexId::QSve), expected, "QS_ve of S_{n}");
        assert_eq!(
            bfs_apsp(&g).unwrap().wiener() as i128,
            ((n - 1) * (n - 1)) as i128,
            "W of S_{n}"
        );
    }
    for n in (5..=51u64).step_by(2) {
        let g = fam(Family::Windmill, &[n]);
        let rep = edge_report(&g);
        let ni = n as i128;
        assert_eq!(
            int_value(&rep, IndexId::IrrTr),
            (ni - 1) * (ni - 3),
            "irr_Tr of Wd({n})"
        );
    }
}

#[test]
fn criterion_3_transmission_regular_families() {
    let grd = fam(Family::RhombicDodecahedron, &[]);
    assert_eq!((grd.n(), grd.m()), (14, 24));
    assert!(local_bipartite(&grd));
    let deg = local_degrees(&grd);
    assert_eq!(deg.iter().filter(|&&d| d == 3).count(), 8);
    assert_eq!(deg.iter().filter(|&&d| d == 4).count(), 6);
    assert_eq!(bfs_apsp(&grd).unwrap().transmission_regular(), Some(28));

    for d in 1..=8u64 {
        let h = fam(Family::Hypercube, &[d]);
        assert_eq!(
            bfs_apsp(&h).unwrap().transmission_regular(),
            Some(d * (1 << (d - 1))),
            "H_{d}"
        );
    }

    let c20 = fam(Family::DodecahedronC20, &[]);
    assert_eq!(bfs_apsp(&c20).unwrap().transmission_regular(), Some(50));
    let c60 = fam(Family::TruncatedIcosahedronC60, &[]);
    assert_eq!(bfs_apsp(&c60).unwrap().transmission_regular(), Some(278));
}

#[test]
fn criterion_4_fullerene_index_table() {
    let c20 = fam(Family::DodecahedronC20, &[]);
    let rep20 = edge_report(&c20);
    assert_eq!(
        ratio_value(&rep20, IndexId::HS),
        Ratio::new(30, 50).unwrap()
    );
    assert_eq!(ratio_value(&rep20, IndexId::HS).to_f64(), 0.6);
    assert!((float_value(&rep20, IndexId::J) - 1.5).abs() <= 1e-12);
    assert!((float_value(&rep20, IndexId::SJ) - 7.5).abs() <= 1e-12);
    assert_eq!(float_value(&rep20, IndexId::GAS), 10.0);

    let c60 = fam(Family::TruncatedIcosahedronC60, &[]);
    let rep60 = edge_report(&c60);
    assert_eq!(
        ratio_value(&rep60, IndexId::HS),
        Ratio::new(90, 278).unwrap()
    );
    assert!((ratio_value(&rep60, IndexId::HS).to_f64() - 0.32).abs() <= 0.005);
    let j = float_value(&rep60, IndexId::J);
    assert!((j - 0.9).abs() <= 0.011, "J = {j}");
    // pinned regression values from an independent reference evaluation
    assert!((j - 0.9105215827338129).abs() <= 1e-9);
    let sj = float_value(&rep60, IndexId::SJ);
    assert!((sj - 10.73).abs() <= 0.005, "SJ = {sj}");
    assert!((sj - 10.734891141262132).abs() <= 1e-9);
    assert_eq!(float_value(&rep60, IndexId::GAS), 30.0);
}

fn assert_orbit_matches_direct(g: &Graph, label: &str) {
    let dist = bfs_apsp(g).unwrap();
    let orbits = automorphisms(g, &dist, DEFAULT_BUDGET).unwrap();
    let by_orbit = orbit_index_eval(g, &dist, &orbits).unwrap();
    let edge = transmission_edge_indices(g, &dist).unwrap();
    let vertex = transmission_vertex_indices(g, &dist, 1.0).unwrap();

    assert_eq!(
        by_orbit.get(IndexId::MS1),
        vertex.get(IndexId::MS1),
        "MS1 on {label}"
    );
    for id in [IndexId::MS2, IndexId::IrrTr, IndexId::HS] {
        assert_eq!(by_orbit.get(id), edge.get(id), "{id} on {label}");
    }
    for id in [
        IndexId::RS,
        IndexId::XS,
        IndexId::GAS,
        IndexId::J,
        IndexId::SJ,
        IndexId::QSe,
        IndexId::QSve,
    ] {
        let a = float_value(&by_orbit, id);
        let b = float_value(&edge, id);
        assert!(
            (a - b).abs() <= 1e-12 * b.abs().max(1.0),
            "{id} on {label}: {a} vs {b}"
        );
    }
}

#[test]
fn criterion_5_orbit_sum_equivalence() {
    let grd = fam(Family::RhombicDodecahedron, &[]);
    assert_orbit_matches_direct(&grd, "G_RD");

    for d in 1..=8u64 {
        let h = fam(Family::Hypercube, &[d]);
        let dist = bfs_apsp(&h).unwrap();
        let orbits = automorphisms(&h, &dist, DEFAULT_BUDGET).unwrap();
        assert!(orbits.vertex_transitive, "H_{d} vertex transitivity");
        assert!(orbits.edge_transitive, "H_{d} edge transitivity");
        assert_orbit_matches_direct(&h, &format!("H_{d}"));
    }

    for (family, label) in [
        (Family::DodecahedronC20, "C20"),
        (Family::TruncatedIcosahedronC60, "C60"),
    ] {
        let g = fam(family, &[]);
        let dist = bfs_apsp(&g).unwrap();
        let orbits = automorphisms(&g, &dist, DEFAULT_BUDGET).unwrap();
        assert!(orbits.vertex_transitive, "{label} vertex transitivity");
        assert_orbit_matches_direct(&g, label);
    }

    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            assert_orbit_matches_direct(&g, &write_graph6(&g).unwrap());
        }
    }
}

fn sweep_source(source: VerifySource, expect_total: u64) -> transindex::AggregateReport {
    let report = verify_stream(&source, 4).unwrap();
    assert_eq!(report.total, expect_total);
    for c in &report.per_check {
        assert_eq!(c.violations, 0, "{} violations on {}", c.id, report.source);
        assert_eq!(
            c.witnesses.len() as u64,
            c.equality.min(WITNESS_CAP as u64),
            "{} witness cap on {}",
            c.id,
            report.source
        );
        // every returned witness must satisfy the check's structural side
        for w in &c.witnesses {
            let g = parse_graph6(w).unwrap();
            assert!(
                expected_equality(c.id, &facts(&g)),
                "witness {w} fails the structural test for {}",
                c.id
            );
        }
    }
    report
}

/// Labelled graphs that are a clique minus a (possibly empty) matching:
/// one per involution of the vertex set.
fn involutions(n: u64) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for k in 2..=n {
        (prev, cur) = (cur, cur + (k - 1) * prev);
    }
    cur
}

#[test]
fn criterion_6_exhaustive_check_sweep() {
    // independent recount at small orders: every check's equality set must
    // coincide exactly with its structural predicate over Floyd-Warshall
    for n in 1..=6usize {
        let report = verify_stream(&VerifySource::Connected(n), 3).unwrap();
        for id in CheckId::ALL {
            let mut count = 0u64;
            let mut witnesses = Vec::new();
            for g in enumerate_connected(n).unwrap() {
                if expected_equality(id, &facts(&g)) {
                    count += 1;
                    if witnesses.len() < WITNESS_CAP {
                        witnesses.push(write_graph6(&g).unwrap());
                    }
                }
            }
            let agg = report.check(id);
            assert_eq!(agg.equality, count, "{id} equality count at n = {n}");
            assert_eq!(agg.witnesses, witnesses, "{id} witness set at n = {n}");
            assert_eq!(agg.violations, 0, "{id} violations at n = {n}");
        }
    }

    let r7 = sweep_source(VerifySource::Connected(7), 1_866_256);
    // closed-form witness counts: one star per hub; one near-complete graph
    // per involution; the star is also the only tree at the lower extreme
    assert_eq!(r7.check(CheckId::C1).equality, 7);
    assert_eq!(r7.check(CheckId::C16).equality, involutions(7));
    assert_eq!(r7.check(CheckId::C17).equality, 7);
    // checks that share a characterization must agree exactly
    let diam2 = r7.check(CheckId::C3).equality;
    for id in [CheckId::C4, CheckId::C5, CheckId::C13, CheckId::C18] {
        assert_eq!(r7.check(id).equality, diam2, "{id}");
    }
    let treg = r7.check(CheckId::C2).equality;
    for id in [CheckId::C6, CheckId::C14, CheckId::C15] {
        assert_eq!(r7.check(id).equality, treg, "{id}");
    }
    assert_eq!(
        r7.check(CheckId::C7).equality,
        r7.check(CheckId::C9).equality
    );

    let rt = sweep_source(VerifySource::Trees(8), 262_144);
    assert_eq!(rt.check(CheckId::C1).equality, 8);
    assert_eq!(rt.check(CheckId::C17).equality, 8);
    // every tree is bipartite
    assert_eq!(rt.check(CheckId::C9).equality, rt.total);
}

#[test]
fn criterion_7_tree_identities() {
    for n in 2..=8usize {
        let ni = n as i128;
        let lo = (ni - 1) * (3 * ni - 4);
        let hi = ni * (ni - 1) * (2 * ni - 1) / 3;
        for t in enumerate_trees(n).unwrap() {
            let dist = bfs_apsp(&t).unwrap();
            let vertex = transmission_vertex_indices(&t, &dist, 1.0).unwrap();
            let ms1 = int_value(&vertex, IndexId::MS1);
            let w = dist.wiener() as i128;
            let splits = transindex::edge_splits(&t, &dist);
            let sz = int_value(&szeged_indices(&t, &splits).unwrap(), IndexId::Sz);

            assert_eq!(ms1, 4 * w - ni * (ni - 1));
            assert_eq!(sz, w, "Sz = W on trees");
            assert_eq!(ms1, 4 * sz - ni * (ni - 1));
            assert!(lo <= ms1 && ms1 <= hi, "degree-distance range at n = {n}");
            assert_eq!(ms1 == lo, local_star(&t), "lower extreme is the star");
            assert_eq!(ms1 == hi, local_path(&t), "upper extreme is the path");
        }
    }
}

#[test]
fn criterion_8_distance_spectral_radius() {
    for n in 1..=50u64 {
        let g = fam(Family::Complete, &[n]);
        let rho = distance_spectral_radius(&bfs_apsp(&g).unwrap()).unwrap();
        assert!(
            (rho - (n as f64 - 1.0)).abs() <= 1e-9,
            "rho_D of K_{n} = {rho}"
        );
    }

    let mut corpus: Vec<(String, Graph)> = Vec::new();
    for n in 3..=12u64 {
        corpus.push((format!("C_{n}"), fam(Family::Cycle, &[n])));
    }
    for n in 2..=10u64 {
        corpus.push((format!("K_{n}"), fam(Family::Complete, &[n])));
    }
    for p in 2..=6u64 {
        corpus.push((
            format!("K_{{{p},{p}}}"),
            fam(Family::CompleteBipartite, &[p, p]),
        ));
    }
    for d in 1..=8u64 {
        corpus.push((format!("H_{d}"), fam(Family::Hypercube, &[d])));
    }
    corpus.push(("G_RD".into(), fam(Family::RhombicDodecahedron, &[])));
    corpus.push(("C20".into(), fam(Family::DodecahedronC20, &[])));
    corpus.push(("C60".into(), fam(Family::TruncatedIcosahedronC60, &[])));
    for (p, q) in [(4u64, 4u64), (6, 4), (8, 6)] {
        corpus.push((
            format!("T[{p},{q}]"),
            fam(Family::PolyhexNanotorus, &[p, q]),
        ));
    }
    for (label, g) in &corpus {
        let dist = bfs_apsp(g).unwrap();
        assert!(
            dist.transmission_regular().is_some(),
            "{label} should be transmission regular"
        );
        let rho = distance_spectral_radius(&dist).unwrap();
        let mean = 2.0 * dist.wiener() as f64 / g.n() as f64;
        assert!((rho - mean).abs() <= 1e-9, "{label}: {rho} vs {mean}");
    }

    // strict separation for everything not transmission regular
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            let dist = bfs_apsp(&g).unwrap();
            if dist.transmission_regular().is_some() {
                continue;
            }
            let rho = distance_spectral_radius(&dist).unwrap();
            let mean = 2.0 * dist.wiener() as f64 / g.n() as f64;
            assert!(
                rho > mean + 1e-9,
                "{}: rho {rho} too close to mean {mean}",
                write_graph6(&g).unwrap()
            );
        }
    }
}

#[test]
fn criterion_9_graph6_round_trip() {
    let mut count = 0u64;
    for t in enumerate_trees(8).unwrap() {
        let s = write_graph6(&t).unwrap();
        assert_eq!(parse_graph6(&s).unwrap(), t);
        count += 1;
    }
    for n in 1..=5 {
        for g in enumerate_connected(n).unwrap() {
            let s = write_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g);
            count += 1;
        }
    }
    for (family, params) in [
        (Family::Hypercube, vec![8u64]),
        (Family::DodecahedronC20, vec![]),
        (Family::TruncatedIcosahedronC60, vec![]),
        (Family::Windmill, vec![51]),
        (Family::CompleteBipartite, vec![12, 12]),
        (Family::PolyhexNanotorus, vec![8, 6]),
    ] {
        let g = FamilySpec::new(family, params).generate().unwrap();
        let s = write_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&s).unwrap(), g);
        count += 1;
    }
    assert!(count >= 100_000, "round-trip corpus too small: {count}");

    let k3 = Graph::from_edges(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
    assert_eq!(parse_graph6("Bw").unwrap(), k3);
    assert_eq!(write_graph6(&k3).unwrap(), "Bw");
}
