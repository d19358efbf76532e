//! The topological index catalog and its evaluation engine.
//!
//! Indices come in three families: degree-based (Zagreb, Randic, harmonic,
//! geometric-arithmetic and their variants), transmission-based (the same
//! shapes with vertex transmissions in place of degrees, plus Wiener,
//! Balaban and irregularity measures), and cut-based (Szeged). Values are
//! exact integers or rationals wherever the defining formula is integral or
//! rational, and doubles otherwise.

use crate::distance::{DistanceData, EdgeSplit};
use crate::error::{Error, Result};
use crate::exact::{checked_add, checked_mul, checked_sub, Ratio};
use crate::graph::{DegreeData, Graph};

/// Stable identifiers for every supported index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexId {
    W,
    M1,
    M2,
    M1Lambda,
    M2Lambda,
    R,
    X,
    H,
    GA,
    Irr,
    Var,
    S,
    Es,
    RS,
    XS,
    HS,
    GAS,
    J,
    SJ,
    MS1,
    MS2,
    MSLambda,
    MSDLambda,
    XiD,
    IrrTr,
    VarTr,
    QSe,
    QSve,
    Phi,
    Sz,
    SzStar,
    RhoD,
}

impl IndexId {
    /// Every index in catalog order.
    pub const ALL: [IndexId; 32] = [
        IndexId::W,
        IndexId::M1,
        IndexId::M2,
        IndexId::M1Lambda,
        IndexId::M2Lambda,
        IndexId::R,
        IndexId::X,
        IndexId::H,
        IndexId::GA,
        IndexId::Irr,
        IndexId::Var,
        IndexId::S,
        IndexId::Es,
        IndexId::RS,
        IndexId::XS,
        IndexId::HS,
        IndexId::GAS,
        IndexId::J,
        IndexId::SJ,
        IndexId::MS1,
        IndexId::MS2,
        IndexId::MSLambda,
        IndexId::MSDLambda,
        IndexId::XiD,
        IndexId::IrrTr,
        IndexId::VarTr,
        IndexId::QSe,
        IndexId::QSve,
        IndexId::Phi,
        IndexId::Sz,
        IndexId::SzStar,
        IndexId::RhoD,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IndexId::W => "W",
            IndexId::M1 => "M1",
            IndexId::M2 => "M2",
            IndexId::M1Lambda => "M1_lambda",
            IndexId::M2Lambda => "M2_lambda",
            IndexId::R => "R",
            IndexId::X => "X",
            IndexId::H => "H",
            IndexId::GA => "GA",
            IndexId::Irr => "irr",
            IndexId::Var => "Var",
            IndexId::S => "s",
            IndexId::Es => "es",
            IndexId::RS => "RS",
            IndexId::XS => "XS",
            IndexId::HS => "HS",
            IndexId::GAS => "GAS",
            IndexId::J => "J",
            IndexId::SJ => "SJ",
            IndexId::MS1 => "MS1",
            IndexId::MS2 => "MS2",
            IndexId::MSLambda => "MS_lambda",
            IndexId::MSDLambda => "MSD_lambda",
            IndexId::XiD => "xi_d",
            IndexId::IrrTr => "irr_Tr",
            IndexId::VarTr => "Var_Tr",
            IndexId::QSe => "QS_e",
            IndexId::QSve => "QS_ve",
            IndexId::Phi => "Phi",
            IndexId::Sz => "Sz",
            IndexId::SzStar => "Sz_star",
            IndexId::RhoD => "rho_D",
        }
    }

    /// Parses a catalog identifier; rejects anything outside the catalog.
    pub fn parse(s: &str) -> Result<IndexId> {
        for id in IndexId::ALL {
            if id.as_str() == s {
                return Ok(id);
            }
        }
        Err(Error::UnknownIndexId(s.to_string()))
    }
}

impl std::fmt::Display for IndexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An index value: exact integer, exact rational, or double.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Int(i128),
    Ratio(Ratio),
    Float(f64),
}

impl Value {
    /// Numeric view of the value, exact kinds converted to double.
    pub fn as_f64(&self) -> f64 {
        match self {
            Value::Int(v) => *v as f64,
            Value::Ratio(r) => r.to_f64(),
            Value::Float(f) => *f,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Value::Float(_))
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Ratio(r) => write!(f, "{r}"),
            Value::Float(x) => write!(f, "{x}"),
        }
    }
}

/// How an entry was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Direct,
    OrbitSum,
}

/// One evaluated index.
#[derive(Debug, Clone)]
pub struct Entry {
    pub id: IndexId,
    pub value: Value,
    pub provenance: Provenance,
}

/// Evaluated indices for one graph. Entries are kept in catalog order and
/// each identifier appears at most once.
#[derive(Debug, Clone, Default)]
pub struct IndexReport {
    entries: Vec<Entry>,
    pub lambda: Option<f64>,
    /// Set by the cut-based fragment: true iff every edge has equal-size
    /// near sides.
    pub distance_balanced: Option<bool>,
}

impl IndexReport {
    pub fn new() -> Self {
        IndexReport::default()
    }

    pub fn push(&mut self, id: IndexId, value: Value, provenance: Provenance) {
        debug_assert!(self.get(id).is_none(), "duplicate index entry {id}");
        self.entries.push(Entry {
            id,
            value,
            provenance,
        });
    }

    pub fn get(&self, id: IndexId) -> Option<&Value> {
        self.entries.iter().find(|e| e.id == id).map(|e| &e.value)
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Keeps only the requested identifiers, preserving entry order.
    pub fn retain(&mut self, wanted: &[IndexId]) {
        self.entries.retain(|e| wanted.contains(&e.id));
    }

    /// Reorders entries into catalog order.
    pub fn sort_catalog(&mut self) {
        self.entries.sort_by_key(|e| e.id);
    }
}

fn iv(x: u64) -> i128 {
    x as i128
}

/// Sum of f(edge) over the canonical edge order. Left fold keeps float
/// results identical across runs.
fn edge_sum<F: FnMut(usize, usize) -> f64>(g: &Graph, mut f: F) -> f64 {
    let mut acc = 0.0;
    for &(u, v) in g.edges() {
        acc += f(u, v);
    }
    acc
}

/// Degree-based fragment: M1, M2, variable Zagreb, Randic, sum-connectivity,
/// harmonic, geometric-arithmetic, irregularity, variance, deviation and the
/// strong-edge count.
pub fn degree_indices(g: &Graph, dd: &DegreeData, lambda: f64) -> Result<IndexReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.n() as i128;
    let m = g.m() as i128;
    let mut rep = IndexReport::new();
    rep.lambda = Some(lambda);

    let mut m1: i128 = 0;
    let mut dev_num: i128 = 0; // sum of |n*d(u) - 2m|
    for u in 0..g.n() {
        let d = dd.deg[u] as i128;
        m1 = checked_add(m1, checked_mul(d, d)?)?;
        dev_num = checked_add(dev_num, (checked_mul(n, d)? - 2 * m).abs())?;
    }
    let mut m2: i128 = 0;
    let mut irr: i128 = 0;
    let mut es: i128 = 0;
    for &(u, v) in g.edges() {
        let (du, dv) = (dd.deg[u] as i128, dd.deg[v] as i128);
        m2 = checked_add(m2, checked_mul(du, dv)?)?;
        irr = checked_add(irr, (du - dv).abs())?;
        if du != dv {
            es += 1;
        }
    }

    rep.push(IndexId::M1, Value::Int(m1), Provenance::Direct);
    rep.push(IndexId::M2, Value::Int(m2), Provenance::Direct);

    let m1l = (0..g.n())
        .map(|u| (dd.deg[u] as f64).powf(2.0 * lambda))
        .sum::<f64>();
    let m2l = edge_sum(g, |u, v| {
        ((dd.deg[u] as f64) * (dd.deg[v] as f64)).powf(lambda)
    });
    rep.push(IndexId::M1Lambda, Value::Float(m1l), Provenance::Direct);
    rep.push(IndexId::M2Lambda, Value::Float(m2l), Provenance::Direct);

    let r = edge_sum(g, |u, v| {
        1.0 / ((dd.deg[u] as f64) * (dd.deg[v] as f64)).sqrt()
    });
    let x = edge_sum(g, |u, v| 1.0 / ((dd.deg[u] + dd.deg[v]) as f64).sqrt());
    let h = edge_sum(g, |u, v| 2.0 / ((dd.deg[u] + dd.deg[v]) as f64));
    let ga = edge_sum(g, |u, v| {
        if dd.deg[u] == dd.deg[v] {
            1.0
        } else {
            2.0 * ((dd.deg[u] as f64) * (dd.deg[v] as f64)).sqrt()
                / ((dd.deg[u] + dd.deg[v]) as f64)
        }
    });
    rep.push(IndexId::R, Value::Float(r), Provenance::Direct);
    rep.push(IndexId::X, Value::Float(x), Provenance::Direct);
    rep.push(IndexId::H, Value::Float(h), Provenance::Direct);
    rep.push(IndexId::GA, Value::Float(ga), Provenance::Direct);

    rep.push(IndexId::Irr, Value::Int(irr), Provenance::Direct);
    // Var = M1/n - 4m^2/n^2 = (n*M1 - 4m^2) / n^2
    let var_num = checked_sub(checked_mul(n, m1)?, checked_mul(4, checked_mul(m, m)?)?)?;
    rep.push(
        IndexId::Var,
        Value::Ratio(Ratio::new(var_num, checked_mul(n, n)?)?),
        Provenance::Direct,
    );
    rep.push(
        IndexId::S,
        Value::Ratio(Ratio::new(dev_num, n)?),
        Provenance::Direct,
    );
    rep.push(IndexId::Es, Value::Int(es), Provenance::Direct);
    Ok(rep)
}

/// True when 2*lambda is the integer k (so the power is exactly computable).
fn as_half_integer(lambda: f64) -> Option<u32> {
    let twice = 2.0 * lambda;
    if (0.0..=8.0).contains(&twice) && twice.fract() == 0.0 {
        Some(twice as u32)
    } else {
        None
    }
}

fn checked_pow(base: i128, exp: u32) -> Result<i128> {
    let mut acc: i128 = 1;
    for _ in 0..exp {
        acc = checked_mul(acc, base)?;
    }
    Ok(acc)
}

/// Transmission vertex-sum fragment: Wiener, variable transmission Zagreb
/// sums, degree distance, transmission variance, the regularity measure Phi
/// and the eccentric distance sum.
pub fn transmission_vertex_indices(
    g: &Graph,
    dist: &DistanceData,
    lambda: f64,
) -> Result<IndexReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.n() as i128;
    let sig = dist.sigma();
    let ecc = dist.ecc();
    let mut rep = IndexReport::new();
    rep.lambda = Some(lambda);

    let w = iv(dist.wiener());
    rep.push(IndexId::W, Value::Int(w), Provenance::Direct);

    // MS^lambda = sum sigma^(2*lambda): exact when 2*lambda is integral.
    let ms_l = match as_half_integer(lambda) {
        Some(k) => {
            let mut acc: i128 = 0;
            for &s in sig {
                acc = checked_add(acc, checked_pow(iv(s), k)?)?;
            }
            Value::Int(acc)
        }
        None => Value::Float(sig.iter().map(|&s| (s as f64).powf(2.0 * lambda)).sum()),
    };
    rep.push(IndexId::MSLambda, ms_l, Provenance::Direct);

    // MSD^lambda = sum d*sigma^(2*lambda - 1): exact when 2*lambda - 1 is a
    // nonnegative integer. Vertices of degree 0 contribute nothing.
    let msd_l = match as_half_integer(lambda - 0.5) {
        Some(k) => {
            let mut acc: i128 = 0;
            for (u, &s) in sig.iter().enumerate() {
                let d = g.degree(u) as i128;
                acc = checked_add(acc, checked_mul(d, checked_pow(iv(s), k)?)?)?;
            }
            Value::Int(acc)
        }
        None => Value::Float(
            (0..g.n())
                .filter(|&u| g.degree(u) > 0)
                .map(|u| (g.degree(u) as f64) * (sig[u] as f64).powf(2.0 * lambda - 1.0))
                .sum(),
        ),
    };
    rep.push(IndexId::MSDLambda, msd_l, Provenance::Direct);

    let mut ms1: i128 = 0; // sum d*sigma
    let mut ms_sq: i128 = 0; // sum sigma^2
    let mut xi: i128 = 0; // sum ecc*sigma
    for u in 0..g.n() {
        let s = iv(sig[u]);
        ms1 = checked_add(ms1, checked_mul(g.degree(u) as i128, s)?)?;
        ms_sq = checked_add(ms_sq, checked_mul(s, s)?)?;
        xi = checked_add(xi, checked_mul(ecc[u] as i128, s)?)?;
    }
    rep.push(IndexId::MS1, Value::Int(ms1), Provenance::Direct);
    rep.push(IndexId::XiD, Value::Int(xi), Provenance::Direct);

    // Var_Tr = (n*sum(sigma^2) - 4W^2) / n^2
    let vt_num = checked_sub(checked_mul(n, ms_sq)?, checked_mul(4, checked_mul(w, w)?)?)?;
    rep.push(
        IndexId::VarTr,
        Value::Ratio(Ratio::new(vt_num, checked_mul(n, n)?)?),
        Provenance::Direct,
    );

    // Phi = 4W^2 / (n*sum(sigma^2)); one vertex has W = sum(sigma^2) = 0 and
    // takes the regular-case value 1.
    let phi = if ms_sq == 0 {
        Ratio::int(1)
    } else {
        Ratio::new(checked_mul(4, checked_mul(w, w)?)?, checked_mul(n, ms_sq)?)?
    };
    rep.push(IndexId::Phi, Value::Ratio(phi), Provenance::Direct);
    Ok(rep)
}

/// Exact rational harmonic-style edge sum: 2/(sigma(u)+sigma(v)) summed in
/// canonical edge order. Falls back to a double when the running rational
/// overflows i128.
fn harmonic_sigma_exact(g: &Graph, dist: &DistanceData) -> Result<Value> {
    let sig = dist.sigma();
    let mut acc = Ratio::ZERO;
    for &(u, v) in g.edges() {
        let den = checked_add(iv(sig[u]), iv(sig[v]))?;
        let term = Ratio::new(2, den)?;
        match acc.checked_add(term) {
            Ok(next) => acc = next,
            Err(Error::ArithmeticOverflow) => {
                let f = edge_sum(g, |a, b| 2.0 / ((sig[a] + sig[b]) as f64));
                return Ok(Value::Float(f));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Value::Ratio(acc))
}

/// Transmission edge-sum fragment: transmission Randic, sum-connectivity,
/// harmonic and geometric-arithmetic, Balaban and sum-Balaban, the second
/// transmission Zagreb index, transmission irregularity and the quotient
/// measures QS_e and QS_ve.
pub fn transmission_edge_indices(g: &Graph, dist: &DistanceData) -> Result<IndexReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.n();
    let m = g.m();
    let sig = dist.sigma();
    let mut rep = IndexReport::new();

    let mut ms2: i128 = 0;
    let mut irr_tr: i128 = 0;
    for &(u, v) in g.edges() {
        let (su, sv) = (iv(sig[u]), iv(sig[v]));
        ms2 = checked_add(ms2, checked_mul(su, sv)?)?;
        irr_tr = checked_add(irr_tr, (su - sv).abs())?;
    }

    let rs = edge_sum(g, |u, v| 1.0 / ((sig[u] as f64) * (sig[v] as f64)).sqrt());
    let xs = edge_sum(g, |u, v| 1.0 / ((sig[u] + sig[v]) as f64).sqrt());
    let hs = harmonic_sigma_exact(g, dist)?;
    // GAS carries the n/(2m) prefactor; equal transmissions contribute
    // exactly 1 so transmission-regular graphs land on n/2 exactly.
    let gas_sum = edge_sum(g, |u, v| {
        if sig[u] == sig[v] {
            1.0
        } else {
            2.0 * ((sig[u] as f64) * (sig[v] as f64)).sqrt() / ((sig[u] + sig[v]) as f64)
        }
    });
    let gas = if m == 0 {
        // One vertex: empty sum, prefactor moot.
        0.0
    } else {
        (n as f64) * gas_sum / (2.0 * m as f64)
    };

    // Balaban prefactor m/(m - n + 2); cyclomatic m - n + 2 >= 1 for every
    // connected graph (trees give exactly 1).
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

    rep.push(IndexId::RS, Value::Float(rs), Provenance::Direct);
    rep.push(IndexId::XS, Value::Float(xs), Provenance::Direct);
    rep.push(IndexId::HS, hs, Provenance::Direct);
    rep.push(IndexId::GAS, Value::Float(gas), Provenance::Direct);
    rep.push(IndexId::J, Value::Float(balaban * rs), Provenance::Direct);
    rep.push(IndexId::SJ, Value::Float(balaban * xs), Provenance::Direct);
    rep.push(IndexId::MS2, Value::Int(ms2), Provenance::Direct);
    rep.push(IndexId::IrrTr, Value::Int(irr_tr), Provenance::Direct);
    rep.push(IndexId::QSe, Value::Float(qs_e), Provenance::Direct);
    rep.push(IndexId::QSve, Value::Float(qs_ve), Provenance::Direct);
    Ok(rep)
}

/// Cut-based fragment: Szeged and revised Szeged indices plus the
/// distance-balanced flag (every edge splits the graph evenly).
pub fn szeged_indices(g: &Graph, splits: &[EdgeSplit]) -> Result<IndexReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rep = IndexReport::new();
    let mut sz: i128 = 0;
    let mut sz4: i128 = 0; // 4 * Sz_star
    let mut balanced = true;
    for sp in splits {
        let (nu, nv, nuv) = (sp.n_u as i128, sp.n_v as i128, sp.n_uv as i128);
        sz = checked_add(sz, checked_mul(nu, nv)?)?;
        sz4 = checked_add(sz4, checked_mul(2 * nu + nuv, 2 * nv + nuv)?)?;
        if nu != nv {
            balanced = false;
        }
    }
    rep.push(IndexId::Sz, Value::Int(sz), Provenance::Direct);
    rep.push(
        IndexId::SzStar,
        Value::Ratio(Ratio::new(sz4, 4)?),
        Provenance::Direct,
    );
    rep.distance_balanced = Some(balanced);
    Ok(rep)
}

/// Merges `fragment` into `rep`, preserving the lambda echo and the
/// distance-balanced flag when the fragment carries them.
pub fn merge(rep: &mut IndexReport, fragment: IndexReport) {
    if fragment.lambda.is_some() {
        rep.lambda = fragment.lambda;
    }
    if fragment.distance_balanced.is_some() {
        rep.distance_balanced = fragment.distance_balanced;
    }
    for e in fragment.entries {
        rep.push(e.id, e.value, e.provenance);
    }
}

/// Evaluates the full catalog for one connected graph.
pub fn full_report(g: &Graph, lambda: f64) -> Result<IndexReport> {
    let dd = g.degree_data();
    let dist = crate::distance::bfs_apsp(g)?;
    let splits = crate::distance::edge_splits(g, &dist);
    let mut rep = IndexReport::new();
    merge(&mut rep, degree_indices(g, &dd, lambda)?);
    merge(&mut rep, transmission_vertex_indices(g, &dist, lambda)?);
    merge(&mut rep, transmission_edge_indices(g, &dist)?);
    merge(&mut rep, szeged_indices(g, &splits)?);
    rep.push(
        IndexId::RhoD,
        Value::Float(crate::spectral::distance_spectral_radius(&dist)?),
        Provenance::Direct,
    );
    Ok(rep)
}

/// Evaluates only the requested identifiers, skipping whole fragments
/// (and the BFS or power iteration behind them) that none of them need.
/// Entries come back in catalog order regardless of the request order.
pub fn selected_report(g: &Graph, lambda: f64, wanted: &[IndexId]) -> Result<IndexReport> {
    use IndexId::*;
    let want = |ids: &[IndexId]| wanted.iter().any(|w| ids.contains(w));
    let need_degree = want(&[M1, M2, M1Lambda, M2Lambda, R, X, H, GA, Irr, Var, S, Es]);
    let need_vertex = want(&[W, MSLambda, MSDLambda, MS1, VarTr, Phi, XiD]);
    let need_edge = want(&[RS, XS, HS, GAS, J, SJ, MS2, IrrTr, QSe, QSve]);
    let need_szeged = want(&[Sz, SzStar]);
    let need_spectral = want(&[RhoD]);

    let mut rep = IndexReport::new();
    if need_degree {
        merge(&mut rep, degree_indices(g, &g.degree_data(), lambda)?);
    }
    if need_vertex || need_edge || need_szeged || need_spectral {
        let dist = crate::distance::bfs_apsp(g)?;
        if need_vertex {
            merge(&mut rep, transmission_vertex_indices(g, &dist, lambda)?);
        }
        if need_edge {
            merge(&mut rep, transmission_edge_indices(g, &dist)?);
        }
        if need_szeged {
            let splits = crate::distance::edge_splits(g, &dist);
            merge(&mut rep, szeged_indices(g, &splits)?);
        }
        if need_spectral {
            rep.push(
                IndexId::RhoD,
                Value::Float(crate::spectral::distance_spectral_radius(&dist)?),
                Provenance::Direct,
            );
        }
    }
    rep.retain(wanted);
    rep.sort_catalog();
    Ok(rep)
}
