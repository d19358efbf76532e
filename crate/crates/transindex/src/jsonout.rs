//! Minimal deterministic JSON rendering.
//!
//! Object keys are emitted in sorted order and floats in full-precision
//! scientific notation, so byte-identical output is reproducible across
//! runs and worker counts.

use crate::indices::{IndexReport, Value};
use crate::symmetry::OrbitPartition;
use crate::verify::AggregateReport;

#[derive(Debug, Clone, PartialEq)]
pub enum Json {
    Bool(bool),
    Int(i128),
    Float(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

impl Json {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    fn write(&self, out: &mut String) {
        match self {
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => out.push_str(&i.to_string()),
            Json::Float(f) => {
                debug_assert!(f.is_finite());
                out.push_str(&format!("{f:.16e}"));
            }
            Json::Str(s) => write_escaped(s, out),
            Json::Arr(items) => {
                out.push('[');
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Obj(entries) => {
                let mut order: Vec<&(String, Json)> = entries.iter().collect();
                order.sort_by(|a, b| a.0.cmp(&b.0));
                out.push('{');
                for (k, (key, value)) in order.into_iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    write_escaped(key, out);
                    out.push(':');
                    value.write(out);
                }
                out.push('}');
            }
        }
    }
}

fn write_escaped(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
}

/// Index values keep exact integers exact; non-integer rationals become
/// explicit numerator/denominator objects.
pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Int(i) => Json::Int(*i),
        Value::Ratio(r) => {
            if r.is_integer() {
                Json::Int(r.num())
            } else {
                Json::Obj(vec![
                    ("num".to_string(), Json::Int(r.num())),
                    ("den".to_string(), Json::Int(r.den())),
                ])
            }
        }
        Value::Float(f) => Json::Float(*f),
    }
}

/// One compute line: graph identifier plus the requested index values.
pub fn index_report_json(graph6: &str, report: &IndexReport) -> Json {
    let indices = Json::Obj(
        report
            .entries()
            .iter()
            .map(|e| (e.id.as_str().to_string(), value_json(&e.value)))
            .collect(),
    );
    let mut top = vec![
        ("graph".to_string(), Json::Str(graph6.to_string())),
        ("indices".to_string(), indices),
    ];
    if let Some(lambda) = report.lambda {
        top.push(("lambda".to_string(), Json::Float(lambda)));
    }
    if let Some(balanced) = report.distance_balanced {
        top.push(("distance_balanced".to_string(), Json::Bool(balanced)));
    }
    Json::Obj(top)
}

/// The verify aggregate in its documented shape.
pub fn aggregate_json(report: &AggregateReport) -> Json {
    let per_check = report
        .per_check
        .iter()
        .map(|c| {
            Json::Obj(vec![
                ("id".to_string(), Json::Str(c.id.as_str().to_string())),
                ("holds".to_string(), Json::Int(c.holds as i128)),
                ("equality".to_string(), Json::Int(c.equality as i128)),
                ("violations".to_string(), Json::Int(c.violations as i128)),
                (
                    "witnesses".to_string(),
                    Json::Arr(c.witnesses.iter().map(|w| Json::Str(w.clone())).collect()),
                ),
            ])
        })
        .collect();
    Json::Obj(vec![
        ("source".to_string(), Json::Str(report.source.clone())),
        ("total".to_string(), Json::Int(report.total as i128)),
        ("per_check".to_string(), Json::Arr(per_check)),
    ])
}

/// Orbit decomposition summary for one graph.
pub fn orbits_json(graph6: &str, orbits: &OrbitPartition) -> Json {
    let vertex_orbits = Json::Arr(
        orbits
            .vertex_orbits
            .iter()
            .map(|o| Json::Arr(o.iter().map(|&v| Json::Int(v as i128)).collect()))
            .collect(),
    );
    let edge_orbits = Json::Arr(
        orbits
            .edge_orbits
            .iter()
            .map(|o| {
                Json::Arr(
                    o.iter()
                        .map(|&(u, v)| Json::Arr(vec![Json::Int(u as i128), Json::Int(v as i128)]))
                        .collect(),
                )
            })
            .collect(),
    );
    let generators = Json::Arr(
        orbits
            .generators
            .iter()
            .map(|p| Json::Arr(p.iter().map(|&v| Json::Int(v as i128)).collect()))
            .collect(),
    );
    Json::Obj(vec![
        ("graph".to_string(), Json::Str(graph6.to_string())),
        ("vertex_orbits".to_string(), vertex_orbits),
        ("edge_orbits".to_string(), edge_orbits),
        ("generators".to_string(), generators),
        (
            "vertex_transitive".to_string(),
            Json::Bool(orbits.vertex_transitive),
        ),
        (
            "edge_transitive".to_string(),
            Json::Bool(orbits.edge_transitive),
        ),
    ])
}
