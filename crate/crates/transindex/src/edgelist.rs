//! Plain-text edge list format: one `u v` pair per line, whitespace
//! separated. An optional first line `n <count>` declares the order, which
//! allows trailing isolated vertices; otherwise the order is one past the
//! largest label. Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_label: Option<usize> = None;
    let mut seen_data = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let first = tokens.next().expect("non-empty line has a token");
        if !seen_data && first == "n" {
            let count = tokens
                .next()
                .ok_or_else(|| parse_err(lineno, "header needs a vertex count"))?;
            declared = Some(parse_usize(count, lineno)?);
            reject_extra(tokens, lineno)?;
            seen_data = true;
            continue;
        }
        seen_data = true;
        let u = parse_usize(first, lineno)?;
        let v = tokens
            .next()
            .map(|t| parse_usize(t, lineno))
            .transpose()?
            .ok_or_else(|| parse_err(lineno, "expected two vertex labels"))?;
        reject_extra(tokens, lineno)?;
        max_label = Some(max_label.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }

    let n = match (declared, max_label) {
        (Some(n), _) => n,
        (None, Some(mx)) => mx + 1,
        (None, None) => 0,
    };
    Graph::from_edges(n, edges)
}

fn parse_usize(token: &str, lineno: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(lineno, &format!("invalid vertex label {token:?}")))
}

fn reject_extra<'a>(mut tokens: impl Iterator<Item = &'a str>, lineno: usize) -> Result<()> {
    match tokens.next() {
        Some(t) => Err(parse_err(lineno, &format!("unexpected token {t:?}"))),
        None => Ok(()),
    }
}

fn parse_err(lineno: usize, msg: &str) -> Error {
    Error::ParseError {
        line: lineno + 1,
        msg: msg.to_string(),
    }
}
