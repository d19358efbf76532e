//! graph6 codec: compact ASCII encoding of labelled simple graphs.
//!
//! The encoding packs the upper triangle of the adjacency matrix in column
//! order x(0,1), x(0,2), x(1,2), x(0,3), ... into 6-bit groups, each offset
//! by 63. Orders up to 62 use a single size byte; 63..=258047 use `~` plus
//! three size bytes (beyond that the first size byte would collide with the
//! `~~` marker of the 8-byte form, which is not supported here). Decoding is
//! strict: out-of-range bytes, nonzero padding bits, non-canonical long
//! sizes, and trailing garbage are all rejected, so decode-encode is the
//! identity on accepted inputs.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
/// Largest order encodable with the supported size forms.
pub const MAX_GRAPH6_N: usize = 258_047;

/// Decodes a single graph6 line. A leading `>>graph6<<` header and trailing
/// newline are tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    let (n, data) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expect = bits.div_ceil(6);
    if data.len() != expect {
        return Err(Error::MalformedGraph6(format!(
            "order {n} needs {expect} data bytes, found {}",
            data.len()
        )));
    }
    for &b in data {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedGraph6(format!(
                "byte 0x{b:02x} out of range"
            )));
        }
    }
    let bit = |i: usize| (data[i / 6] - 63) >> (5 - i % 6) & 1;
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    for j in i..expect * 6 {
        if bit(j) != 0 {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    match bytes[0] {
        126 => {
            if bytes.get(1) == Some(&126) {
                return Err(Error::MalformedGraph6(
                    "orders requiring the 8-byte size form are unsupported".into(),
                ));
            }
            if bytes.len() < 4 {
                return Err(Error::MalformedGraph6("truncated size field".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                if !(63..=126).contains(&b) {
                    return Err(Error::MalformedGraph6(format!(
                        "size byte 0x{b:02x} out of range"
                    )));
                }
                n = n << 6 | (b - 63) as usize;
            }
            if n <= 62 {
                return Err(Error::MalformedGraph6(format!(
                    "non-canonical long size form for order {n}"
                )));
            }
            Ok((n, &bytes[4..]))
        }
        b @ 63..=125 => Ok(((b - 63) as usize, &bytes[1..])),
        b => Err(Error::MalformedGraph6(format!(
            "size byte 0x{b:02x} out of range"
        ))),
    }
}

/// Encodes a graph as a graph6 string (no header, no newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    match n {
        0..=62 => out.push(63 + n as u8),
        63..=MAX_GRAPH6_N => {
            out.push(126);
            out.push(63 + (n >> 12 & 63) as u8);
            out.push(63 + (n >> 6 & 63) as u8);
            out.push(63 + (n & 63) as u8);
        }
        _ => return Err(Error::GraphTooLarge(n)),
    }
    let mut acc = 0u8;
    let mut used = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
