//! graph6 codec (McKay bit-packed format), single-byte header, n <= 62.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Encode a graph as a graph6 string. Supports n <= 62.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Graph6(format!("n = {n} exceeds 62")));
    }
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - i);
            }
        }
        out.push((val + 63) as char);
    }
    Ok(out)
}

/// Parse a graph6 string. Supports the single-byte header (n <= 62).
pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    if bytes[0] == 126 {
        return Err(Error::Graph6("multi-byte headers (n > 62) unsupported".into()));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(Error::Graph6(format!("bad header byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let need_bits = n * (n.saturating_sub(1)) / 2;
    let need_bytes = need_bits.div_ceil(6);
    if bytes.len() != 1 + need_bytes {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n = {n}, got {}",
            need_bytes,
            bytes.len() - 1
        )));
    }
    let mut bits = Vec::with_capacity(need_bytes * 6);
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("bad data byte {b}")));
        }
        let val = b - 63;
        for i in (0..6).rev() {
            bits.push((val >> i) & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[pos] {
                edges.push((u, v));
            }
            pos += 1;
        }
    }
    Graph::new(n, &edges)
}
