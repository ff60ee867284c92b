//! The undirected graph6 format.
//!
//! A record is N(n) followed by R(x). N(n) is `n + 63` for n <= 62, `~`
//! and three 6-bit big-endian groups for n <= 258047, or `~~` and six
//! groups beyond that. R(x) packs the upper triangle column by column,
//! `x(0,1) x(0,2) x(1,2) x(0,3) ...`, six bits per byte, zero padded, each
//! byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const GRAPH6_HEADER: &str = ">>graph6<<";
pub const GRAPH6_MAX_N: usize = 68_719_476_735;

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: GRAPH6_MAX_N,
        });
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        let groups = if n <= 258_047 {
            out.push(b'~');
            3
        } else {
            out.extend_from_slice(b"~~");
            6
        };
        for i in (0..groups).rev() {
            out.push(((n >> (6 * i)) & 0x3f) as u8 + 63);
        }
    }
    let mut byte = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            byte = byte << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(byte + 63);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((byte << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    match bytes.first() {
        None => return Err(malformed("empty record")),
        Some(b':') => return Err(malformed("sparse6 is not supported")),
        Some(b'&') => return Err(malformed("digraph6 is not supported")),
        _ => {}
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(format!(
            "byte {:#04x} at offset {pos} is outside 63..=126",
            bytes[pos]
        )));
    }
    let (n, body) = decode_order(bytes)?;
    let bits = n as u128 * (n as u128).saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() as u128 != expected {
        return Err(malformed(format!(
            "{n} vertices need {expected} adjacency bytes, found {}",
            body.len()
        )));
    }
    let mut adj = vec![VertexSet::new(n); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let value = |groups: &[u8]| {
        groups
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
    };
    if bytes[0] != b'~' {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.get(1) == Some(&b'~') {
        let groups = bytes
            .get(2..8)
            .ok_or_else(|| malformed("truncated 8-byte vertex count"))?;
        Ok((value(groups), &bytes[8..]))
    } else {
        let groups = bytes
            .get(1..4)
            .ok_or_else(|| malformed("truncated 4-byte vertex count"))?;
        Ok((value(groups), &bytes[4..]))
    }
}
