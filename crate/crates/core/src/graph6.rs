//! graph6 encoding of simple undirected graphs.
//!
//! Layout: a size field (`n + 63` for `n <= 62`, otherwise `126` followed by three
//! 6-bit groups), then the upper triangle of the adjacency matrix in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte, big-endian, each byte
//! offset by 63 and the final byte zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

/// Largest order representable by the four-byte size field.
pub const MAX_ORDER: usize = 258_047;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing line break are
/// tolerated; offsets in errors count from the start of `line`.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    let mut start = 0;
    if line.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = bytes.len();
    while end > start && (bytes[end - 1] == b'\n' || bytes[end - 1] == b'\r') {
        end -= 1;
    }
    let body = &bytes[start..end];

    let sextet = |i: usize| -> Result<u32> {
        match body.get(i) {
            None => Err(parse_err(start + i, "unexpected end of input")),
            Some(&b) if (63..=126).contains(&b) => Ok(u32::from(b - 63)),
            Some(&b) => Err(parse_err(
                start + i,
                format!("byte {b:#04x} outside 63..=126"),
            )),
        }
    };

    let first = sextet(0)?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else {
        if body.get(1) == Some(&126) {
            return Err(parse_err(
                start + 1,
                "eight-byte size field is not supported",
            ));
        }
        let n = (sextet(1)? << 12 | sextet(2)? << 6 | sextet(3)?) as usize;
        if n <= 62 {
            return Err(parse_err(start, "non-canonical size field"));
        }
        (n, 4)
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = pos + k / 6;
            let bits = sextet(byte)?;
            if bits >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
            if k == bit_count {
                break 'outer;
            }
        }
    }
    if byte_count > 0 {
        let last = pos + byte_count - 1;
        let used = bit_count - 6 * (byte_count - 1);
        let pad_mask = (1u32 << (6 - used)) - 1;
        if sextet(last)? & pad_mask != 0 {
            return Err(parse_err(start + last, "nonzero padding bits"));
        }
    }
    pos += byte_count;
    if pos < body.len() {
        return Err(parse_err(
            start + pos,
            "trailing bytes after adjacency data",
        ));
    }
    Graph::new(n, edges)
}

/// Encodes `g` without a header or line break.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize {
            n,
            max: MAX_ORDER,
            hint: "",
        });
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|s| s as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
