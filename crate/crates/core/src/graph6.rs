//! graph6 ASCII encoding (the standard format: 6-bit groups, bias 63,
//! upper triangle column-major).

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("invalid byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated input: expected {expected} payload bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing bytes starting at offset {offset}")]
    TrailingBytes { offset: usize },
    #[error("order {0} exceeds the supported maximum 258047")]
    OrderOverflow(u64),
}

const HEADER: &[u8] = b">>graph6<<";

/// Parses a single graph6 line (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0usize;
    if bytes.starts_with(HEADER) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let sextet = |offset: usize| -> Result<u64, Graph6Error> {
        let b = bytes[offset];
        if !(63..=126).contains(&b) {
            Err(Graph6Error::InvalidByte { offset: base + offset, byte: b })
        } else {
            Ok((b - 63) as u64)
        }
    };

    // Order field.
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // Eight-byte order field means n > 258047; refuse.
            let mut n: u64 = 0;
            if bytes.len() < 8 {
                return Err(Graph6Error::Truncated { expected: 8, got: bytes.len() });
            }
            for i in 2..8 {
                n = (n << 6) | sextet(i)?;
            }
            return Err(Graph6Error::OrderOverflow(n));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 4, got: bytes.len() });
        }
        let n = (sextet(1)? << 12) | (sextet(2)? << 6) | sextet(3)?;
        (n as usize, 4)
    } else {
        (sextet(0)? as usize, 1)
    };

    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(Graph6Error::Truncated { expected: nbytes, got: bytes.len() - pos });
    }
    if bytes.len() - pos > nbytes {
        return Err(Graph6Error::TrailingBytes { offset: base + pos + nbytes });
    }

    let mut g = Graph::new(n);
    let mut bit = 0usize;
    let mut cur = 0u64;
    let mut have = 0usize;
    for j in 1..n {
        for i in 0..j {
            if have == 0 {
                cur = sextet(pos)?;
                pos += 1;
                have = 6;
            }
            if (cur >> (have - 1)) & 1 == 1 {
                g.add_edge(i, j);
            }
            have -= 1;
            bit += 1;
        }
    }
    debug_assert_eq!(bit, nbits);
    Ok(g)
}

/// Encodes a graph as a graph6 line (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else {
        panic!("graph6 encoding beyond order 258047 is not supported");
    }
    let mut cur = 0u8;
    let mut have = 0u8;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | u8::from(g.has_edge(i, j));
            have += 1;
            if have == 6 {
                out.push(cur + 63);
                cur = 0;
                have = 0;
            }
        }
    }
    if have > 0 {
        out.push((cur << (6 - have)) + 63);
    }
    String::from_utf8(out).unwrap()
}
