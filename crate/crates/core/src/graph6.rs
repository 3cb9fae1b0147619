//! graph6 encoding, as used by nauty's `geng` and `showg`.
//!
//! A graph6 string is `N(n) R(x)`: the order `n` followed by the upper
//! triangle of the adjacency matrix read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte, most
//! significant bit first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG: u8 = 126;
const MAX_ORDER: u64 = 68_719_476_735;

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Decodes one graph6 line. A trailing newline and an optional `>>graph6<<`
/// header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=LONG).contains(&b)) {
        return Err(malformed(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = decode_order(bytes)?;
    let n = usize::try_from(n).map_err(|_| malformed("order does not fit in memory"))?;

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(malformed(format!(
            "truncated: {} edge bytes, need {need}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(malformed(format!(
            "{} trailing bytes after edge data",
            body.len() - need
        )));
    }

    let mut adj = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[need - 1] - BIAS;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(Graph::from_raw_adjacency(adj))
}

fn decode_order(bytes: &[u8]) -> Result<(u64, &[u8])> {
    let six = |chunk: &[u8]| chunk.iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - BIAS));
    match bytes {
        [] => Err(malformed("empty string")),
        [LONG, LONG, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated order field"));
            }
            Ok((six(&rest[..6]), &rest[6..]))
        }
        [LONG, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated order field"));
            }
            Ok((six(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok((u64::from(b - BIAS), rest)),
    }
}

/// Encodes `g` as a graph6 string without a trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n as u64 <= MAX_ORDER, "graph6 cannot encode n = {n}");
    let mut out: Vec<u8> = Vec::with_capacity(8 + (n * n) / 12);
    let push6 = |out: &mut Vec<u8>, value: u64, groups: u32| {
        for shift in (0..groups).rev() {
            out.push(((value >> (6 * shift)) & 0x3f) as u8 + BIAS);
        }
    };
    match n as u64 {
        v @ 0..=62 => out.push(v as u8 + BIAS),
        v @ 63..=258_047 => {
            out.push(LONG);
            push6(&mut out, v, 3);
        }
        v => {
            out.push(LONG);
            out.push(LONG);
            push6(&mut out, v, 6);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        // neighbors of j below j, ascending, match rows i = 0..j
        let below = g.neighbors(j);
        let mut it = below.iter().take_while(|&&i| i < j).peekable();
        for i in 0..j {
            let bit = if it.peek() == Some(&&i) {
                it.next();
                1
            } else {
                0
            };
            acc = acc << 1 | bit;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
