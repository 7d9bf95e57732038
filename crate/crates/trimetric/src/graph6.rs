//! graph6 text format (short form, n <= 62).
//!
//! One byte `n + 63` for the order, then the upper triangle of the
//! adjacency matrix in column-major order — (0,1), (0,2), (1,2), (0,3),
//! ... — packed six bits per byte, most significant first, zero-padded to
//! a byte boundary, each byte offset by 63 into the printable range.

use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};

const OFFSET: u8 = 63;
const MAX_ORDER: usize = 62;

/// Encodes a graph of order at most 62.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedOrder(format!(
            "short-form graph6 covers n <= {MAX_ORDER}, got n = {n}"
        )));
    }
    let mut out = vec![OFFSET + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes one short-form graph6 string. Leading/trailing whitespace is
/// tolerated; anything else must be exact.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let bytes = trimmed.as_bytes();
    let fail = |offset: usize, reason: String| Error::Graph6 {
        offset: lead + offset,
        reason,
    };
    if bytes.is_empty() {
        return Err(fail(0, "empty input".into()));
    }
    if bytes[0] == b'~' {
        return Err(Error::UnsupportedOrder(
            "long-form graph6 (n >= 63) is not supported".into(),
        ));
    }
    if !(OFFSET..=125).contains(&bytes[0]) {
        return Err(fail(0, format!("invalid order byte {:#04x}", bytes[0])));
    }
    let n = (bytes[0] - OFFSET) as usize;
    if n == 0 {
        return Err(fail(0, "order 0 graphs are not representable here".into()));
    }
    let body_len = pair_count(n).div_ceil(6);
    if bytes.len() < 1 + body_len {
        return Err(fail(
            bytes.len(),
            format!("truncated: order {n} needs {body_len} body bytes"),
        ));
    }
    if bytes.len() > 1 + body_len {
        return Err(fail(
            1 + body_len,
            format!("trailing bytes after the {body_len}-byte body for order {n}"),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut cursor = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + cursor / 6];
            if !(OFFSET..=126).contains(&byte) {
                return Err(fail(
                    1 + cursor / 6,
                    format!("invalid body byte {byte:#04x}"),
                ));
            }
            let bit = (byte - OFFSET) >> (5 - cursor % 6) & 1;
            if bit == 1 {
                g.add_edge(i, j)?;
            }
            cursor += 1;
        }
    }
    Ok(g)
}

/// Parses a whole graph6 file: one graph per line, blank lines skipped,
/// an optional `>>graph6<<` header tolerated. Errors carry the 1-based
/// line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| {
            Error::InvalidInput(format!("line {}: {e}", idx + 1))
        })?;
        graphs.push(g);
    }
    if graphs.is_empty() {
        return Err(Error::InvalidInput("no graphs in graph6 input".into()));
    }
    Ok(graphs)
}
