//! graph6 encoding, short form only (at most 62 vertices).
//!
//! The size byte is `n + 63`; the upper triangle of the adjacency matrix is
//! then emitted column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six
//! bits per printable character, zero-padded at the end.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order expressible in the short form.
pub const MAX_SHORT_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("long-form size header at offset 0 is not supported")]
    LongForm,
    #[error("line ends at offset {offset}; {expected} bytes of edge data expected")]
    Truncated { offset: usize, expected: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("non-zero padding bits in the final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("graph on {0} vertices needs the long form, which is unsupported")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A single trailing `\n` (or `\r\n`) is accepted.
pub fn from_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&head) {
        return Err(Graph6Error::InvalidByte { offset: 0, byte: head });
    }
    if head == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (head - 63) as usize;
    let expected = data_len(n);
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        if pos < expected {
            return Err(Graph6Error::InvalidByte { offset: pos + 1, byte: body[pos] });
        }
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated { offset: bytes.len(), expected });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { offset: expected + 1 });
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[k / 6] - 63;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding { offset: k / 6 + 1 });
        }
    }
    Ok(g)
}

/// Encodes `g` without header or trailing newline.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_SHORT_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Hex dump of the adjacency rows; used where graph6 cannot express a graph.
pub fn fingerprint(g: &Graph) -> String {
    match to_graph6(g) {
        Ok(s) => s,
        Err(_) => {
            let rows: Vec<String> = g.rows().iter().map(|r| format!("{r:x}")).collect();
            format!("n{}:{}", g.n(), rows.join(","))
        }
    }
}
