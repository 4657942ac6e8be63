//! graph6 text codec, short form only (orders 0..=62).
//!
//! Layout: one byte n+63, then the upper-triangle bits x(0,1), x(0,2),
//! x(1,2), x(0,3), ... packed six per byte, most significant bit first,
//! each byte offset by 63. Trailing pad bits are ignored on parse and
//! emitted as zero.

use crate::graph::Graph;
use crate::Error;

pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn parse_graph6(line: &str) -> Result<Graph, Error> {
    let bytes = line.as_bytes();
    // tolerate one trailing newline so lines() and raw reads both work
    let bytes = match bytes {
        [rest @ .., b'\n'] => match rest {
            [r @ .., b'\r'] => r,
            _ => rest,
        },
        _ => bytes,
    };
    let fail = |offset: usize, reason: String| Error::Graph6 { offset, reason };
    if bytes.is_empty() {
        return Err(fail(0, "empty input".to_string()));
    }
    if bytes[0] == b'~' {
        return Err(fail(
            0,
            "long-form order field (order > 62) not supported".to_string(),
        ));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(fail(i, format!("byte {b} outside printable range 63..126")));
        }
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != expected {
        return Err(fail(
            bytes.len().min(1 + expected),
            format!("expected {expected} adjacency bytes, got {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if (body[bit / 6] - 63) >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String, Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Graph6Order(n));
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                (acc, used) = (0, 0);
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).expect("bytes are printable by construction"))
}
