//! graph6 encoding.
//!
//! Size field: one byte `n + 63` for `n <= 62`, otherwise `126` followed by
//! three bytes carrying `n` in 18 bits. Data: the upper triangle in column
//! order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte plus 63,
//! zero-padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn sixbits(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(malformed(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )))
    }
}

/// Parses one graph6 line. Surrounding whitespace and an optional header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, rest) = bytes
        .split_first()
        .ok_or_else(|| malformed("empty input"))?;

    let (n, data) = if first == 126 {
        if rest.first() == Some(&126) {
            return Err(malformed("graphs beyond 258047 vertices are not supported"));
        }
        if rest.len() < 3 {
            return Err(malformed("truncated size field"));
        }
        let mut n = 0usize;
        for &b in &rest[..3] {
            n = n << 6 | sixbits(b)? as usize;
        }
        (n, &rest[3..])
    } else {
        (sixbits(first)? as usize, rest)
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity(n));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            data.len()
        )));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    let read = |data: &[u8], bit: usize| -> Result<bool> {
        let byte = sixbits(data[bit / 6])?;
        Ok(byte >> (5 - bit % 6) & 1 == 1)
    };
    for v in 1..n {
        for u in 0..v {
            if read(data, bit)? {
                g.add_edge(u, v)?;
            }
            bit += 1;
        }
    }
    while bit < expected * 6 {
        if read(data, bit)? {
            return Err(malformed("nonzero padding bits"));
        }
        bit += 1;
    }
    Ok(g)
}

/// Encodes without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

impl Graph {
    pub fn from_graph6(text: &str) -> Result<Graph> {
        parse_graph6(text)
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(to_graph6(&g), "@");
    }

    #[test]
    fn small_fixed_encodings() {
        assert_eq!(to_graph6(&Graph::empty(2).unwrap()), "A?");
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn c4_encoding() {
        // bits x01 x02 x12 x03 x13 x23 = 1 0 1 1 0 1
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(to_graph6(&c4), "Cl");
        assert_eq!(parse_graph6("Cl").unwrap(), c4);
    }

    #[test]
    fn known_string_round_trips() {
        for s in ["D?{", "DQc", "Cl", "A_", "@", "?"] {
            let g = parse_graph6(s).unwrap();
            assert_eq!(to_graph6(&g), s);
        }
        // petgraph's documented example: a-c, a-e, b-d, d-e
        let g = parse_graph6("DQc").unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 2), (1, 3), (0, 4), (3, 4)]);
    }

    #[test]
    fn header_and_whitespace() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn long_size_field() {
        let g = Graph::empty(100).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap().n(), 100);
    }

    #[test]
    fn capacity_error() {
        // 200 = 000000 000011 001000
        let mut s = vec![126u8, 63, 63 + 3, 63 + 8];
        s.extend(std::iter::repeat_n(63, 200 * 199 / 2 / 6 + 1));
        let s = String::from_utf8(s).unwrap();
        assert_eq!(parse_graph6(&s), Err(Error::Capacity(200)));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("D?{?"), Err(Error::Graph6(_))));
        // 'D' + byte with padding bits set: n = 5 needs 10 bits, last two must be zero
        assert!(matches!(parse_graph6("D?~"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A\u{7f}"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6(_))));
    }
}
