//! graph6 text codec.
//!
//! The format packs the upper triangle of the adjacency matrix in
//! column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...) into 6-bit
//! groups, each stored as `byte + 63`. The length header N(n) is a single
//! byte `n + 63` for n <= 62 and `~` followed by three 6-bit bytes for
//! larger n. Padding bits must be zero.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Encode a graph as a canonical graph6 string.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decode a graph6 string. Errors carry the byte offset of the problem.
pub fn decode_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::graph6(0, "empty input"));
    }
    let check = |i: usize| -> Result<u8> {
        let b = *bytes
            .get(i)
            .ok_or_else(|| Error::graph6(i, "truncated input"))?;
        if !(63..=126).contains(&b) {
            return Err(Error::graph6(i, format!("byte {b:#04x} outside graph6 alphabet")));
        }
        Ok(b - 63)
    };
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::graph6(1, "graphs beyond 258047 vertices unsupported"));
        }
        let n = ((check(1)? as usize) << 12) | ((check(2)? as usize) << 6) | check(3)? as usize;
        (n, 4)
    } else {
        (check(0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit(format!(
            "graph6 header declares {n} vertices; this crate holds at most {MAX_VERTICES}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = (nbits + 5) / 6;
    if bytes.len() != pos + nbytes {
        return Err(Error::graph6(
            bytes.len().min(pos + nbytes),
            format!(
                "expected {} body bytes for n={n}, got {}",
                nbytes,
                bytes.len() - pos.min(bytes.len())
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut acc = 0u8;
    let mut have = 0usize;
    let mut byte_at = pos;
    for v in 1..n {
        for u in 0..v {
            if have == 0 {
                acc = check(pos)?;
                byte_at = pos;
                pos += 1;
                have = 6;
            }
            if acc & 0x20 != 0 {
                edges.push((u, v));
            }
            acc = (acc << 1) & 0x3f;
            have -= 1;
        }
    }
    if acc != 0 {
        return Err(Error::graph6(byte_at, "nonzero padding bits"));
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, Graph};

    #[test]
    fn k1_is_at_sign() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(encode_graph6(&k1), "@");
        assert_eq!(decode_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn five_vertex_round_trip() {
        let g = decode_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(encode_graph6(&g), "D?{");
    }

    #[test]
    fn known_encodings() {
        // C_5 with traversal-order labels: bits 1,0,1,0,0,1|1,0,0,1 -> "Dhc".
        let c5 = generate(Family::Cycle, &[5], None).unwrap();
        assert_eq!(encode_graph6(&c5), "Dhc");
        let k4 = generate(Family::Complete, &[4], None).unwrap();
        assert_eq!(encode_graph6(&k4), "C~");
    }

    #[test]
    fn rejects_garbage() {
        assert!(decode_graph6("garbage\x01").is_err());
        assert!(decode_graph6("").is_err());
        // Truncated body.
        assert!(decode_graph6("D?").is_err());
        // Trailing junk.
        assert!(decode_graph6("D?{?").is_err());
    }

    #[test]
    fn rejects_nonzero_padding() {
        // K_2 is "A_": header 'A' (n=2), one edge bit then 5 zero pad bits.
        assert_eq!(encode_graph6(&generate(Family::Path, &[2], None).unwrap()), "A_");
        // Same header with padding bits set must fail.
        assert!(decode_graph6("A`").is_err());
    }
}
