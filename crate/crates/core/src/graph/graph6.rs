//! graph6 encoding: a size field followed by the upper triangle of the
//! adjacency matrix, column by column, six bits per printable byte.

use thiserror::Error;

use super::Graph;

/// Largest vertex count the codec handles (the four-byte size form).
pub const GRAPH6_MAX_N: usize = 258_047;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed size header")]
    MalformedHeader,
    #[error("byte {byte} at position {position} is outside 63..=126")]
    ByteOutOfRange { position: usize, byte: u8 },
    #[error("expected {expected} data bytes, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("padding bits in the last data byte are not zero")]
    TrailingBits,
    #[error("{0} vertices exceed the supported graph6 size of {GRAPH6_MAX_N}")]
    TooLarge(usize),
}

fn sextet(position: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (BIAS..=126).contains(&byte) {
        Ok(byte - BIAS)
    } else {
        Err(Graph6Error::ByteOutOfRange { position, byte })
    }
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    let (n, header_len) = if first != 126 {
        (sextet(0, first)? as usize, 1)
    } else if bytes.get(1) == Some(&126) {
        // Eight-byte form, n >= 258048: syntactically valid but unsupported.
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0usize;
        for (i, &b) in bytes[2..8].iter().enumerate() {
            n = (n << 6) | sextet(i + 2, b)? as usize;
        }
        if n <= GRAPH6_MAX_N {
            return Err(Graph6Error::MalformedHeader);
        }
        return Err(Graph6Error::TooLarge(n));
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | sextet(i + 1, b)? as usize;
        }
        if n < 63 {
            return Err(Graph6Error::MalformedHeader);
        }
        (n, 4)
    };

    let data = &bytes[header_len..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            expected,
            found: data.len(),
        });
    }
    let sextets = data
        .iter()
        .enumerate()
        .map(|(i, &b)| sextet(header_len + i, b))
        .collect::<Result<Vec<_>, _>>()?;

    let bit = |k: usize| (sextets[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    if (bit_count..expected * 6).any(bit) {
        return Err(Graph6Error::TrailingBits);
    }
    Ok(g)
}

/// Encodes `g` as a graph6 string (without newline).
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= GRAPH6_MAX_N {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("bytes 63..=126 are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_k14() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(g, Graph::star(4));
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(write_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn dqc_fixture() {
        let g = parse_graph6("DQc\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn k3_encodes_as_bw() {
        assert_eq!(write_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn zero_vertices() {
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn header_prefix_is_accepted() {
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6(" w"),
            Err(Graph6Error::ByteOutOfRange {
                position: 0,
                byte: b' '
            })
        );
        assert_eq!(
            parse_graph6("B\x7f"),
            Err(Graph6Error::ByteOutOfRange {
                position: 1,
                byte: 0x7f
            })
        );
        assert_eq!(
            parse_graph6("Bww"),
            Err(Graph6Error::LengthMismatch {
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::LengthMismatch {
                expected: 2,
                found: 1
            })
        );
        // K3 uses 3 of 6 bits; "Bx" sets a padding bit.
        assert_eq!(parse_graph6("Bx"), Err(Graph6Error::TrailingBits));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::MalformedHeader));
        // four-byte form must not encode n < 63
        assert_eq!(parse_graph6("~??A"), Err(Graph6Error::MalformedHeader));
        assert_eq!(parse_graph6("~~??????"), Err(Graph6Error::MalformedHeader));
        assert_eq!(
            parse_graph6("~~??@???"),
            Err(Graph6Error::TooLarge(1 << 18))
        );
    }

    #[test]
    fn medium_header_round_trip() {
        let g = Graph::cycle(100);
        let s = write_graph6(&g).unwrap();
        assert!(s.starts_with("~?@c"));
        assert_eq!(s.len(), 4 + (100 * 99 / 2usize).div_ceil(6));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
