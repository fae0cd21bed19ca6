//! The directed-graph6 text encoding.
//!
//! `&`, then the order `N(n)`, then the `n * n` row-major adjacency bits
//! packed six per byte, most significant first, each byte offset by 63.
//! Orders up to 62 use the one-byte form `n + 63`; larger orders use `~`
//! followed by three bytes carrying 18 bits.

use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, MAX_VERTICES};

const OFFSET: u8 = 63;

pub fn encode(g: &OrientedGraph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(6));
    out.push(b'&');
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in 0..n {
            acc = acc << 1 | u8::from(g.has_arc(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("digraph6 output is ASCII")
}

pub fn decode(s: &str) -> Result<OrientedGraph> {
    let bytes = s.as_bytes();
    if bytes.first() != Some(&b'&') {
        return Err(Error::Parse {
            offset: 0,
            message: "digraph6 must start with '&'".into(),
        });
    }
    let (n, header_len) = decode_order(bytes)?;
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count",
            value: n,
            limit: MAX_VERTICES,
        });
    }
    let data = &bytes[header_len..];
    let expected = (n * n).div_ceil(6);
    if data.len() != expected {
        return Err(Error::Parse {
            offset: header_len + data.len().min(expected),
            message: format!(
                "expected {expected} data bytes for order {n}, found {}",
                data.len()
            ),
        });
    }
    let mut matrix = vec![false; n * n];
    for (k, &b) in data.iter().enumerate() {
        let value = sextet(b, header_len + k)?;
        for bit in 0..6 {
            let idx = k * 6 + bit;
            if idx < n * n {
                matrix[idx] = value >> (5 - bit) & 1 == 1;
            }
        }
    }
    let mut g = OrientedGraph::empty(n)?;
    for i in 0..n {
        if matrix[i * n + i] {
            return Err(Error::Domain {
                u: i,
                v: i,
                reason: "loop",
            });
        }
        for j in 0..n {
            if matrix[i * n + j] {
                if matrix[j * n + i] {
                    return Err(Error::Domain {
                        u: i.min(j),
                        v: i.max(j),
                        reason: "2-cycle",
                    });
                }
                g.add_arc(i, j)?;
            }
        }
    }
    Ok(g)
}

fn sextet(b: u8, offset: usize) -> Result<u8> {
    if !(OFFSET..=OFFSET + 63).contains(&b) {
        return Err(Error::Parse {
            offset,
            message: format!("byte 0x{b:02x} outside the printable range 63..=126"),
        });
    }
    Ok(b - OFFSET)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.get(1).ok_or(Error::Parse {
        offset: 1,
        message: "missing order".into(),
    })?;
    if first != b'~' {
        return Ok((sextet(first, 1)? as usize, 2));
    }
    if bytes.get(2) == Some(&b'~') {
        return Err(Error::Parse {
            offset: 2,
            message: "orders beyond 258047 are not supported".into(),
        });
    }
    if bytes.len() < 5 {
        return Err(Error::Parse {
            offset: bytes.len(),
            message: "truncated long-form order".into(),
        });
    }
    let mut n = 0usize;
    for (k, &b) in bytes.iter().enumerate().take(5).skip(2) {
        n = n << 6 | sextet(b, k)? as usize;
    }
    Ok((n, 5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_directed_cycle, make_transitive_tournament, random_oriented_graph};

    #[test]
    fn known_strings() {
        let single = OrientedGraph::empty(1).unwrap();
        assert_eq!(encode(&single), "&@?");
        assert_eq!(decode("&@?").unwrap(), single);

        // bits 0,1,0,0 padded to 010000 = 16 -> chr(79) = 'O'
        let tt2 = make_transitive_tournament(2).unwrap();
        assert_eq!(encode(&tt2), "&AO");
        assert_eq!(decode("&AO").unwrap(), tt2);
    }

    #[test]
    fn rejects_two_cycles_and_loops() {
        // n = 2, bits 0,1,1,0 -> 011000 = 24
        let s = format!("&A{}", (63 + 24) as u8 as char);
        assert_eq!(
            decode(&s),
            Err(Error::Domain {
                u: 0,
                v: 1,
                reason: "2-cycle"
            })
        );
        // n = 1 with its loop bit set: 100000 = 32
        let s = format!("&@{}", (63 + 32) as u8 as char);
        assert!(matches!(
            decode(&s),
            Err(Error::Domain { reason: "loop", .. })
        ));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(decode(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode("A?"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode("&"), Err(Error::Parse { offset: 1, .. })));
        let c5 = encode(&make_directed_cycle(5).unwrap());
        let truncated = &c5[..c5.len() - 1];
        assert!(matches!(decode(truncated), Err(Error::Parse { .. })));
        assert!(matches!(decode("&A "), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn long_form_orders() {
        for n in [62, 63, 100, 128] {
            let g = random_oriented_graph(n, 0.3, n as u64).unwrap();
            let s = encode(&g);
            assert_eq!(s.as_bytes()[1] == b'~', n > 62);
            assert_eq!(decode(&s).unwrap(), g);
        }
    }
}
