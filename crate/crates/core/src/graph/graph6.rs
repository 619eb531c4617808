//! graph6 text encoding: size header, then the upper triangle of the
//! adjacency matrix column by column, six bits per printable byte.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + i, format!("byte {b:#04x} outside graph6 range 63..=126")));
        }
    }
    let (n, header) = match bytes.first() {
        None => return Err(Error::parse(base, "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(Error::cap("graph order", MAX_ORDER, 258048));
            }
            if bytes.len() < 4 {
                return Err(Error::parse(base + bytes.len(), "truncated size header"));
            }
            let n = ((bytes[1] - 63) as usize) << 12
                | ((bytes[2] - 63) as usize) << 6
                | (bytes[3] - 63) as usize;
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(Error::cap("graph order", MAX_ORDER, n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let body = &bytes[header..];
    if body.len() != need {
        let at = base + header + body.len().min(need);
        return Err(Error::parse(
            at,
            format!("expected {need} data bytes for order {n}, found {}", body.len()),
        ));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.toggle_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[need - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Error::parse(base + header + need - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn hand_encoded_small_graphs() {
        // K2: one pair, bit 1 -> 100000 = 32, +63 = '_'
        assert_eq!(graph6_encode(&complete(2)), "A_");
        // K3: 111000 = 56, +63 = 'w'
        assert_eq!(graph6_encode(&complete(3)), "Bw");
        assert_eq!(graph6_encode(&empty(0)), "?");
        assert_eq!(graph6_encode(&empty(1)), "@");
    }

    #[test]
    fn reference_string_from_format_docs() {
        // The 5-vertex example from the format description: edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_encode(&g), "DQc");
        assert_eq!(graph6_decode("DQc").unwrap(), g);
    }

    #[test]
    fn large_header() {
        let g = cycle(64);
        let s = graph6_encode(&g);
        assert!(s.starts_with("~?@"));
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(matches!(graph6_decode(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(graph6_decode("B"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(graph6_decode("Bw w"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(graph6_decode("Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(graph6_decode(">>graph6<<Bw\n").is_ok());
        assert!(matches!(graph6_decode("~?A?"), Err(Error::CapExceeded { .. })));
    }
}
