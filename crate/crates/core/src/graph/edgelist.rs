//! Plain edge-list text: a header line `n m`, then `m` lines `u v` (0-indexed).

use super::Graph;
use crate::error::{Error, Result};

pub fn edge_list_encode(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn edge_list_decode(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut lines = Vec::new();
    for line in text.split_inclusive('\n') {
        let body = line.trim();
        if !body.is_empty() && !body.starts_with('#') {
            lines.push((offset, body));
        }
        offset += line.len();
    }
    let mut it = lines.into_iter();
    let (at, header) = it.next().ok_or_else(|| Error::parse(0, "missing `n m` header"))?;
    let (n, m) = parse_pair(header, at)?;
    let mut g = Graph::new(n)?;
    let mut seen = 0;
    for (at, line) in it {
        let (u, v) = parse_pair(line, at)?;
        if u >= n || v >= n || u == v {
            return Err(Error::parse(at, format!("invalid edge ({u}, {v}) for order {n}")));
        }
        if !g.add_edge(u, v)? {
            return Err(Error::parse(at, format!("duplicate edge ({u}, {v})")));
        }
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(text.len(), format!("header promises {m} edges, found {seen}")));
    }
    Ok(g)
}

fn parse_pair(line: &str, at: usize) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let mut next = || -> Result<usize> {
        parts
            .next()
            .ok_or_else(|| Error::parse(at, format!("expected two integers in `{line}`")))?
            .parse::<usize>()
            .map_err(|e| Error::parse(at, format!("`{line}`: {e}")))
    };
    let a = next()?;
    let b = next()?;
    if parts.next().is_some() {
        return Err(Error::parse(at, format!("trailing tokens in `{line}`")));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::cycle;

    #[test]
    fn round_trip() {
        let g = cycle(5);
        let text = edge_list_encode(&g);
        assert!(text.starts_with("5 5\n0 1\n"));
        assert_eq!(edge_list_decode(&text).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert!(edge_list_decode("").is_err());
        assert!(edge_list_decode("3 1\n0 3\n").is_err());
        assert!(edge_list_decode("3 2\n0 1\n").is_err());
        assert!(matches!(
            edge_list_decode("3 2\n0 1\n1 x\n"),
            Err(Error::Parse { offset: 8, .. })
        ));
        assert!(edge_list_decode("3 2\n0 1\n1 0\n").is_err());
    }
}
