//! Extended DIMACS input format.
//!
//! Header `p kecss <n> <m> <k>`, then m edge lines `e <u> <v> <cost>` with
//! 0-based vertex ids and positive decimal costs. Lines starting with `c`
//! are comments; blank lines are ignored. Solution files carry one edge id
//! per line with the same comment rule.

use crate::graph::{EdgeId, Graph};
use crate::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parse a problem file. `k_override` replaces the header's k when given.
pub fn parse_graph(input: &str, k_override: Option<u32>) -> Result<Graph> {
    let mut header: Option<(usize, usize, u32)> = None;
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    let mut header_line = 0usize;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate problem line"));
                }
                if parts.next() != Some("kecss") {
                    return Err(parse_err(line_no, "problem line must read 'p kecss <n> <m> <k>'"));
                }
                let n: usize = next_field(&mut parts, line_no, "n")?;
                let m: usize = next_field(&mut parts, line_no, "m")?;
                let k: u32 = next_field(&mut parts, line_no, "k")?;
                if parts.next().is_some() {
                    return Err(parse_err(line_no, "trailing tokens after problem line"));
                }
                header = Some((n, m, k));
                header_line = line_no;
            }
            Some("e") => {
                if header.is_none() {
                    return Err(parse_err(line_no, "edge line before problem line"));
                }
                let u: usize = next_field(&mut parts, line_no, "tail")?;
                let v: usize = next_field(&mut parts, line_no, "head")?;
                let cost: f64 = next_field(&mut parts, line_no, "cost")?;
                if parts.next().is_some() {
                    return Err(parse_err(line_no, "trailing tokens after edge line"));
                }
                edges.push((u, v, cost));
            }
            Some(tok) => {
                return Err(parse_err(line_no, format!("unknown line type '{tok}'")));
            }
            None => unreachable!("empty lines are skipped"),
        }
    }
    let Some((n, m, k)) = header else {
        return Err(parse_err(input.lines().count().max(1), "missing problem line"));
    };
    if edges.len() != m {
        return Err(parse_err(
            header_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    let k = k_override.unwrap_or(k);
    Graph::new(n, k, &edges).map_err(|e| match e {
        Error::InvalidGraph(msg) => parse_err(header_line, msg),
        other => other,
    })
}

/// Parse a solution file: edge ids, one per line.
pub fn parse_solution(input: &str, m: usize) -> Result<Vec<EdgeId>> {
    let mut ids = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let id: EdgeId = line
            .parse()
            .map_err(|_| parse_err(line_no, format!("expected an edge id, got '{line}'")))?;
        if id >= m {
            return Err(parse_err(line_no, format!("edge id {id} out of range (m = {m})")));
        }
        ids.push(id);
    }
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

fn next_field<T: std::str::FromStr>(
    parts: &mut std::str::SplitWhitespace<'_>,
    line_no: usize,
    name: &str,
) -> Result<T> {
    let tok = parts
        .next()
        .ok_or_else(|| parse_err(line_no, format!("missing field '{name}'")))?;
    tok.parse()
        .map_err(|_| parse_err(line_no, format!("cannot parse field '{name}' from '{tok}'")))
}

#[cfg(test)]
mod tests {
    use super::*;

    const C4: &str = "c a four-cycle\np kecss 4 4 2\ne 0 1 1.0\ne 1 2 1.0\ne 2 3 1.0\ne 3 0 1.0\n";

    #[test]
    fn parses_c4() {
        let g = parse_graph(C4, None).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert_eq!(g.k(), 2);
        assert_eq!(g.edge(2).cost, 1.0);
    }

    #[test]
    fn k_override_wins() {
        let g = parse_graph(C4, Some(1)).unwrap();
        assert_eq!(g.k(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "p kecss 3 1 1\ne 0 5 1.0\n";
        match parse_graph(bad, None) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1), // reported at header
            other => panic!("{other:?}"),
        }
        let bad = "p kecss 3 2 1\ne 0 1 1.0\ne 1 2 oops\n";
        match parse_graph(bad, None) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 3);
                assert!(msg.contains("cost"));
            }
            other => panic!("{other:?}"),
        }
        let bad = "e 0 1 1.0\n";
        assert!(matches!(parse_graph(bad, None), Err(Error::Parse { line: 1, .. })));
        let bad = "p kecss 2 2 1\ne 0 1 1.0\n";
        assert!(parse_graph(bad, None).is_err());
    }

    #[test]
    fn solution_roundtrip() {
        let ids = parse_solution("c chosen\n2\n0\n1\n", 4).unwrap();
        assert_eq!(ids, vec![0, 1, 2]);
        assert!(parse_solution("9\n", 4).is_err());
        assert!(parse_solution("x\n", 4).is_err());
    }
}
