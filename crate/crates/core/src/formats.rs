//! Text formats: graph6, a plain edge list and DOT export.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column,
//! `x(0,1), x(0,2), x(1,2), x(0,3), ..`, six bits per printable byte with an
//! offset of 63. Orders above 62 never occur here, so the size header is
//! always the single byte `n + 63`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty line".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("invalid size byte {first:#04x}")));
    }
    if first == 126 {
        return Err(Error::Graph6(format!("orders above {MAX_ORDER} are not supported")));
    }
    let n = usize::from(first - 63);
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Graph6(format!("order {n} outside 1..={MAX_ORDER}")));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("expected {expected} data bytes for n={n}, found {}", body.len())));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for (pos, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid data byte {b:#04x} at offset {}", pos + 1)));
        }
        let chunk = b - 63;
        for shift in (0..6).rev() {
            let set = chunk >> shift & 1 == 1;
            if k >= bits {
                if set {
                    return Err(Error::Graph6("nonzero padding bits".into()));
                }
                continue;
            }
            if set {
                let (i, j) = upper_index(k);
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows(rows)
}

/// Position `k` of the column-major upper triangle as `(row, column)`.
fn upper_index(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

/// Encodes without a trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(char::from(63 + n as u8));
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from(63 + (acc << (6 - filled))));
    }
    out
}

/// One graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Vec<Result<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| parse_graph6(l.trim())).collect()
}

/// `n m` on the first line, then `m` lines `u v` with 0-based endpoints.
/// Blank lines are skipped; reported line numbers are 1-based.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(Error::EdgeList { line: 1, msg: "missing `n m` header".into() })?;
    let [n, m] = parse_pair(line, header)?;
    if n == 0 || n > MAX_ORDER {
        return Err(Error::EdgeList { line, msg: format!("vertex count {n} outside 1..={MAX_ORDER}") });
    }
    let mut edges = Vec::with_capacity(m);
    let mut last_line = line;
    for (line, text) in lines {
        if edges.len() == m {
            return Err(Error::EdgeList { line, msg: format!("more than the declared {m} edges") });
        }
        let [u, v] = parse_pair(line, text)?;
        if u >= n || v >= n {
            return Err(Error::EdgeList { line, msg: format!("endpoint out of range 0..{n}") });
        }
        if u == v {
            return Err(Error::EdgeList { line, msg: format!("self-loop at {u}") });
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: last_line + 1,
            msg: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::EdgeList { line, msg: format!("expected 2 fields, found {}", fields.len()) });
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|e| Error::EdgeList { line, msg: format!("`{s}`: {e}") })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}

pub fn emit_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u, e.v);
    }
    out.push_str("}\n");
    out
}
