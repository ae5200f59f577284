//! Text formats: plain edge lists and graph6.
//!
//! Edge list: first line `n`, then one `u v` pair per non-empty line.
//! graph6 (n ≤ 62): one byte `n + 63`, followed by the upper triangle of the
//! adjacency matrix in column order `x(0,1) x(0,2) x(1,2) x(0,3) …`, six bits
//! per byte, each byte offset by 63, zero-padded at the end.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX_N: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text.trim()),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("line 1: expected vertex count, got {header:?}")))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => {
                return Err(Error::Parse(format!(
                    "line {lineno}: expected two vertex ids, got {line:?}"
                )))
            }
        }
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn bit_positions(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "graph6 output supports at most {GRAPH6_MAX_N} vertices, got {n}"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let (mut acc, mut filled) = (0u8, 0);
    for (i, j) in bit_positions(n) {
        acc = (acc << 1) | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    if !(63..=63 + GRAPH6_MAX_N as u8).contains(&head) {
        return Err(Error::Parse(format!(
            "graph6 header byte {head} outside the supported range (n ≤ {GRAPH6_MAX_N})"
        )));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {} for n = {n}",
            body.len(),
            nbits.div_ceil(6)
        )));
    }
    let mut bits = Vec::with_capacity(body.len() * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("invalid graph6 byte {b}")));
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|k| (v >> k) & 1 == 1));
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(Error::Parse("graph6 padding bits must be zero".into()));
    }
    let edges: Vec<_> = bit_positions(n)
        .zip(&bits)
        .filter(|(_, &set)| set)
        .map(|(e, _)| e)
        .collect();
    Graph::new(n, &edges)
}
