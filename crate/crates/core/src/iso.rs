//! Isomorphism codes for scan attainers: level-sequence codes for trees and
//! a brute-force canonical labelling for the small general graphs.

use std::fmt;

use crate::enumerate::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::format::write_graph6;
use crate::graph::Graph;

/// Largest graph accepted by [`graph_code`]; the search is factorial.
pub const GRAPH_CODE_MAX_N: usize = 10;

/// Canonical adjacency bits of a small graph: the maximum upper-triangle bit
/// string over all labellings that respect a degree-based vertex partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphCode {
    pub n: usize,
    pub bits: u64,
}

impl GraphCode {
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut b = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> b & 1 == 1 {
                    edges.push((i, j));
                }
                b += 1;
            }
        }
        Graph::new(self.n, &edges).expect("code describes a simple graph")
    }
}

fn bits_under(g: &Graph, order: &[usize]) -> u64 {
    // order[new] = old
    let n = g.n();
    let mut pos = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let mut bits = 0u64;
    for (u, v) in g.edges() {
        let (i, j) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        bits |= 1 << (j * (j - 1) / 2 + i);
    }
    bits
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

pub fn graph_code(g: &Graph) -> Result<GraphCode> {
    let n = g.n();
    if n > GRAPH_CODE_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "graph canonical codes support n ≤ {GRAPH_CODE_MAX_N}"
        )));
    }
    // vertex invariant: degree, then the sorted neighbour degrees
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.sort_by_key(|&v| key(v));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in vertices {
        match blocks.last_mut() {
            Some(b) if key(b[0]) == key(v) => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut orders: Vec<Vec<usize>> = vec![Vec::new()];
    for block in &blocks {
        let perms = permutations(block);
        orders = orders
            .iter()
            .flat_map(|o| {
                perms.iter().map(move |p| {
                    let mut o = o.clone();
                    o.extend_from_slice(p);
                    o
                })
            })
            .collect();
    }
    let bits = orders.iter().map(|o| bits_under(g, o)).max().unwrap_or(0);
    Ok(GraphCode { n, bits })
}

/// Isomorphism class identifier used in reports.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IsoCode {
    Tree(CanonicalCode),
    Graph(GraphCode),
}

impl IsoCode {
    /// Tree code for trees, canonical labelling otherwise.
    pub fn of(g: &Graph) -> Result<Self> {
        if g.is_tree() {
            canonical_code(g).map(IsoCode::Tree)
        } else {
            graph_code(g).map(IsoCode::Graph)
        }
    }

    pub fn to_graph(&self) -> Graph {
        match self {
            IsoCode::Tree(c) => c.to_graph(),
            IsoCode::Graph(c) => c.to_graph(),
        }
    }
}

impl fmt::Display for IsoCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoCode::Tree(c) => write!(f, "tree:{c}"),
            IsoCode::Graph(c) => {
                let g6 = write_graph6(&c.to_graph()).map_err(|_| fmt::Error)?;
                write!(f, "graph6:{g6}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::connected_labeled_graphs;
    use std::collections::HashSet;

    #[test]
    fn graph_codes_count_unlabelled_classes() {
        // connected unlabelled graphs on 4 and 5 vertices
        let classes = |n| {
            connected_labeled_graphs(n)
                .unwrap()
                .map(|g| graph_code(&g).unwrap())
                .collect::<HashSet<_>>()
                .len()
        };
        assert_eq!(classes(4), 6);
        assert_eq!(classes(5), 21);
    }

    #[test]
    fn code_is_relabelling_invariant() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 1, 3]).unwrap();
        assert_eq!(graph_code(&g).unwrap(), graph_code(&h).unwrap());
        assert_eq!(
            graph_code(&graph_code(&g).unwrap().to_graph()).unwrap(),
            graph_code(&g).unwrap()
        );
    }
}
