//! Immutable simple undirected graphs with 0-based vertex ids.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Simple undirected graph. Adjacency lists are sorted and symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting out-of-range ids, loops and
    /// repeated edges (in either orientation).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    /// Builds a tree from a parent array (`parent[root] == None`).
    pub(crate) fn from_parents(parent: &[Option<usize>]) -> Self {
        let edges: Vec<_> = parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)))
            .collect();
        Graph::new(parent.len(), &edges).expect("parent array describes a tree")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub(crate) fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n() })
        }
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<usize> {
        self.bfs_with_parents(src).0
    }

    pub(crate) fn bfs_with_parents(&self, src: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        (dist, parent)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|&d| d != usize::MAX)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n() && self.is_connected()
    }

    pub(crate) fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// True for a path graph (connected, acyclic, max degree ≤ 2).
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.adj.iter().all(|l| l.len() <= 2)
    }

    /// Relabels vertices: old vertex `u` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter(
                "relabelling must be a permutation of 0..n".into(),
            ));
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(n, &edges)
    }

    /// Returns a copy with `remove` deleted and then `add` inserted.
    pub(crate) fn rewire(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Self {
        let mut edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| !remove.iter().any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v)))
            .collect();
        debug_assert_eq!(edges.len() + remove.len(), self.edge_count());
        edges.extend_from_slice(add);
        Graph::new(self.n(), &edges).expect("rewiring keeps the graph simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_and_p4() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.degrees(), vec![1, 1]);
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_path());
        assert_eq!(p4.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(4, &[(0, 9)]),
            Err(Error::VertexOutOfRange { vertex: 9, n: 4 })
        );
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(0, &[]), Err(Error::Empty));
    }

    #[test]
    fn connectivity() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert!(!g.is_tree());
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_connected() && !c4.is_tree());
    }

    #[test]
    fn relabel_requires_permutation() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let r = p3.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(r.degrees(), vec![2, 1, 1]);
        assert!(p3.relabel(&[0, 0, 1]).is_err());
    }
}
