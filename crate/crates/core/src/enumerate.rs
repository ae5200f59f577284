//! Exhaustive generation: free trees (one per isomorphism class), canonical
//! codes, perfect-matching trees, uniform random labelled trees and all
//! connected labelled graphs on a few vertices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ecc::eccentricities;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::tree_perfect_matching;

pub const FREE_TREES_MAX_N: usize = 22;
pub const LABELED_GRAPHS_MAX_N: usize = 7;

const INF: usize = usize::MAX;

/// Isomorphism-invariant code of a free tree: the canonical level sequence
/// rooted at the center. For a bicentral tree the root is the midpoint of the
/// central edge, so both halves start at level 1 (larger half first) and the
/// code never contains a 0; a unicentral code starts with its single 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u32>);

impl CanonicalCode {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rebuilds the tree in preorder numbering.
    pub fn to_graph(&self) -> Graph {
        let levels = &self.0;
        let bicentral = levels.first() == Some(&1);
        let mut parent = vec![None; levels.len()];
        let mut stack: Vec<usize> = Vec::new();
        for (v, &lvl) in levels.iter().enumerate() {
            let lvl = lvl as usize;
            if bicentral && lvl == 1 {
                // second half attaches to the first root
                parent[v] = stack.first().copied();
                stack.clear();
                stack.push(v);
                continue;
            }
            let depth = if bicentral { lvl - 1 } else { lvl };
            stack.truncate(depth);
            parent[v] = stack.last().copied();
            stack.push(v);
        }
        Graph::from_parents(&parent)
    }
}

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

/// Canonical level sequence of the subtree rooted at `root` (away from
/// `avoid`), root at level 0, children ordered by decreasing sequence.
fn rooted_sequence(t: &Graph, root: usize, avoid: Option<usize>) -> Vec<u32> {
    // BFS order with parents, then assemble bottom-up.
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; t.n()];
    parent[root] = avoid.unwrap_or(usize::MAX);
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &v in t.neighbors(u) {
            if v != parent[u] && Some(v) != avoid.filter(|_| u == root) {
                parent[v] = u;
                order.push(v);
            }
        }
        i += 1;
    }
    let mut seqs: Vec<Vec<u32>> = vec![Vec::new(); t.n()];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); t.n()];
    for &u in order.iter().skip(1) {
        children[parent[u]].push(u);
    }
    for &u in order.iter().rev() {
        let mut kids: Vec<Vec<u32>> = children[u].iter().map(|&c| std::mem::take(&mut seqs[c])).collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut s = Vec::with_capacity(1 + kids.iter().map(Vec::len).sum::<usize>());
        s.push(0);
        for k in kids {
            s.extend(k.into_iter().map(|x| x + 1));
        }
        seqs[u] = s;
    }
    std::mem::take(&mut seqs[root])
}

pub fn canonical_code(t: &Graph) -> Result<CanonicalCode> {
    t.require_tree()?;
    let center = eccentricities(t)?.center;
    Ok(CanonicalCode(match center.as_slice() {
        [c] => rooted_sequence(t, *c, None),
        [a, b] => {
            let mut x = rooted_sequence(t, *a, Some(*b));
            let mut y = rooted_sequence(t, *b, Some(*a));
            if x < y {
                std::mem::swap(&mut x, &mut y);
            }
            x.iter().chain(&y).map(|l| l + 1).collect()
        }
        _ => unreachable!("a tree has one or two central vertices"),
    }))
}

/// Tree from a level sequence (root at level 1, preorder).
fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut parent = vec![None; levels.len()];
    let mut last_at: Vec<usize> = vec![0; levels.len() + 2];
    for (v, &lvl) in levels.iter().enumerate() {
        if lvl > 1 {
            parent[v] = Some(last_at[lvl - 1]);
        }
        last_at[lvl] = v;
    }
    Graph::from_parents(&parent)
}

/// Generator of all free trees on `n` vertices, one per isomorphism class, in
/// a fixed order.
///
/// Successor rule on center-rooted canonical level sequences with constant
/// amortised work per tree (Wright–Richmond–Odlyzko–McKay). The state is
/// plain data, so a clone restarts from the current position.
#[derive(Clone, Debug)]
pub struct TreeStream {
    n: usize,
    // 1-based arrays: level and parent position of each vertex
    l: Vec<usize>,
    w: Vec<usize>,
    p: usize,
    q: usize,
    h1: usize,
    h2: usize,
    c: usize,
    r: usize,
    state: StreamState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum StreamState {
    First,
    Running,
    Done,
}

pub fn free_trees(n: usize) -> Result<TreeStream> {
    if !(1..=FREE_TREES_MAX_N).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "free tree enumeration supports 1 ≤ n ≤ {FREE_TREES_MAX_N}, got {n}"
        )));
    }
    let mut s = TreeStream {
        n,
        l: vec![0; n + 1],
        w: vec![0; n + 1],
        p: 0,
        q: 0,
        h1: 0,
        h2: 0,
        c: INF,
        r: 0,
        state: StreamState::First,
    };
    if n >= 4 {
        let k = n / 2 + 1;
        s.p = if n == 4 { 3 } else { n };
        s.q = n - 1;
        s.h1 = k;
        s.h2 = n;
        s.c = if n % 2 == 1 { INF } else { n + 1 };
        s.r = k;
        for i in 1..=k {
            s.l[i] = i;
            s.w[i] = i - 1;
        }
        for i in k + 1..=n {
            s.l[i] = i - k + 1;
            s.w[i] = i - 1;
        }
        s.w[k + 1] = 1;
    }
    Ok(s)
}

impl TreeStream {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Current level sequence (root at level 1).
    fn levels(&self) -> Vec<usize> {
        if self.n < 4 {
            // the unique tree: a star rooted at its center
            return (0..self.n).map(|i| if i == 0 { 1 } else { 2 }).collect();
        }
        self.l[1..].to_vec()
    }

    fn advance(&mut self) {
        let n = self.n;
        let (l, w) = (&mut self.l, &mut self.w);
        let mut fixit = false;
        if self.c == n + 1
            || (self.p == self.h2
                && ((l[self.h1] == l[self.h2] + 1 && n - self.h2 > self.r - self.h1)
                    || (l[self.h1] == l[self.h2] && n - self.h2 + 1 < self.r - self.h1)))
        {
            if l[self.r] > 3 {
                self.p = self.r;
                self.q = w[self.r];
                if self.h1 == self.r {
                    self.h1 -= 1;
                }
                fixit = true;
            } else {
                self.p = self.r;
                self.r -= 1;
                self.q = 2;
            }
        }
        let mut needr = false;
        let mut needc = false;
        let mut needh2 = false;
        if self.p <= self.h1 {
            self.h1 = self.p - 1;
        }
        if self.p <= self.r {
            needr = true;
        } else if self.p <= self.h2 {
            needh2 = true;
        } else if l[self.h2] + 1 == l[self.h1] && n - self.h2 == self.r - self.h1 {
            if self.p <= self.c {
                needc = true;
            }
        } else {
            self.c = INF;
        }

        let oldp = self.p;
        let delta = self.p - self.q; // L[i] := L[i - delta]
        let oldlq = l[self.q];
        let oldwq = w[self.q];
        self.p = INF;
        for i in oldp..=n {
            l[i] = l[i - delta];
            if l[i] == 2 {
                w[i] = 1;
            } else {
                self.p = i;
                self.q = if l[i] == oldlq { oldwq } else { w[i - delta] + delta };
                w[i] = self.q;
            }
            if needr && l[i] == 2 {
                needr = false;
                needh2 = true;
                self.r = i - 1;
            }
            if needh2 && l[i] <= l[i - 1] && i > self.r + 1 {
                needh2 = false;
                self.h2 = i - 1;
                if l[self.h2] + 1 == l[self.h1] && n - self.h2 == self.r - self.h1 {
                    needc = true;
                } else {
                    self.c = INF;
                }
            }
            if needc {
                if l[i] + 1 != l[self.h1 + i - self.h2] {
                    needc = false;
                    self.c = i;
                } else {
                    self.c = i + 1;
                }
            }
        }
        if fixit {
            self.r = n - self.h1 + 1;
            for i in self.r + 1..=n {
                l[i] = i - self.r + 1;
                w[i] = i - 1;
            }
            w[self.r + 1] = 1;
            self.h2 = n;
            self.p = n;
            self.q = self.p - 1;
            self.c = INF;
        } else {
            if self.p == INF {
                self.p = if l[oldp - 1] != 2 { oldp - 1 } else { oldp - 2 };
                self.q = w[self.p];
            }
            if needh2 {
                self.h2 = n;
                if l[self.h2] + 1 == l[self.h1] && self.h1 == self.r {
                    self.c = n + 1;
                } else {
                    self.c = INF;
                }
            }
        }
    }
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self.state {
            StreamState::Done => return None,
            StreamState::First => {
                self.state = if self.n < 4 {
                    StreamState::Done
                } else {
                    StreamState::Running
                };
            }
            StreamState::Running => {
                if self.q == 0 {
                    self.state = StreamState::Done;
                    return None;
                }
                self.advance();
            }
        }
        Some(tree_from_levels(&self.levels()))
    }
}

/// Free trees on `n` vertices that have a perfect matching.
pub fn pm_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "trees with a perfect matching need even n, got {n}"
        )));
    }
    Ok(free_trees(n)?.filter(|t| tree_perfect_matching(t).expect("generated graphs are trees").is_some()))
}

/// Decodes a Prüfer sequence over `0..n` (length n−2) into a labelled tree.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 || seq.iter().any(|&x| x >= n) {
        return Err(Error::InvalidParameter(format!(
            "Prüfer sequence for n = {n} must have length n−2 with entries < n"
        )));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(std::cmp::Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(std::cmp::Reverse(x));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::new(n, &edges)
}

/// Uniformly random labelled tree on `n ≥ 2` vertices; deterministic per seed.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter("random trees need n ≥ 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    tree_from_prufer(n, &seq)
}

/// All connected labelled graphs on `n` vertices (no isomorphism reduction).
pub fn connected_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(2..=LABELED_GRAPHS_MAX_N).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "labelled graph enumeration supports 2 ≤ n ≤ {LABELED_GRAPHS_MAX_N}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut adj = [0u8; LABELED_GRAPHS_MAX_N];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let mut seen: u8 = 1;
        let mut frontier: u8 = 1;
        while frontier != 0 {
            let mut next = 0;
            for (v, &row) in adj.iter().enumerate().take(n) {
                if frontier >> v & 1 == 1 {
                    next |= row;
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        if seen.count_ones() as usize != n {
            return None;
        }
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Some(Graph::new(n, &edges).expect("bitmask edges are simple"))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Number of free trees on n vertices, n = 0..=22.
    const FREE_TREE_COUNTS: [usize; 23] = [
        1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955, 823065,
        2144505, 5623756,
    ];

    /// Enumerates all n^(n−2) Prüfer sequences and counts distinct codes.
    fn prufer_exhaustion_count(n: usize) -> usize {
        let mut codes = HashSet::new();
        let mut seq = vec![0usize; n - 2];
        loop {
            codes.insert(canonical_code(&tree_from_prufer(n, &seq).unwrap()).unwrap());
            let mut i = 0;
            while i < seq.len() && seq[i] == n - 1 {
                seq[i] = 0;
                i += 1;
            }
            if i == seq.len() {
                break;
            }
            seq[i] += 1;
        }
        codes.len()
    }

    #[test]
    fn prufer_oracle_counts() {
        assert_eq!(prufer_exhaustion_count(4), 2);
        assert_eq!(prufer_exhaustion_count(7), 11);
        assert_eq!(prufer_exhaustion_count(8), 23);
    }

    #[test]
    fn free_tree_counts_and_distinct_codes() {
        for (n, &count) in FREE_TREE_COUNTS.iter().enumerate().take(15).skip(1) {
            let mut codes = HashSet::new();
            for t in free_trees(n).unwrap() {
                assert!(t.is_tree());
                assert_eq!(t.n(), n);
                assert!(codes.insert(canonical_code(&t).unwrap()), "duplicate at n={n}");
            }
            assert_eq!(codes.len(), count, "n={n}");
        }
    }

    #[test]
    fn free_tree_range() {
        assert!(free_trees(0).is_err());
        assert!(free_trees(23).is_err());
    }

    #[test]
    fn restart_by_clone() {
        let mut s = free_trees(9).unwrap();
        s.next();
        s.next();
        let rest: Vec<_> = s.clone().collect();
        assert_eq!(rest, s.collect::<Vec<_>>());
    }

    #[test]
    fn codes_identify_isomorphism() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p4b = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let s4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_code(&p4).unwrap(), canonical_code(&p4b).unwrap());
        assert_ne!(canonical_code(&p4).unwrap(), canonical_code(&s4).unwrap());
        assert_eq!(canonical_code(&p4).unwrap().0, vec![1, 2, 1, 2]);
        assert_eq!(canonical_code(&s4).unwrap().0, vec![0, 1, 1, 1]);
    }

    #[test]
    fn code_rebuilds_the_tree() {
        for n in 1..=11 {
            for t in free_trees(n).unwrap() {
                let code = canonical_code(&t).unwrap();
                assert_eq!(code.len(), n);
                assert_eq!(canonical_code(&code.to_graph()).unwrap(), code);
            }
        }
    }

    #[test]
    fn pm_tree_filter() {
        assert_eq!(pm_trees(2).unwrap().count(), 1);
        assert_eq!(pm_trees(4).unwrap().count(), 1);
        // P_6 and TB_{6,3}; every other tree on six vertices has a vertex
        // carrying two leaves
        let six: Vec<_> = pm_trees(6).unwrap().collect();
        assert_eq!(six.len(), 2);
        assert!(six.iter().any(|t| t.is_path()));
        assert!(pm_trees(7).is_err());
    }

    #[test]
    fn random_tree_determinism() {
        assert_eq!(random_tree(2, 7).unwrap().edges(), vec![(0, 1)]);
        assert_eq!(random_tree(5, 42).unwrap(), random_tree(5, 42).unwrap());
        assert!(random_tree(30, 1).unwrap().is_tree());
        assert!(random_tree(1, 1).is_err());
    }

    #[test]
    fn labelled_graph_counts() {
        assert_eq!(connected_labeled_graphs(2).unwrap().count(), 1);
        assert_eq!(connected_labeled_graphs(3).unwrap().count(), 4);
        assert_eq!(connected_labeled_graphs(4).unwrap().count(), 38);
        assert_eq!(connected_labeled_graphs(5).unwrap().count(), 728);
        assert!(connected_labeled_graphs(8).is_err());
    }
}
