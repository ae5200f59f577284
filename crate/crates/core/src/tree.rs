//! Tree-specific structure: diametric path selection and perfect matchings.

use std::collections::VecDeque;

use crate::ecc::eccentricities;
use crate::error::Result;
use crate::graph::Graph;

/// A set of vertex-disjoint edges, each stored as `(min, max)` and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        let mut hit = vec![false; g.n()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || hit[u] || hit[v] {
                return false;
            }
            hit[u] = true;
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// Index of the first vertex of degree ≥ 3 on `path`, if any.
pub fn first_branching_index(t: &Graph, path: &[usize]) -> Option<usize> {
    path.iter().position(|&v| t.degree(v) >= 3)
}

/// A diametric path `v_0 … v_D` whose first branching vertex lies as far as
/// possible from `v_0`, ties broken by the lexicographically smallest vertex
/// sequence. For a path graph this is the path itself, starting at its
/// smaller end.
pub fn diametric_path_farthest_branch(t: &Graph) -> Result<Vec<usize>> {
    t.require_tree()?;
    let profile = eccentricities(t)?;
    let d = profile.diameter;
    let mut best: Option<(usize, Vec<usize>)> = None;
    for a in (0..t.n()).filter(|&a| profile.ecc[a] == d) {
        let (dist, parent) = t.bfs_with_parents(a);
        for b in (0..t.n()).filter(|&b| dist[b] == d) {
            let mut path = Vec::with_capacity(d + 1);
            let mut v = b;
            while v != a {
                path.push(v);
                v = parent[v];
            }
            path.push(a);
            path.reverse();
            let key = first_branching_index(t, &path).unwrap_or(usize::MAX);
            let better = match &best {
                None => true,
                Some((k, p)) => key > *k || (key == *k && path < *p),
            };
            if better {
                best = Some((key, path));
            }
        }
    }
    Ok(best.expect("a tree has at least one diametric path").1)
}

/// The perfect matching of a tree, found by repeatedly matching a leaf with
/// its unique neighbour. `None` when no perfect matching exists.
pub fn tree_perfect_matching(t: &Graph) -> Result<Option<Matching>> {
    t.require_tree()?;
    let n = t.n();
    if n % 2 == 1 {
        return Ok(None);
    }
    let mut deg = t.degrees();
    let mut matched = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut edges = Vec::with_capacity(n / 2);
    while let Some(leaf) = queue.pop_front() {
        if matched[leaf] {
            continue;
        }
        let Some(&mate) = t.neighbors(leaf).iter().find(|&&w| !matched[w]) else {
            return Ok(None);
        };
        matched[leaf] = true;
        matched[mate] = true;
        edges.push((leaf.min(mate), leaf.max(mate)));
        for &w in t.neighbors(mate) {
            if !matched[w] {
                deg[w] -= 1;
                match deg[w] {
                    0 => return Ok(None),
                    1 => queue.push_back(w),
                    _ => {}
                }
            }
        }
    }
    if matched.iter().all(|&m| m) {
        edges.sort_unstable();
        Ok(Some(Matching { edges }))
    } else {
        Ok(None)
    }
}
