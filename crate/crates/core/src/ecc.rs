//! Eccentricities, diameter and center.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Per-vertex eccentricities together with the diameter and the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccProfile {
    pub ecc: Vec<usize>,
    pub diameter: usize,
    pub center: Vec<usize>,
}

impl EccProfile {
    fn from_ecc(ecc: Vec<usize>) -> Self {
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let center = (0..ecc.len()).filter(|&u| ecc[u] == radius).collect();
        EccProfile { ecc, diameter, center }
    }

    pub fn radius(&self) -> usize {
        self.ecc[self.center[0]]
    }
}

/// Eccentricity profile of a connected graph.
///
/// Trees use three BFS sweeps (every eccentricity in a tree is realised at
/// one of the two ends of any diametric path); other graphs run BFS from
/// every vertex.
pub fn eccentricities(g: &Graph) -> Result<EccProfile> {
    if g.edge_count() + 1 == g.n() {
        tree_eccentricities(g)
    } else {
        eccentricities_by_bfs(g)
    }
}

pub(crate) fn eccentricities_by_bfs(g: &Graph) -> Result<EccProfile> {
    let mut ecc = Vec::with_capacity(g.n());
    for u in 0..g.n() {
        let far = g.bfs(u).into_iter().max().unwrap_or(0);
        if far == usize::MAX {
            return Err(Error::Disconnected);
        }
        ecc.push(far);
    }
    Ok(EccProfile::from_ecc(ecc))
}

fn farthest(dist: &[usize]) -> Result<usize> {
    let mut best = 0;
    for (v, &d) in dist.iter().enumerate() {
        if d == usize::MAX {
            return Err(Error::Disconnected);
        }
        if d > dist[best] {
            best = v;
        }
    }
    Ok(best)
}

fn tree_eccentricities(g: &Graph) -> Result<EccProfile> {
    let a = farthest(&g.bfs(0))?;
    let from_a = g.bfs(a);
    let b = farthest(&from_a)?;
    let from_b = g.bfs(b);
    let ecc = from_a.iter().zip(&from_b).map(|(&x, &y)| x.max(y)).collect();
    Ok(EccProfile::from_ecc(ecc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn p3_and_k4() {
        let p = eccentricities(&path(3)).unwrap();
        assert_eq!(p.ecc, vec![2, 1, 2]);
        assert_eq!(p.diameter, 2);
        assert_eq!(p.center, vec![1]);

        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = eccentricities(&k4).unwrap();
        assert_eq!(p.ecc, vec![1; 4]);
        assert_eq!(p.diameter, 1);
    }

    #[test]
    fn p6_bicentral() {
        let p = eccentricities(&path(6)).unwrap();
        assert_eq!(p.ecc, vec![5, 4, 3, 3, 4, 5]);
        assert_eq!(p.diameter, 5);
        assert_eq!(p.center, vec![2, 3]);
        assert_eq!(p.radius(), 3);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(eccentricities(&g), Err(Error::Disconnected));
        // three edges on four vertices but not a tree
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(eccentricities(&g), Err(Error::Disconnected));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        let p = eccentricities(&g).unwrap();
        assert_eq!(p.ecc, vec![0]);
    }
}
