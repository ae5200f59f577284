//! Augmented and super-augmented eccentric connectivity indices, evaluated
//! exactly.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ecc::{eccentricities, EccProfile};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Arbitrary-precision rational; always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexKind {
    /// Σ M(u) / ε(u)
    Augmented,
    /// Σ M(u) / ε(u)²
    SuperAugmented,
}

impl IndexKind {
    pub const ALL: [IndexKind; 2] = [IndexKind::Augmented, IndexKind::SuperAugmented];

    pub fn short_name(self) -> &'static str {
        match self {
            IndexKind::Augmented => "aeci",
            IndexKind::SuperAugmented => "saeci",
        }
    }

    fn weight(self, ecc: usize) -> usize {
        match self {
            IndexKind::Augmented => ecc,
            IndexKind::SuperAugmented => ecc * ecc,
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// M(u): product of the degrees of all neighbours of `u`.
pub fn neighbor_degree_product(g: &Graph, u: usize) -> Result<BigUint> {
    g.check_vertex(u)?;
    Ok(degree_product(g, u))
}

fn degree_product(g: &Graph, u: usize) -> BigUint {
    let mut small: u128 = 1;
    let mut neighbors = g.neighbors(u).iter();
    for &v in neighbors.by_ref() {
        match small.checked_mul(g.degree(v) as u128) {
            Some(p) => small = p,
            None => {
                let mut big = BigUint::from(small) * BigUint::from(g.degree(v));
                for &w in neighbors {
                    big *= BigUint::from(g.degree(w));
                }
                return big;
            }
        }
    }
    BigUint::from(small)
}

/// Exact index value of a connected graph on at least two vertices.
pub fn index_value(g: &Graph, kind: IndexKind) -> Result<ExactRational> {
    let profile = eccentricities(g)?;
    index_value_with_profile(g, &profile, kind)
}

/// Same as [`index_value`] when the eccentricity profile is already known.
pub fn index_value_with_profile(g: &Graph, profile: &EccProfile, kind: IndexKind) -> Result<ExactRational> {
    if g.n() < 2 {
        return Err(Error::SingleVertex);
    }
    // Sum over the common denominator lcm{w(ε(u))}, reduced once at the end.
    let mut weights: Vec<usize> = profile.ecc.iter().map(|&e| kind.weight(e)).collect();
    let mut distinct = weights.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let lcm = distinct
        .iter()
        .fold(BigUint::one(), |acc, &w| acc.lcm(&BigUint::from(w)));
    let scale: Vec<(usize, BigUint)> = distinct.iter().map(|&w| (w, &lcm / w)).collect();

    let mut numer = BigUint::zero();
    for (u, w) in weights.drain(..).enumerate() {
        let s = &scale[scale.binary_search_by_key(&w, |&(d, _)| d).unwrap()].1;
        numer += degree_product(g, u) * s;
    }
    Ok(BigRational::new(BigInt::from(numer), BigInt::from(lcm)))
}

/// Rounds to `digits` decimal places (half away from zero) without leaving
/// exact arithmetic.
pub fn decimal_string(x: &ExactRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (x.abs() * BigRational::from_integer(scale.clone()) + BigRational::new(1.into(), 2.into())).floor();
    let scaled = scaled.to_integer();
    let (int, frac) = scaled.div_rem(&scale);
    let sign = if x.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
}

/// `p/q ≈ d.dddddd`, the display form used throughout the CLI.
pub fn display_exact(x: &ExactRational) -> String {
    format!("{} ≈ {}", x, decimal_string(x, 6))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        BigRational::new(n.into(), d.into())
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn degree_products() {
        let k3 = complete(3);
        for u in 0..3 {
            assert_eq!(neighbor_degree_product(&k3, u).unwrap(), BigUint::from(4u32));
        }
        let s4 = star(4);
        assert_eq!(neighbor_degree_product(&s4, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(neighbor_degree_product(&s4, 1).unwrap(), BigUint::from(3u32));
        assert_eq!(neighbor_degree_product(&path(6), 2).unwrap(), BigUint::from(4u32));
        assert!(neighbor_degree_product(&s4, 7).is_err());
    }

    #[test]
    fn huge_products_leave_u128() {
        // M(u) = 39^39 in K_40 exceeds u128
        let k = complete(40);
        let expect = BigUint::from(39u32).pow(39);
        assert_eq!(neighbor_degree_product(&k, 5).unwrap(), expect);
    }

    #[test]
    fn known_values() {
        assert_eq!(index_value(&star(16), IndexKind::Augmented).unwrap(), q(227, 2));
        assert_eq!(index_value(&complete(3), IndexKind::Augmented).unwrap(), q(12, 1));
        assert_eq!(index_value(&path(6), IndexKind::Augmented).unwrap(), q(67, 15));
        assert_eq!(
            index_value(&complete(5), IndexKind::SuperAugmented).unwrap(),
            q(1280, 1)
        );
        assert_eq!(index_value(&star(4), IndexKind::SuperAugmented).unwrap(), q(13, 4));
    }

    #[test]
    fn rejects_degenerate_inputs() {
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(index_value(&k1, IndexKind::Augmented), Err(Error::SingleVertex));
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(index_value(&split, IndexKind::Augmented), Err(Error::Disconnected));
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal_string(&q(67, 15), 6), "4.466667");
        assert_eq!(decimal_string(&q(227, 2), 6), "113.500000");
        assert_eq!(decimal_string(&q(-1, 3), 3), "-0.333");
        assert_eq!(decimal_string(&q(2, 3), 0), "1");
        assert_eq!(display_exact(&q(67, 15)), "67/15 ≈ 4.466667");
    }
}
