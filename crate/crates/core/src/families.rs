//! Named graph families (paths, stars, complete graphs, degree-balanced
//! trees) and their closed-form index values.
//!
//! Constructed families use a fixed numbering: the center is 0, its
//! neighbours come next, pendant vertices last. Paths are numbered in path
//! order.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::index::ExactRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Star,
    Complete,
    /// TB_{n,k}: diameter-4 tree with a center of degree `k` whose
    /// neighbours' degrees differ by at most one.
    DegreeBalanced(usize),
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Path => f.write_str("P"),
            FamilyKind::Star => f.write_str("S"),
            FamilyKind::Complete => f.write_str("K"),
            FamilyKind::DegreeBalanced(k) => write!(f, "TB(k={k})"),
        }
    }
}

/// Balance of a degree-balanced tree, most specific class first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BalanceClass {
    Balanced,
    AlmostPerfect,
    Perfect,
}

/// ⌈a / b⌉
pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// The larger neighbour degree p = ⌈(n−1)/k⌉ of TB_{n,k}.
pub fn balanced_max_degree(n: usize, k: usize) -> usize {
    ceil_div(n - 1, k)
}

/// The central degree of the tree that competes with the star, ⌈(n−1)/3⌉.
pub fn tb_third(n: usize) -> usize {
    ceil_div(n - 1, 3)
}

fn check_tb(n: usize, k: usize) -> Result<()> {
    if k < 3 || k + 1 > n {
        return Err(Error::InvalidParameter(format!("TB_{{{n},{k}}} needs 3 ≤ k ≤ n−1")));
    }
    if n - 1 - k < 2 {
        return Err(Error::InvalidParameter(format!(
            "TB_{{{n},{k}}} would have fewer than two pendants on the center's neighbours (diameter < 4)"
        )));
    }
    Ok(())
}

/// Neighbour degrees of TB_{n,k}, higher degrees first.
pub fn balanced_neighbor_degrees(n: usize, k: usize) -> Result<Vec<usize>> {
    check_tb(n, k)?;
    let p = balanced_max_degree(n, k);
    let high = (n - 1) - k * (p - 1);
    Ok((0..k).map(|i| if i < high { p } else { p - 1 }).collect())
}

pub fn make_family(kind: FamilyKind, n: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = match kind {
        FamilyKind::Path => {
            if n < 2 {
                return Err(Error::InvalidParameter("path needs n ≥ 2".into()));
            }
            (1..n).map(|i| (i - 1, i)).collect()
        }
        FamilyKind::Star => {
            if n < 3 {
                return Err(Error::InvalidParameter("star needs n ≥ 3".into()));
            }
            (1..n).map(|i| (0, i)).collect()
        }
        FamilyKind::Complete => {
            if n < 2 {
                return Err(Error::InvalidParameter("complete graph needs n ≥ 2".into()));
            }
            (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
        }
        FamilyKind::DegreeBalanced(k) => {
            let degrees = balanced_neighbor_degrees(n, k)?;
            let mut edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
            let mut next = k + 1;
            for (i, d) in degrees.iter().enumerate() {
                for _ in 1..*d {
                    edges.push((i + 1, next));
                    next += 1;
                }
            }
            debug_assert_eq!(next, n);
            edges
        }
    };
    Graph::new(n, &edges)
}

pub fn balance_class(n: usize, k: usize) -> Result<BalanceClass> {
    check_tb(n, k)?;
    let p = balanced_max_degree(n, k);
    Ok(if k * p == n - 1 {
        BalanceClass::Perfect
    } else if k == ceil_div(n - 1, p) {
        BalanceClass::AlmostPerfect
    } else {
        BalanceClass::Balanced
    })
}

/// Memoised harmonic numbers H_i = Σ_{j ≤ i} 1/j.
#[derive(Clone, Debug, Default)]
pub struct HarmonicCache {
    values: Vec<ExactRational>,
}

impl HarmonicCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, i: usize) -> Result<ExactRational> {
        if i == 0 {
            return Err(Error::InvalidParameter("harmonic number H_0 is not used".into()));
        }
        while self.values.len() < i {
            let j = self.values.len() + 1;
            let prev = self.values.last().cloned().unwrap_or_else(BigRational::zero);
            self.values
                .push(prev + BigRational::new(BigInt::one(), BigInt::from(j)));
        }
        Ok(self.values[i - 1].clone())
    }
}

pub fn harmonic(i: usize, cache: &mut HarmonicCache) -> Result<ExactRational> {
    cache.get(i)
}

fn q(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: impl Into<BigInt>) -> ExactRational {
    BigRational::from_integer(n.into())
}

fn pow(base: u32, e: usize) -> ExactRational {
    int(BigInt::from(base).pow(e as u32))
}

/// Which constant term to use for TB_{n,⌈(n−1)/3⌉} with n = 3k−1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TbThirdConstant {
    /// −2, which agrees with direct evaluation.
    Corrected,
    /// −1/2, as it is commonly printed. Kept only for audit output.
    Printed,
}

/// Closed-form index value of a family member, restricted to the ranges in
/// which the formulas hold: paths n ≥ 5, stars n ≥ 4,
/// TB_{n,⌈(n−1)/3⌉} n ≥ 8, TB_{n,n/2} even n ≥ 6, complete graphs n ≥ 2.
pub fn closed_form_value(kind: FamilyKind, n: usize) -> Result<ExactRational> {
    closed_form_value_with(kind, n, TbThirdConstant::Corrected)
}

/// The printed (uncorrected) variant of [`closed_form_value`]; differs only
/// for TB_{n,⌈(n−1)/3⌉} with n ≡ 2 (mod 3).
pub fn closed_form_value_as_printed(kind: FamilyKind, n: usize) -> Result<ExactRational> {
    closed_form_value_with(kind, n, TbThirdConstant::Printed)
}

fn out_of_range(kind: FamilyKind, n: usize, need: &str) -> Error {
    Error::InvalidParameter(format!("no closed form for {kind} at n = {n} ({need})"))
}

pub fn closed_form_value_with(kind: FamilyKind, n: usize, constant: TbThirdConstant) -> Result<ExactRational> {
    match kind {
        FamilyKind::Path => {
            if n < 5 {
                return Err(out_of_range(kind, n, "needs n ≥ 5"));
            }
            let mut h = HarmonicCache::new();
            let n_i = n as i64;
            Ok(if n.is_multiple_of(2) {
                int(8) * (h.get(n - 1)? - h.get((n - 2) / 2)?) - (q(4, n_i - 1) + q(4, n_i - 2))
            } else {
                int(8) * (h.get(n - 1)? - h.get((n - 3) / 2)?) - (q(12, n_i - 1) + q(4, n_i - 2))
            })
        }
        FamilyKind::Star => {
            if n < 4 {
                return Err(out_of_range(kind, n, "needs n ≥ 4"));
            }
            let m = n as i64 - 1;
            Ok(int(1) + q(m * m, 2))
        }
        FamilyKind::Complete => {
            if n < 2 {
                return Err(out_of_range(kind, n, "needs n ≥ 2"));
            }
            Ok(int(BigInt::from(n)) * int(BigInt::from(n - 1).pow(n as u32 - 1)))
        }
        FamilyKind::DegreeBalanced(k) => {
            if n >= 8 && k == tb_third(n) {
                let kk = k as i64;
                let common = q(kk * kk, 3) + q(3 * kk, 2);
                Ok(match n % 3 {
                    1 => pow(3, k) / int(2) + common,
                    0 => pow(3, k - 1) + common - int(1),
                    _ => {
                        let c = match constant {
                            TbThirdConstant::Corrected => int(2),
                            TbThirdConstant::Printed => q(1, 2),
                        };
                        int(2) * pow(3, k - 2) + common - c
                    }
                })
            } else if n >= 6 && n.is_multiple_of(2) && k == n / 2 {
                let n_i = n as i64;
                Ok(pow(2, n / 2 - 2) + q(n_i * n_i + 3 * n_i - 6, 12))
            } else {
                Err(out_of_range(
                    kind,
                    n,
                    "closed forms exist for k = ⌈(n−1)/3⌉ with n ≥ 8 and k = n/2 with even n ≥ 6",
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecc::eccentricities;
    use crate::index::{index_value, IndexKind};
    use crate::tree::tree_perfect_matching;

    fn direct(kind: FamilyKind, n: usize) -> ExactRational {
        index_value(&make_family(kind, n).unwrap(), IndexKind::Augmented).unwrap()
    }

    #[test]
    fn tb_16_5_is_perfectly_balanced() {
        let t = make_family(FamilyKind::DegreeBalanced(5), 16).unwrap();
        assert_eq!(t.degree(0), 5);
        assert!((1..=5).all(|v| t.degree(v) == 3));
        assert_eq!(eccentricities(&t).unwrap().diameter, 4);
    }

    #[test]
    fn tb_6_3_degrees() {
        let t = make_family(FamilyKind::DegreeBalanced(3), 6).unwrap();
        assert_eq!(t.degree(0), 3);
        assert_eq!((1..=3).map(|v| t.degree(v)).collect::<Vec<_>>(), vec![2, 2, 1]);
    }

    #[test]
    fn star_4() {
        let s = make_family(FamilyKind::Star, 4).unwrap();
        assert_eq!(s.edges(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn family_parameter_errors() {
        assert!(make_family(FamilyKind::DegreeBalanced(2), 10).is_err());
        assert!(make_family(FamilyKind::DegreeBalanced(5), 7).is_err());
        assert!(make_family(FamilyKind::DegreeBalanced(9), 10).is_err());
        assert!(make_family(FamilyKind::Path, 1).is_err());
        assert!(make_family(FamilyKind::Star, 2).is_err());
    }

    #[test]
    fn harmonic_values() {
        let mut c = HarmonicCache::new();
        assert_eq!(harmonic(1, &mut c).unwrap(), q(1, 1));
        assert_eq!(harmonic(4, &mut c).unwrap(), q(25, 12));
        assert_eq!(harmonic(5, &mut c).unwrap(), q(137, 60));
        assert!(harmonic(0, &mut c).is_err());
        for i in 2..40 {
            assert_eq!(c.get(i).unwrap() - c.get(i - 1).unwrap(), q(1, i as i64));
        }
    }

    #[test]
    fn balance_classes() {
        assert_eq!(balance_class(16, 5).unwrap(), BalanceClass::Perfect);
        assert_eq!(balance_class(14, 5).unwrap(), BalanceClass::AlmostPerfect);
        assert_eq!(balance_class(12, 5).unwrap(), BalanceClass::Balanced);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_value(FamilyKind::Star, 16).unwrap(), q(227, 2));
        assert_eq!(closed_form_value(FamilyKind::DegreeBalanced(5), 16).unwrap(), q(412, 3));
        assert_eq!(closed_form_value(FamilyKind::Complete, 5).unwrap(), q(1280, 1));
        assert_eq!(closed_form_value(FamilyKind::Path, 6).unwrap(), q(67, 15));
        assert_eq!(closed_form_value(FamilyKind::DegreeBalanced(4), 8).unwrap(), q(65, 6));
        assert_eq!(closed_form_value(FamilyKind::DegreeBalanced(3), 8).unwrap(), q(23, 2));
        assert_eq!(
            closed_form_value_as_printed(FamilyKind::DegreeBalanced(3), 8).unwrap(),
            q(13, 1)
        );
        assert_eq!(direct(FamilyKind::DegreeBalanced(3), 8), q(23, 2));
    }

    #[test]
    fn closed_form_ranges() {
        assert!(closed_form_value(FamilyKind::Path, 4).is_err());
        assert!(closed_form_value(FamilyKind::Star, 3).is_err());
        assert!(closed_form_value(FamilyKind::DegreeBalanced(2), 7).is_err());
        assert!(closed_form_value(FamilyKind::DegreeBalanced(5), 20).is_err());
    }

    #[test]
    fn closed_forms_match_direct_evaluation() {
        for n in 5..=60 {
            assert_eq!(
                closed_form_value(FamilyKind::Path, n).unwrap(),
                direct(FamilyKind::Path, n),
                "P_{n}"
            );
        }
        for n in 4..=60 {
            assert_eq!(
                closed_form_value(FamilyKind::Star, n).unwrap(),
                direct(FamilyKind::Star, n)
            );
        }
        for n in 2..=30 {
            assert_eq!(
                closed_form_value(FamilyKind::Complete, n).unwrap(),
                direct(FamilyKind::Complete, n)
            );
        }
        for n in 8..=60 {
            let kind = FamilyKind::DegreeBalanced(tb_third(n));
            let d = direct(kind, n);
            assert_eq!(closed_form_value(kind, n).unwrap(), d, "TB third n={n}");
            let printed = closed_form_value_as_printed(kind, n).unwrap();
            assert_eq!(printed == d, n % 3 != 2, "printed form n={n}");
        }
        for n in (6..=60).step_by(2) {
            let kind = FamilyKind::DegreeBalanced(n / 2);
            assert_eq!(closed_form_value(kind, n).unwrap(), direct(kind, n), "TB half n={n}");
        }
    }

    #[test]
    fn balanced_trees_have_diameter_four_and_small_spread() {
        for n in 6..=30 {
            for k in 3..=n - 3 {
                let t = make_family(FamilyKind::DegreeBalanced(k), n).unwrap();
                assert_eq!(eccentricities(&t).unwrap().diameter, 4, "n={n} k={k}");
                let degs: Vec<_> = (1..=k).map(|v| t.degree(v)).collect();
                assert!(degs.iter().max().unwrap() - degs.iter().min().unwrap() <= 1);
            }
        }
    }

    #[test]
    fn half_balanced_trees_have_perfect_matchings() {
        for n in (6..=40).step_by(2) {
            let t = make_family(FamilyKind::DegreeBalanced(n / 2), n).unwrap();
            assert!(tree_perfect_matching(&t).unwrap().is_some());
        }
        // TB_{16,5}: five degree-3 neighbours each carry two leaves
        let t = make_family(FamilyKind::DegreeBalanced(5), 16).unwrap();
        assert!(tree_perfect_matching(&t).unwrap().is_none());
    }
}
