//! Local tree transformations with a known effect on the augmented index,
//! and drivers that iterate them to a fixed point.
//!
//! `PathMin` lowers the index; every other rule raises it. Each `apply_*`
//! returns [`Error::Precondition`] when the rule does not apply, which the
//! drivers and exhaustive checks use to decide applicability.

use std::fmt;

use num_bigint::BigUint;

use crate::ecc::eccentricities;
use crate::error::{precondition, Error, Result};
use crate::families::{balanced_max_degree, tb_third};
use crate::graph::Graph;
use crate::index::{index_value, neighbor_degree_product, ExactRational, IndexKind};
use crate::tree::{diametric_path_farthest_branch, first_branching_index, tree_perfect_matching};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformRule {
    PathMin,
    StarMax,
    BalanceShift,
    DegReducePath,
    P3Rebalance,
    PmShift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl TransformRule {
    pub const ALL: [TransformRule; 6] = [
        TransformRule::PathMin,
        TransformRule::StarMax,
        TransformRule::BalanceShift,
        TransformRule::DegReducePath,
        TransformRule::P3Rebalance,
        TransformRule::PmShift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TransformRule::PathMin => "pathmin",
            TransformRule::StarMax => "starmax",
            TransformRule::BalanceShift => "balance",
            TransformRule::DegReducePath => "degreduce",
            TransformRule::P3Rebalance => "p3",
            TransformRule::PmShift => "pmshift",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name() == s)
    }

    /// Direction in which the rule moves the augmented index.
    pub fn direction(self) -> Direction {
        match self {
            TransformRule::PathMin => Direction::Decreasing,
            _ => Direction::Increasing,
        }
    }

    pub fn apply(self, t: &Graph) -> Result<Graph> {
        match self {
            TransformRule::PathMin => apply_path_min(t),
            TransformRule::StarMax => apply_star_max(t),
            TransformRule::BalanceShift => apply_balance(t),
            TransformRule::DegReducePath => apply_deg_reduce_path(t),
            TransformRule::P3Rebalance => apply_p3_rebalance(t),
            TransformRule::PmShift => apply_pm_shift(t),
        }
    }
}

impl fmt::Display for TransformRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn move_neighbors(t: &Graph, from: usize, to: usize, moved: &[usize]) -> Graph {
    let remove: Vec<_> = moved.iter().map(|&w| (from, w)).collect();
    let add: Vec<_> = moved.iter().map(|&w| (to, w)).collect();
    t.rewire(&remove, &add)
}

/// Moves every off-path neighbour of a chosen branching vertex onto the
/// start of a diametric path. Strictly lowers the index and lengthens the
/// diameter.
pub fn apply_path_min(t: &Graph) -> Result<Graph> {
    const RULE: &str = "pathmin";
    t.require_tree()?;
    if t.is_path() {
        return Err(precondition(RULE, "tree is already a path"));
    }
    let path = diametric_path_farthest_branch(t)?;
    let d = path.len() - 1;
    let i = first_branching_index(t, &path).expect("a non-path tree has a branching vertex");
    let u = if d > 2 && i == 1 && t.degree(path[2]) > 2 {
        path[2]
    } else {
        path[i]
    };
    let off_path: Vec<usize> = t.neighbors(u).iter().copied().filter(|w| !path.contains(w)).collect();
    Ok(move_neighbors(t, u, path[0], &off_path))
}

/// For diameter ≥ 5: moves all pendant neighbours of v_1 (v_0 included) to
/// v_{D−1}, orienting the path so that M(v_2)/deg(v_1) ≤ M(v_{D−2})/deg(v_{D−1}).
pub fn apply_star_max(t: &Graph) -> Result<Graph> {
    const RULE: &str = "starmax";
    t.require_tree()?;
    let mut path = diametric_path_farthest_branch(t)?;
    let d = path.len() - 1;
    if d < 5 {
        return Err(precondition(RULE, format!("diameter {d} < 5")));
    }
    let m = |v: usize| neighbor_degree_product(t, v).expect("vertex on path");
    let lhs = m(path[2]) * BigUint::from(t.degree(path[d - 1]));
    let rhs = m(path[d - 2]) * BigUint::from(t.degree(path[1]));
    if lhs > rhs {
        path.reverse();
    }
    let pendants: Vec<usize> = t
        .neighbors(path[1])
        .iter()
        .copied()
        .filter(|&w| t.degree(w) == 1)
        .collect();
    Ok(move_neighbors(t, path[1], path[d - 1], &pendants))
}

/// Center of a diameter-4 tree with its neighbours sorted by (degree, id).
struct Diameter4 {
    center: usize,
    sorted: Vec<usize>,
}

impl Diameter4 {
    fn of(t: &Graph, rule: &'static str) -> Result<Self> {
        t.require_tree()?;
        let profile = eccentricities(t)?;
        if profile.diameter != 4 {
            return Err(precondition(rule, format!("diameter {} ≠ 4", profile.diameter)));
        }
        let center = profile.center[0];
        let mut sorted = t.neighbors(center).to_vec();
        sorted.sort_by_key(|&v| (t.degree(v), v));
        let non_leaf = sorted.iter().filter(|&&v| t.degree(v) > 1).count();
        if non_leaf < 3 {
            return Err(precondition(
                rule,
                format!("center has {non_leaf} non-leaf neighbours, needs ≥ 3"),
            ));
        }
        Ok(Diameter4 { center, sorted })
    }

    fn first(&self) -> usize {
        self.sorted[0]
    }

    fn last(&self) -> usize {
        *self.sorted.last().unwrap()
    }

    fn spread(&self, t: &Graph) -> usize {
        t.degree(self.last()) - t.degree(self.first())
    }

    fn pendants_of(&self, t: &Graph, v: usize) -> Vec<usize> {
        t.neighbors(v).iter().copied().filter(|&w| w != self.center).collect()
    }
}

/// Diameter 4, ≥ 3 non-leaf center neighbours, neighbour degree spread ≥ 2:
/// moves one pendant from the highest-degree neighbour to the lowest.
pub fn apply_balance(t: &Graph) -> Result<Graph> {
    const RULE: &str = "balance";
    let s = Diameter4::of(t, RULE)?;
    if s.spread(t) < 2 {
        return Err(precondition(RULE, "neighbour degrees already differ by at most 1"));
    }
    let (lo, hi) = (s.first(), s.last());
    let w = s.pendants_of(t, hi)[0];
    Ok(t.rewire(&[(hi, w)], &[(lo, w)]))
}

/// Diameter 4, ≥ 3 non-leaf center neighbours, spread ≤ 1, top degree ≥ 4:
/// two pendants of the top neighbour become a pendant path of length 2 on the
/// center.
pub fn apply_deg_reduce_path(t: &Graph) -> Result<Graph> {
    const RULE: &str = "degreduce";
    let s = Diameter4::of(t, RULE)?;
    if s.spread(t) > 1 {
        return Err(precondition(RULE, "neighbour degrees differ by ≥ 2 (balance first)"));
    }
    let hi = s.last();
    if t.degree(hi) < 4 {
        return Err(precondition(
            RULE,
            format!("largest neighbour degree {} < 4", t.degree(hi)),
        ));
    }
    let pend = s.pendants_of(t, hi);
    let (a, b) = (pend[0], pend[1]);
    Ok(t.rewire(&[(hi, a), (hi, b)], &[(s.center, a), (a, b)]))
}

/// TB_{n,k} with ⌈(n−1)/k⌉ = 3 and k ≠ ⌈(n−1)/3⌉: detaches a degree-2
/// neighbour v_1 and its pendant, hanging them on two other degree-2
/// neighbours. The result is TB_{n,k−1}.
pub fn apply_p3_rebalance(t: &Graph) -> Result<Graph> {
    const RULE: &str = "p3";
    let s = Diameter4::of(t, RULE)?;
    if s.spread(t) > 1 {
        return Err(precondition(RULE, "tree is not degree balanced"));
    }
    let (n, k) = (t.n(), s.sorted.len());
    let p = balanced_max_degree(n, k);
    if p != 3 {
        return Err(precondition(RULE, format!("larger neighbour degree p = {p} ≠ 3")));
    }
    if k == tb_third(n) {
        return Err(precondition(RULE, "center degree already ⌈(n−1)/3⌉"));
    }
    let [v1, v2, v3] = [s.sorted[0], s.sorted[1], s.sorted[2]];
    debug_assert!([v1, v2, v3].iter().all(|&v| t.degree(v) == 2));
    let w1 = s.pendants_of(t, v1)[0];
    Ok(t.rewire(&[(s.center, v1), (v1, w1)], &[(v2, v1), (v3, w1)]))
}

/// Tree with a perfect matching and diameter ≥ 5: moves every degree-2
/// neighbour of v_2 other than v_3 over to v_3.
pub fn apply_pm_shift(t: &Graph) -> Result<Graph> {
    const RULE: &str = "pmshift";
    t.require_tree()?;
    if tree_perfect_matching(t)?.is_none() {
        return Err(precondition(RULE, "tree has no perfect matching"));
    }
    let path = diametric_path_farthest_branch(t)?;
    let d = path.len() - 1;
    if d < 5 {
        return Err(precondition(RULE, format!("diameter {d} < 5")));
    }
    let (v2, v3) = (path[2], path[3]);
    let moved: Vec<usize> = t
        .neighbors(v2)
        .iter()
        .copied()
        .filter(|&w| w != v3 && t.degree(w) == 2)
        .collect();
    Ok(move_neighbors(t, v2, v3, &moved))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceMode {
    /// PathMin until the tree is a path.
    Decreasing,
    /// StarMax while the diameter is ≥ 5, then the diameter-4 rules.
    Increasing,
    /// PmShift until the diameter is ≤ 4.
    PmIncreasing,
}

impl ReduceMode {
    pub fn direction(self) -> Direction {
        match self {
            ReduceMode::Decreasing => Direction::Decreasing,
            _ => Direction::Increasing,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TraceStep {
    pub graph: Graph,
    pub value: ExactRational,
    pub rule: TransformRule,
}

/// Sequence of trees produced by a reduction, with strictly monotone
/// augmented index values.
#[derive(Clone, Debug)]
pub struct TreeTrace {
    pub direction: Direction,
    pub start: Graph,
    pub start_value: ExactRational,
    pub steps: Vec<TraceStep>,
}

impl TreeTrace {
    pub fn last_graph(&self) -> &Graph {
        self.steps.last().map_or(&self.start, |s| &s.graph)
    }

    pub fn last_value(&self) -> &ExactRational {
        self.steps.last().map_or(&self.start_value, |s| &s.value)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

fn diameter(t: &Graph) -> usize {
    eccentricities(t).expect("trees are connected").diameter
}

fn next_rule(t: &Graph, mode: ReduceMode) -> Option<(TransformRule, Graph)> {
    let candidates: &[TransformRule] = match mode {
        ReduceMode::Decreasing => &[TransformRule::PathMin],
        ReduceMode::PmIncreasing => &[TransformRule::PmShift],
        ReduceMode::Increasing if diameter(t) >= 5 => &[TransformRule::StarMax],
        ReduceMode::Increasing => &[
            TransformRule::BalanceShift,
            TransformRule::DegReducePath,
            TransformRule::P3Rebalance,
        ],
    };
    candidates.iter().find_map(|&r| r.apply(t).ok().map(|g| (r, g)))
}

/// Applies the mode's rules until none applies, checking strict
/// monotonicity of the augmented index at every step.
pub fn reduce(t: &Graph, mode: ReduceMode) -> Result<TreeTrace> {
    t.require_tree()?;
    if mode == ReduceMode::PmIncreasing && tree_perfect_matching(t)?.is_none() {
        return Err(precondition("pmshift", "tree has no perfect matching"));
    }
    let n = t.n();
    let limit = n * n + 1;
    let mut trace = TreeTrace {
        direction: mode.direction(),
        start: t.clone(),
        start_value: index_value(t, IndexKind::Augmented)?,
        steps: Vec::new(),
    };
    while let Some((rule, next)) = next_rule(trace.last_graph(), mode) {
        if trace.steps.len() == limit {
            return Err(Error::Monotonicity {
                rule: rule.name(),
                detail: format!("no fixed point after {limit} steps"),
            });
        }
        let value = index_value(&next, IndexKind::Augmented)?;
        let prev = trace.last_value();
        let ok = match trace.direction {
            Direction::Increasing => &value > prev,
            Direction::Decreasing => &value < prev,
        };
        if !ok {
            return Err(Error::Monotonicity {
                rule: rule.name(),
                detail: format!("{prev} -> {value}"),
            });
        }
        trace.steps.push(TraceStep {
            graph: next,
            value,
            rule,
        });
    }
    Ok(trace)
}
