//! Exhaustive extremal scans over trees, trees with a perfect matching and
//! connected labelled graphs, plus verification of the extremal claims, the
//! star / degree-balanced crossover table and the p = 2 profile.

use std::collections::BTreeSet;
use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::ecc::eccentricities;
use crate::enumerate::{connected_labeled_graphs, free_trees, pm_trees, FREE_TREES_MAX_N, LABELED_GRAPHS_MAX_N};
use crate::error::{Error, Result};
use crate::families::{closed_form_value, make_family, tb_third, FamilyKind};
use crate::format::write_graph6;
use crate::graph::Graph;
use crate::index::{decimal_string, index_value, ExactRational, IndexKind};
use crate::iso::IsoCode;
use crate::transforms::apply_pm_shift;
use crate::tree::tree_perfect_matching;

/// Trees on at least this many vertices prefer TB_{n,⌈(n−1)/3⌉} over S_n.
pub const CROSSOVER_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    AllTrees,
    PmTrees,
    ConnectedGraphs,
}

impl GraphClass {
    pub const ALL: [GraphClass; 3] = [GraphClass::AllTrees, GraphClass::PmTrees, GraphClass::ConnectedGraphs];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::AllTrees => "trees",
            GraphClass::PmTrees => "pm-trees",
            GraphClass::ConnectedGraphs => "graphs",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }

    pub fn max_n(self) -> usize {
        match self {
            GraphClass::AllTrees | GraphClass::PmTrees => FREE_TREES_MAX_N,
            GraphClass::ConnectedGraphs => LABELED_GRAPHS_MAX_N,
        }
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n < 2 || n > self.max_n() {
            return Err(Error::InvalidParameter(format!(
                "class {} supports 2 ≤ n ≤ {}, got {n}",
                self.name(),
                self.max_n()
            )));
        }
        if self == GraphClass::PmTrees && n % 2 == 1 {
            return Err(Error::InvalidParameter(format!("class pm-trees needs even n, got {n}")));
        }
        Ok(())
    }

    fn members(self, n: usize) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
        self.check(n)?;
        Ok(match self {
            GraphClass::AllTrees => Box::new(free_trees(n)?),
            GraphClass::PmTrees => Box::new(pm_trees(n)?),
            GraphClass::ConnectedGraphs => Box::new(connected_labeled_graphs(n)?),
        })
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct ExtremalReport {
    pub n: usize,
    pub class: GraphClass,
    pub kind: IndexKind,
    pub min: ExactRational,
    pub max: ExactRational,
    /// Attainers up to isomorphism, sorted by code.
    pub min_attainers: Vec<IsoCode>,
    pub max_attainers: Vec<IsoCode>,
    pub scanned: u64,
}

#[derive(Clone, Debug)]
struct Extreme {
    value: ExactRational,
    attainers: BTreeSet<IsoCode>,
}

#[derive(Clone, Debug, Default)]
struct Acc {
    min: Option<Extreme>,
    max: Option<Extreme>,
    scanned: u64,
}

fn offer(slot: &mut Option<Extreme>, value: &ExactRational, g: &Graph, better: std::cmp::Ordering) -> Result<()> {
    match slot {
        Some(e) if e.value == *value => {
            e.attainers.insert(IsoCode::of(g)?);
        }
        Some(e) if value.cmp(&e.value) != better => {}
        _ => {
            *slot = Some(Extreme {
                value: value.clone(),
                attainers: BTreeSet::from([IsoCode::of(g)?]),
            })
        }
    }
    Ok(())
}

fn merge_slot(a: Option<Extreme>, b: Option<Extreme>, better: std::cmp::Ordering) -> Option<Extreme> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(mut a), Some(b)) => match b.value.cmp(&a.value) {
            std::cmp::Ordering::Equal => {
                a.attainers.extend(b.attainers);
                Some(a)
            }
            o if o == better => Some(b),
            _ => Some(a),
        },
    }
}

impl Acc {
    fn add(mut self, g: &Graph, kind: IndexKind) -> Result<Self> {
        let v = index_value(g, kind)?;
        offer(&mut self.min, &v, g, std::cmp::Ordering::Less)?;
        offer(&mut self.max, &v, g, std::cmp::Ordering::Greater)?;
        self.scanned += 1;
        Ok(self)
    }

    fn merge(self, other: Self) -> Self {
        Acc {
            min: merge_slot(self.min, other.min, std::cmp::Ordering::Less),
            max: merge_slot(self.max, other.max, std::cmp::Ordering::Greater),
            scanned: self.scanned + other.scanned,
        }
    }
}

/// Exact minimum and maximum of the index over every member of `class` on
/// `n` vertices. Runs on the current rayon pool.
pub fn scan(class: GraphClass, n: usize, kind: IndexKind) -> Result<ExtremalReport> {
    let acc = class
        .members(n)?
        .par_bridge()
        .try_fold(Acc::default, |acc, g| acc.add(&g, kind))
        .try_reduce(Acc::default, |a, b| Ok(a.merge(b)))?;
    let (Some(min), Some(max)) = (acc.min, acc.max) else {
        return Err(Error::InvalidParameter(format!(
            "class {} is empty at n = {n}",
            class.name()
        )));
    };
    Ok(ExtremalReport {
        n,
        class,
        kind,
        min: min.value,
        max: max.value,
        min_attainers: min.attainers.into_iter().collect(),
        max_attainers: max.attainers.into_iter().collect(),
        scanned: acc.scanned,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    /// The path is the unique minimum among trees.
    CorPath,
    /// The star (n ≤ 15) or TB_{n,⌈(n−1)/3⌉} (n ≥ 16) is the unique maximum among trees.
    TmMaxTrees,
    /// Among trees with a perfect matching, TB_{n,n/2} is the unique maximum
    /// and the path the unique minimum; PmShift strictly increases the index.
    CorMaxMatch,
    /// K_n is the unique maximum among connected graphs.
    PropMaxGraphs,
    /// Only paths attain the minimum among connected graphs.
    PropMinGraphs,
    /// S_n beats TB_{n,⌈(n−1)/3⌉} exactly when n ≤ 15.
    CrossoverLemma,
}

impl ClaimId {
    pub fn name(self) -> &'static str {
        match self {
            ClaimId::CorPath => "cor_path",
            ClaimId::TmMaxTrees => "tm_max_trees",
            ClaimId::CorMaxMatch => "cor_max_match",
            ClaimId::PropMaxGraphs => "prop_max_graphs",
            ClaimId::PropMinGraphs => "prop_min_graphs",
            ClaimId::CrossoverLemma => "crossover_lemma",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct ClaimVerdict {
    pub claim: ClaimId,
    pub n: usize,
    pub kind: IndexKind,
    pub pass: bool,
    /// Gate rows decide `verify`'s exit status; exploratory rows do not.
    pub gate: bool,
    /// Predicted attainer, e.g. "P_6" or "TB_{16,5}".
    pub expected: String,
    pub expected_value: ExactRational,
    pub observed_value: ExactRational,
    pub attainers: Vec<IsoCode>,
    /// Counterexample when `pass` is false.
    pub witness: Option<Graph>,
    pub detail: String,
}

impl ClaimVerdict {
    pub fn verdict(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Expected unique maximum among trees on `n ≥ 3` vertices.
pub fn predicted_max_tree(n: usize) -> Result<(FamilyKind, String)> {
    if n >= CROSSOVER_N {
        let k = tb_third(n);
        Ok((FamilyKind::DegreeBalanced(k), format!("TB_{{{n},{k}}}")))
    } else {
        Ok((FamilyKind::Star, format!("S_{n}")))
    }
}

/// Compares the attainers of one extreme against a single predicted graph.
#[allow(clippy::too_many_arguments)]
fn attainer_verdict(
    claim: ClaimId,
    kind: IndexKind,
    n: usize,
    expected_name: String,
    expected: &Graph,
    value: &ExactRational,
    attainers: &[IsoCode],
    gate: bool,
) -> Result<ClaimVerdict> {
    let code = IsoCode::of(expected)?;
    let expected_value = index_value(expected, kind)?;
    let (pass, witness, detail) = if !attainers.contains(&code) {
        let w = attainers[0].to_graph();
        (
            false,
            Some(w),
            format!("extreme {value} not attained by {expected_name} (its value {expected_value})"),
        )
    } else if attainers.len() > 1 {
        let w = attainers.iter().find(|c| **c != code).unwrap().to_graph();
        (false, Some(w), format!("{} co-attainers of {value}", attainers.len()))
    } else {
        (true, None, "unique attainer".to_string())
    };
    Ok(ClaimVerdict {
        claim,
        n,
        kind,
        pass,
        gate,
        expected: expected_name,
        expected_value,
        observed_value: value.clone(),
        attainers: attainers.to_vec(),
        witness,
        detail,
    })
}

/// Checks PmShift on every tree with a perfect matching and diameter ≥ 5:
/// strict increase of the index, perfect matching kept, diameter not
/// increased. Returns the number of applications and the first violation.
pub fn pm_shift_check(n: usize) -> Result<(u64, Option<Graph>)> {
    let mut applied = 0;
    for t in pm_trees(n)? {
        if eccentricities(&t)?.diameter < 5 {
            continue;
        }
        let s = apply_pm_shift(&t)?;
        applied += 1;
        let ok = index_value(&s, IndexKind::Augmented)? > index_value(&t, IndexKind::Augmented)?
            && tree_perfect_matching(&s)?.is_some()
            && eccentricities(&s)?.diameter <= eccentricities(&t)?.diameter;
        if !ok {
            return Ok((applied, Some(t)));
        }
    }
    Ok((applied, None))
}

fn tree_claims(n: usize, kind: IndexKind, gate: bool) -> Result<Vec<ClaimVerdict>> {
    let r = scan(GraphClass::AllTrees, n, kind)?;
    let path = make_family(FamilyKind::Path, n)?;
    let (max_kind, max_name) = predicted_max_tree(n)?;
    Ok(vec![
        attainer_verdict(
            ClaimId::CorPath,
            kind,
            n,
            format!("P_{n}"),
            &path,
            &r.min,
            &r.min_attainers,
            gate,
        )?,
        attainer_verdict(
            ClaimId::TmMaxTrees,
            kind,
            n,
            max_name,
            &make_family(max_kind, n)?,
            &r.max,
            &r.max_attainers,
            gate,
        )?,
    ])
}

fn pm_claims(n: usize, kind: IndexKind, gate: bool) -> Result<Vec<ClaimVerdict>> {
    let r = scan(GraphClass::PmTrees, n, kind)?;
    let k = n / 2;
    let mut max = attainer_verdict(
        ClaimId::CorMaxMatch,
        kind,
        n,
        format!("TB_{{{n},{k}}}"),
        &make_family(FamilyKind::DegreeBalanced(k), n)?,
        &r.max,
        &r.max_attainers,
        gate,
    )?;
    let min = attainer_verdict(
        ClaimId::CorMaxMatch,
        kind,
        n,
        format!("P_{n}"),
        &make_family(FamilyKind::Path, n)?,
        &r.min,
        &r.min_attainers,
        gate,
    )?;
    if kind == IndexKind::Augmented && max.pass {
        let (applied, bad) = pm_shift_check(n)?;
        if let Some(t) = bad {
            max.pass = false;
            max.detail = "pmshift violated strict increase, matching or diameter".into();
            max.witness = Some(t);
        } else {
            max.detail = format!("unique attainer; pmshift ok on {applied} trees");
        }
    }
    Ok(vec![max, min])
}

fn graph_claims(n: usize, kind: IndexKind, gate: bool) -> Result<Vec<ClaimVerdict>> {
    let r = scan(GraphClass::ConnectedGraphs, n, kind)?;
    Ok(vec![
        attainer_verdict(
            ClaimId::PropMaxGraphs,
            kind,
            n,
            format!("K_{n}"),
            &make_family(FamilyKind::Complete, n)?,
            &r.max,
            &r.max_attainers,
            gate,
        )?,
        attainer_verdict(
            ClaimId::PropMinGraphs,
            kind,
            n,
            format!("P_{n}"),
            &make_family(FamilyKind::Path, n)?,
            &r.min,
            &r.min_attainers,
            gate,
        )?,
    ])
}

/// Default lower ends of the verified ranges per class.
pub fn class_min_n(class: GraphClass) -> usize {
    match class {
        GraphClass::AllTrees => 4,
        GraphClass::PmTrees => 6,
        GraphClass::ConnectedGraphs => 3,
    }
}

/// Verifies the augmented-index claims over `n_min..=n_max` for each class.
/// Each class is clamped to its own range (see [`class_min_n`] and
/// [`GraphClass::max_n`]); the crossover rows come with the tree class.
pub fn verify_claims(n_min: usize, n_max: usize, classes: &[GraphClass]) -> Result<Vec<ClaimVerdict>> {
    verify_claims_with(n_min, n_max, classes, IndexKind::Augmented)
}

/// Same claims for either index. Rows are gates only for the augmented index.
pub fn verify_claims_with(
    n_min: usize,
    n_max: usize,
    classes: &[GraphClass],
    kind: IndexKind,
) -> Result<Vec<ClaimVerdict>> {
    if n_min > n_max {
        return Err(Error::InvalidParameter(format!("empty range {n_min}..={n_max}")));
    }
    let gate = kind == IndexKind::Augmented;
    let mut out = Vec::new();
    for &class in classes {
        let lo = n_min.max(class_min_n(class));
        let hi = n_max.min(class.max_n());
        for n in lo..=hi {
            match class {
                GraphClass::AllTrees => out.extend(tree_claims(n, kind, gate)?),
                GraphClass::PmTrees if n % 2 == 0 => out.extend(pm_claims(n, kind, gate)?),
                GraphClass::PmTrees => {}
                GraphClass::ConnectedGraphs => out.extend(graph_claims(n, kind, gate)?),
            }
        }
        if class == GraphClass::AllTrees && kind == IndexKind::Augmented {
            let lo = n_min.max(8);
            if lo <= n_max {
                out.extend(crossover_verdicts(lo, n_max)?);
            }
        }
    }
    Ok(out)
}

/// Super-augmented exploration: the tree and PM-tree claims restated for
/// the super-augmented index, n ≤ 14. Informational rows only.
pub fn super_exploration(n_min: usize, n_max: usize) -> Result<Vec<ClaimVerdict>> {
    verify_claims_with(
        n_min,
        n_max.min(14),
        &[GraphClass::AllTrees, GraphClass::PmTrees],
        IndexKind::SuperAugmented,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Larger {
    Star,
    Balanced,
    Equal,
}

impl fmt::Display for Larger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Larger::Star => "star",
            Larger::Balanced => "tb",
            Larger::Equal => "equal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossoverRow {
    pub n: usize,
    pub k: usize,
    pub star: ExactRational,
    pub tb: ExactRational,
    pub larger: Larger,
}

/// ξ^ac(S_n) against ξ^ac(TB_{n,⌈(n−1)/3⌉}) for n ≥ 8. Values come from the
/// closed forms and are checked against direct computation.
pub fn crossover_table(n_min: usize, n_max: usize) -> Result<Vec<CrossoverRow>> {
    if n_min < 8 {
        return Err(Error::InvalidParameter(format!(
            "crossover table needs n ≥ 8, got {n_min}"
        )));
    }
    (n_min..=n_max)
        .map(|n| {
            let k = tb_third(n);
            let tb_kind = FamilyKind::DegreeBalanced(k);
            let star = closed_form_value(FamilyKind::Star, n)?;
            let tb = closed_form_value(tb_kind, n)?;
            for (kind, v) in [(FamilyKind::Star, &star), (tb_kind, &tb)] {
                let direct = index_value(&make_family(kind, n)?, IndexKind::Augmented)?;
                if direct != *v {
                    return Err(Error::InvalidParameter(format!(
                        "closed form for {kind} at n = {n} gives {v}, direct computation {direct}"
                    )));
                }
            }
            let larger = match star.cmp(&tb) {
                std::cmp::Ordering::Greater => Larger::Star,
                std::cmp::Ordering::Less => Larger::Balanced,
                std::cmp::Ordering::Equal => Larger::Equal,
            };
            Ok(CrossoverRow { n, k, star, tb, larger })
        })
        .collect()
}

fn crossover_verdicts(n_min: usize, n_max: usize) -> Result<Vec<ClaimVerdict>> {
    Ok(crossover_table(n_min, n_max)?
        .into_iter()
        .map(|r| {
            let expected = if r.n >= CROSSOVER_N {
                Larger::Balanced
            } else {
                Larger::Star
            };
            let pass = r.larger == expected;
            let (expected_value, observed_value) = match expected {
                Larger::Star => (r.star.clone(), r.tb.clone()),
                _ => (r.tb.clone(), r.star.clone()),
            };
            let witness = (!pass).then(|| {
                let kind = if expected == Larger::Star {
                    FamilyKind::DegreeBalanced(r.k)
                } else {
                    FamilyKind::Star
                };
                make_family(kind, r.n).expect("valid family")
            });
            ClaimVerdict {
                claim: ClaimId::CrossoverLemma,
                n: r.n,
                kind: IndexKind::Augmented,
                pass,
                gate: true,
                expected: format!("{expected} larger"),
                expected_value,
                observed_value,
                attainers: Vec::new(),
                witness,
                detail: format!("S = {}, TB_{{{},{}}} = {}", r.star, r.n, r.k, r.tb),
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P2Row {
    pub t: usize,
    /// f(t) = 2^{t−1} + (n−t−1)²/3 + t/2
    pub formula: ExactRational,
    /// ξ^ac(TB_{n,n−t−1})
    pub direct: ExactRational,
}

/// f(t) over t = 2..=⌊(n−1)/2⌋ for the trees TB_{n,n−t−1}, whose center's
/// neighbours all have degree at most 2.
pub fn p2_profile(n: usize) -> Result<Vec<P2Row>> {
    if n < 7 {
        return Err(Error::InvalidParameter(format!("p2 profile needs n ≥ 7, got {n}")));
    }
    (2..=(n - 1) / 2)
        .map(|t| {
            let int = |x: usize| BigRational::from_integer(BigInt::from(x));
            let formula = BigRational::from_integer(BigInt::from(1) << (t - 1))
                + int((n - t - 1) * (n - t - 1)) / int(3)
                + int(t) / int(2);
            let direct = index_value(
                &make_family(FamilyKind::DegreeBalanced(n - t - 1), n)?,
                IndexKind::Augmented,
            )?;
            Ok(P2Row { t, formula, direct })
        })
        .collect()
}

/// Values of t where the formula attains its maximum.
pub fn p2_argmax(rows: &[P2Row]) -> Vec<usize> {
    let Some(best) = rows.iter().map(|r| &r.formula).max() else {
        return Vec::new();
    };
    rows.iter().filter(|r| r.formula == *best).map(|r| r.t).collect()
}

const DIGITS: usize = 6;

fn csv_err(e: csv::Error) -> Error {
    Error::Io(format!("csv output: {e}"))
}

fn join_codes(codes: &[IsoCode]) -> String {
    codes.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn write_verdicts_csv<W: Write>(rows: &[ClaimVerdict], w: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(w);
    w.write_record([
        "claim",
        "index",
        "n",
        "gate",
        "verdict",
        "expected",
        "expected_value",
        "expected_decimal",
        "observed_value",
        "observed_decimal",
        "attainers",
        "witness_graph6",
        "detail",
    ])
    .map_err(csv_err)?;
    for r in rows {
        let witness = match &r.witness {
            Some(g) => write_graph6(g)?,
            None => String::new(),
        };
        w.write_record([
            r.claim.name().to_string(),
            r.kind.short_name().to_string(),
            r.n.to_string(),
            if r.gate { "gate" } else { "info" }.to_string(),
            r.verdict().to_string(),
            r.expected.clone(),
            r.expected_value.to_string(),
            decimal_string(&r.expected_value, DIGITS),
            r.observed_value.to_string(),
            decimal_string(&r.observed_value, DIGITS),
            join_codes(&r.attainers),
            witness,
            r.detail.clone(),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(Error::from_io)
}

pub fn write_reports_csv<W: Write>(rows: &[ExtremalReport], w: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(w);
    w.write_record([
        "class",
        "index",
        "n",
        "scanned",
        "min",
        "min_decimal",
        "min_attainers",
        "max",
        "max_decimal",
        "max_attainers",
    ])
    .map_err(csv_err)?;
    for r in rows {
        w.write_record([
            r.class.name().to_string(),
            r.kind.short_name().to_string(),
            r.n.to_string(),
            r.scanned.to_string(),
            r.min.to_string(),
            decimal_string(&r.min, DIGITS),
            join_codes(&r.min_attainers),
            r.max.to_string(),
            decimal_string(&r.max, DIGITS),
            join_codes(&r.max_attainers),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(Error::from_io)
}

pub fn write_crossover_csv<W: Write>(rows: &[CrossoverRow], w: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(w);
    w.write_record([
        "n",
        "k",
        "star",
        "star_decimal",
        "tb",
        "tb_decimal",
        "difference",
        "larger",
    ])
    .map_err(csv_err)?;
    for r in rows {
        let diff = &r.tb - &r.star;
        w.write_record([
            r.n.to_string(),
            r.k.to_string(),
            r.star.to_string(),
            decimal_string(&r.star, DIGITS),
            r.tb.to_string(),
            decimal_string(&r.tb, DIGITS),
            diff.to_string(),
            r.larger.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(Error::from_io)
}

pub fn write_p2_csv<W: Write>(n: usize, rows: &[P2Row], w: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(w);
    w.write_record(["n", "t", "k", "f", "f_decimal", "direct", "agree"])
        .map_err(csv_err)?;
    for r in rows {
        w.write_record([
            n.to_string(),
            r.t.to_string(),
            (n - r.t - 1).to_string(),
            r.formula.to_string(),
            decimal_string(&r.formula, DIGITS),
            r.direct.to_string(),
            (r.formula == r.direct).to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(Error::from_io)
}
