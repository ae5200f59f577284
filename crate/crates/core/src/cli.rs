//! Command-line frontend. `run` parses the arguments, does the work and
//! returns the exit status: 0 on success, 1 on domain errors, 2 on usage
//! errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::enumerate::{free_trees, pm_trees, random_tree};
use crate::error::{Error, Result};
use crate::extremal::{
    scan, super_exploration, verify_claims, write_reports_csv, write_verdicts_csv, ClaimId, GraphClass,
};
use crate::families::{closed_form_value, closed_form_value_as_printed, make_family, tb_third, FamilyKind};
use crate::format::{parse_graph, write_edge_list, write_graph6, GraphFormat};
use crate::graph::Graph;
use crate::index::{display_exact, index_value, IndexKind};
use crate::transforms::{reduce, ReduceMode, TransformRule};

/// Default tree cap for `verify`, and with `--deep`.
pub const VERIFY_TREES_N: (usize, usize) = (16, 18);
/// Default graph cap for `verify`, and with `--deep`.
pub const VERIFY_GRAPHS_N: (usize, usize) = (6, 7);

#[derive(Parser, Debug)]
#[command(
    name = "augecc",
    version,
    about = "Exact augmented eccentric connectivity index toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index of a graph read from FILE ("-" for stdin).
    Compute {
        #[arg(long, value_enum, default_value_t = IndexArg::Aeci)]
        index: IndexArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        file: PathBuf,
    },
    /// Emits a family member with its closed-form and computed values.
    Family {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Central degree, required for tb.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::Both)]
        emit: Emit,
    },
    /// Lists every tree of a class as graph6 lines.
    Enumerate {
        #[arg(long, value_enum, default_value_t = TreeClassArg::Trees)]
        class: TreeClassArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Applies one rule, or traces a reduction to its fixed point.
    Transform {
        #[command(subcommand)]
        action: TransformAction,
    },
    /// Exact extremal scan of one class.
    Scan {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = IndexArg::Aeci)]
        index: IndexArg,
        #[command(flatten)]
        pool: Pool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs the claim checks and writes one CSV row per (claim, n).
    Verify {
        /// "all" or a comma-separated list of claim names.
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        /// Upper n for the tree classes; graphs stay within their own cap.
        #[arg(long)]
        n_max: Option<usize>,
        /// Raises the caps: trees to 18, graphs to 7.
        #[arg(long)]
        deep: bool,
        #[command(flatten)]
        pool: Pool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum TransformAction {
    Apply {
        #[arg(long, value_enum)]
        rule: RuleArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        file: PathBuf,
    },
    Trace {
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        /// Start tree; omit to draw a random tree with --n and --seed.
        #[arg(conflicts_with_all = ["n", "seed"])]
        file: Option<PathBuf>,
        #[arg(long, requires = "seed")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        seed: Option<u64>,
    },
}

#[derive(Args, Debug)]
struct Pool {
    /// Worker threads; 0 uses the available parallelism.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum IndexArg {
    Aeci,
    Saeci,
}

impl From<IndexArg> for IndexKind {
    fn from(a: IndexArg) -> Self {
        match a {
            IndexArg::Aeci => IndexKind::Augmented,
            IndexArg::Saeci => IndexKind::SuperAugmented,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Edgelist,
    Graph6,
}

impl From<FormatArg> for GraphFormat {
    fn from(a: FormatArg) -> Self {
        match a {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Path,
    Star,
    Complete,
    Tb,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Emit {
    Edges,
    Graph6,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TreeClassArg {
    Trees,
    PmTrees,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ClassArg {
    Trees,
    PmTrees,
    Graphs,
}

impl From<ClassArg> for GraphClass {
    fn from(a: ClassArg) -> Self {
        match a {
            ClassArg::Trees => GraphClass::AllTrees,
            ClassArg::PmTrees => GraphClass::PmTrees,
            ClassArg::Graphs => GraphClass::ConnectedGraphs,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RuleArg {
    Pathmin,
    Starmax,
    Balance,
    Degreduce,
    P3,
    Pmshift,
}

impl From<RuleArg> for TransformRule {
    fn from(a: RuleArg) -> Self {
        match a {
            RuleArg::Pathmin => TransformRule::PathMin,
            RuleArg::Starmax => TransformRule::StarMax,
            RuleArg::Balance => TransformRule::BalanceShift,
            RuleArg::Degreduce => TransformRule::DegReducePath,
            RuleArg::P3 => TransformRule::P3Rebalance,
            RuleArg::Pmshift => TransformRule::PmShift,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DirectionArg {
    Decreasing,
    Increasing,
    PmIncreasing,
}

impl From<DirectionArg> for ReduceMode {
    fn from(a: DirectionArg) -> Self {
        match a {
            DirectionArg::Decreasing => ReduceMode::Decreasing,
            DirectionArg::Increasing => ReduceMode::Increasing,
            DirectionArg::PmIncreasing => ReduceMode::PmIncreasing,
        }
    }
}

/// Runs one command; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn read_graph(path: &Path, format: FormatArg) -> Result<Graph> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(io)?
    } else {
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
    };
    parse_graph(&text, format.into())
}

fn create(path: &Path) -> Result<fs::File> {
    fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn with_pool<T: Send>(pool: &Pool, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(pool.threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
        .install(f)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Compute { index, format, file } => {
            let g = read_graph(&file, format)?;
            writeln!(out, "{}", display_exact(&index_value(&g, index.into())?)).map_err(io)?;
            Ok(0)
        }
        Command::Family { kind, n, k, emit } => family(kind, n, k, emit, out),
        Command::Enumerate { class, n, out: path } => {
            let trees: Box<dyn Iterator<Item = Graph>> = match class {
                TreeClassArg::Trees => Box::new(free_trees(n)?),
                TreeClassArg::PmTrees => Box::new(pm_trees(n)?),
            };
            let mut file;
            let sink: &mut dyn Write = match &path {
                Some(p) => {
                    file = std::io::BufWriter::new(create(p)?);
                    &mut file
                }
                None => out,
            };
            let mut count = 0u64;
            for t in trees {
                writeln!(sink, "{}", write_graph6(&t)?).map_err(io)?;
                count += 1;
            }
            sink.flush().map_err(io)?;
            writeln!(err, "{count} trees").map_err(io)?;
            Ok(0)
        }
        Command::Transform { action } => transform(action, out),
        Command::Scan {
            class,
            n,
            index,
            pool,
            out: path,
        } => {
            let report = with_pool(&pool, || scan(class.into(), n, index.into()))?;
            match &path {
                Some(p) => write_reports_csv(std::slice::from_ref(&report), create(p)?)?,
                None => write_reports_csv(std::slice::from_ref(&report), &mut *out)?,
            }
            writeln!(
                err,
                "{} {} n={}: scanned {}, min {} ({} attainer(s)), max {} ({} attainer(s))",
                report.class,
                report.kind,
                report.n,
                report.scanned,
                display_exact(&report.min),
                report.min_attainers.len(),
                display_exact(&report.max),
                report.max_attainers.len()
            )
            .map_err(io)?;
            Ok(0)
        }
        Command::Verify {
            claims,
            n_min,
            n_max,
            deep,
            pool,
            out: path,
        } => verify(&claims, n_min, n_max, deep, &pool, path.as_deref(), out, err),
    }
}

fn family(kind: KindArg, n: usize, k: Option<usize>, emit: Emit, out: &mut dyn Write) -> Result<i32> {
    let kind = match (kind, k) {
        (KindArg::Tb, Some(k)) => FamilyKind::DegreeBalanced(k),
        (KindArg::Tb, None) => return Err(Error::InvalidParameter("--kind tb needs --k".into())),
        (_, Some(_)) => return Err(Error::InvalidParameter("--k only applies to --kind tb".into())),
        (KindArg::Path, None) => FamilyKind::Path,
        (KindArg::Star, None) => FamilyKind::Star,
        (KindArg::Complete, None) => FamilyKind::Complete,
    };
    let g = make_family(kind, n)?;
    if emit != Emit::Graph6 {
        write!(out, "{}", write_edge_list(&g)).map_err(io)?;
    }
    if emit != Emit::Edges {
        writeln!(out, "{}", write_graph6(&g)?).map_err(io)?;
    }
    let computed = index_value(&g, IndexKind::Augmented)?;
    match closed_form_value(kind, n) {
        Ok(closed) => {
            let verdict = if closed == computed { "match" } else { "MISMATCH" };
            writeln!(out, "closed_form = {closed}, computed = {computed}, {verdict}").map_err(io)?;
            if matches!(kind, FamilyKind::DegreeBalanced(k) if k == tb_third(n) && n % 3 == 2) {
                let printed = closed_form_value_as_printed(kind, n)?;
                writeln!(
                    out,
                    "note: the commonly printed constant −1/2 gives {printed}, which disagrees; the corrected constant is −2"
                )
                .map_err(io)?;
            }
            Ok(if closed == computed { 0 } else { 1 })
        }
        Err(_) => {
            writeln!(out, "closed_form = n/a, computed = {computed}").map_err(io)?;
            Ok(0)
        }
    }
}

fn transform(action: TransformAction, out: &mut dyn Write) -> Result<i32> {
    match action {
        TransformAction::Apply { rule, format, file } => {
            let rule: TransformRule = rule.into();
            let t = read_graph(&file, format)?;
            let s = rule.apply(&t)?;
            let before = index_value(&t, IndexKind::Augmented)?;
            let after = index_value(&s, IndexKind::Augmented)?;
            write!(out, "{}", write_edge_list(&s)).map_err(io)?;
            writeln!(out, "{rule}: {} -> {}", display_exact(&before), display_exact(&after)).map_err(io)?;
            Ok(0)
        }
        TransformAction::Trace {
            direction,
            format,
            file,
            n,
            seed,
        } => {
            let t = match (file, n, seed) {
                (Some(f), _, _) => read_graph(&f, format)?,
                (None, Some(n), Some(seed)) => {
                    writeln!(out, "# random tree n = {n}, seed = {seed}").map_err(io)?;
                    random_tree(n, seed)?
                }
                _ => return Err(Error::InvalidParameter("trace needs FILE or --n with --seed".into())),
            };
            let trace = reduce(&t, direction.into())?;
            writeln!(out, "step 0: start, {}", display_exact(&trace.start_value)).map_err(io)?;
            write!(out, "{}", write_edge_list(&trace.start)).map_err(io)?;
            for (i, s) in trace.steps.iter().enumerate() {
                writeln!(out, "step {}: {}, {}", i + 1, s.rule, display_exact(&s.value)).map_err(io)?;
                write!(out, "{}", write_edge_list(&s.graph)).map_err(io)?;
            }
            Ok(0)
        }
    }
}

fn claim_class(c: ClaimId) -> GraphClass {
    match c {
        ClaimId::CorPath | ClaimId::TmMaxTrees | ClaimId::CrossoverLemma => GraphClass::AllTrees,
        ClaimId::CorMaxMatch => GraphClass::PmTrees,
        ClaimId::PropMaxGraphs | ClaimId::PropMinGraphs => GraphClass::ConnectedGraphs,
    }
}

const CLAIMS: [ClaimId; 6] = [
    ClaimId::CorPath,
    ClaimId::TmMaxTrees,
    ClaimId::CorMaxMatch,
    ClaimId::PropMaxGraphs,
    ClaimId::PropMinGraphs,
    ClaimId::CrossoverLemma,
];

#[allow(clippy::too_many_arguments)]
fn verify(
    claims: &str,
    n_min: usize,
    n_max: Option<usize>,
    deep: bool,
    pool: &Pool,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let selected: Vec<ClaimId> = if claims == "all" {
        CLAIMS.to_vec()
    } else {
        claims
            .split(',')
            .map(|s| {
                CLAIMS
                    .into_iter()
                    .find(|c| c.name() == s.trim())
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown claim {s:?}")))
            })
            .collect::<Result<_>>()?
    };
    let pick = |(d, deep_cap): (usize, usize)| if deep { deep_cap } else { d };
    let trees_max = n_max.unwrap_or(pick(VERIFY_TREES_N));
    let graphs_max = n_max.unwrap_or(usize::MAX).min(pick(VERIFY_GRAPHS_N));
    let wants = |class: GraphClass| selected.iter().any(|&c| claim_class(c) == class);

    let rows = with_pool(pool, || {
        let mut rows = Vec::new();
        let tree_classes: Vec<GraphClass> = [GraphClass::AllTrees, GraphClass::PmTrees]
            .into_iter()
            .filter(|&c| wants(c))
            .collect();
        rows.extend(verify_claims(n_min, trees_max, &tree_classes)?);
        if wants(GraphClass::ConnectedGraphs) && n_min <= graphs_max {
            rows.extend(verify_claims(n_min, graphs_max, &[GraphClass::ConnectedGraphs])?);
        }
        if !tree_classes.is_empty() {
            rows.extend(super_exploration(n_min, trees_max)?);
        }
        rows.retain(|r| selected.contains(&r.claim));
        Ok(rows)
    })?;

    match path {
        Some(p) => write_verdicts_csv(&rows, create(p)?)?,
        None => write_verdicts_csv(&rows, &mut *out)?,
    }
    let gates: Vec<_> = rows.iter().filter(|r| r.gate).collect();
    let failed = gates.iter().filter(|r| !r.pass).count();
    let info = rows.len() - gates.len();
    let info_pass = rows.iter().filter(|r| !r.gate && r.pass).count();
    writeln!(
        err,
        "verify: {}/{} gate rows PASS; exploratory super-augmented rows: {info_pass}/{info} PASS",
        gates.len() - failed,
        gates.len()
    )
    .map_err(io)?;
    for r in gates.iter().filter(|r| !r.pass) {
        writeln!(err, "FAIL {} n={}: {}", r.claim, r.n, r.detail).map_err(io)?;
    }
    Ok(if failed == 0 && !gates.is_empty() { 0 } else { 1 })
}
