//! Index-monotone tree transformations: single rule applications and full
//! reductions towards the path, the maximal trees and TB_{n,n/2}.
//!
//! ```bash
//! cargo run --example transform_trace -- 14 7
//! ```

use augecc::enumerate::random_tree;
use augecc::families::{make_family, FamilyKind};
use augecc::index::display_exact;
use augecc::transforms::{reduce, ReduceMode, TransformRule};
use augecc::Graph;

fn show(mode: ReduceMode, t: &Graph) {
    match reduce(t, mode) {
        Ok(trace) => {
            println!("{mode:?}: start {}", display_exact(&trace.start_value));
            for s in &trace.steps {
                println!("  {:<10} {}", s.rule.to_string(), display_exact(&s.value));
            }
            println!("  ends at {:?}", trace.last_graph().edges());
        }
        Err(e) => println!("{mode:?}: {e}"),
    }
}

fn main() -> augecc::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(14, |s| s.parse().expect("n"));
    let seed: u64 = args.next().map_or(7, |s| s.parse().expect("seed"));

    let t = random_tree(n, seed)?;
    println!("random tree n = {n}, seed = {seed}: {:?}", t.edges());
    for rule in TransformRule::ALL {
        match rule.apply(&t) {
            Ok(s) => println!("  {rule:<10} applies ({:?}) -> {:?}", rule.direction(), s.edges()),
            Err(e) => println!("  {rule:<10} {e}"),
        }
    }
    show(ReduceMode::Decreasing, &t);
    show(ReduceMode::Increasing, &t);

    // a tree with a perfect matching: the path on an even number of vertices
    show(ReduceMode::PmIncreasing, &make_family(FamilyKind::Path, 10)?);
    Ok(())
}
