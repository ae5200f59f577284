//! Runs every extremal claim check and prints the verdict CSV.
//!
//! ```bash
//! cargo run --release --example verify_claims -- 4 14
//! ```

use augecc::extremal::{super_exploration, verify_claims, write_verdicts_csv, GraphClass};

fn main() -> augecc::Result<()> {
    let mut args = std::env::args().skip(1);
    let lo: usize = args.next().map_or(4, |s| s.parse().expect("n_min"));
    let hi: usize = args.next().map_or(14, |s| s.parse().expect("n_max"));

    let mut rows = verify_claims(lo, hi, &[GraphClass::AllTrees, GraphClass::PmTrees])?;
    rows.extend(verify_claims(lo.min(6), hi.min(6), &[GraphClass::ConnectedGraphs])?);
    rows.extend(super_exploration(lo, hi)?);
    write_verdicts_csv(&rows, std::io::stdout())?;

    let gates = rows.iter().filter(|r| r.gate);
    let failed: Vec<_> = gates.clone().filter(|r| !r.pass).collect();
    eprintln!("{} gate rows, {} failed", gates.count(), failed.len());
    for r in failed {
        eprintln!("  {} n={}: {}", r.claim, r.n, r.detail);
    }
    Ok(())
}
