//! Exact extremal scans with attainers up to isomorphism.
//!
//! ```bash
//! cargo run --release --example extremal_scan
//! ```

use augecc::extremal::{scan, write_reports_csv, GraphClass};
use augecc::index::IndexKind;

fn main() -> augecc::Result<()> {
    let jobs = [
        (GraphClass::AllTrees, 6),
        (GraphClass::AllTrees, 15),
        (GraphClass::AllTrees, 16),
        (GraphClass::PmTrees, 12),
        (GraphClass::ConnectedGraphs, 5),
    ];
    let mut reports = Vec::new();
    for kind in IndexKind::ALL {
        for (class, n) in jobs {
            reports.push(scan(class, n, kind)?);
        }
    }
    for r in &reports {
        println!(
            "{:<8} {:<6} n={:<3} scanned {:>6}  min {} by {}  max {} by {}",
            r.class.to_string(),
            r.kind.to_string(),
            r.n,
            r.scanned,
            r.min,
            r.min_attainers
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", "),
            r.max,
            r.max_attainers
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    println!();
    write_reports_csv(&reports, std::io::stdout())
}
