//! Free-tree enumeration: counts, perfect-matching subclass, canonical codes
//! and a uniform random labelled tree identified within the enumeration.
//!
//! ```bash
//! cargo run --release --example enumerate_trees -- 12
//! ```

use std::collections::HashSet;

use augecc::enumerate::{canonical_code, free_trees, pm_trees, random_tree};
use augecc::format::write_graph6;

fn main() -> augecc::Result<()> {
    let top: usize = std::env::args().nth(1).map_or(12, |s| s.parse().expect("n"));
    println!("{:>3} {:>10} {:>10}", "n", "trees", "pm-trees");
    for n in 2..=top {
        let pm = if n % 2 == 0 {
            pm_trees(n)?.count().to_string()
        } else {
            "-".into()
        };
        println!("{n:>3} {:>10} {pm:>10}", free_trees(n)?.count());
    }

    println!("\ntrees on 6 vertices:");
    for t in free_trees(6)? {
        println!("  {}  code {}", write_graph6(&t)?, canonical_code(&t)?);
    }

    let n = 10;
    let codes: HashSet<_> = free_trees(n)?.map(|t| canonical_code(&t)).collect::<Result<_, _>>()?;
    let t = random_tree(n, 42)?;
    let c = canonical_code(&t)?;
    println!(
        "\nrandom tree (n = {n}, seed 42): {:?}\n  code {c}, found in enumeration: {}",
        t.edges(),
        codes.contains(&c)
    );
    Ok(())
}
