//! Checks every transformation rule on seeded random trees: where a rule
//! applies, the index must move strictly in the rule's direction.
//!
//! ```bash
//! cargo run --release --example monotonicity -- 16 2000
//! ```

use augecc::enumerate::random_tree;
use augecc::index::{index_value, IndexKind};
use augecc::transforms::{Direction, TransformRule};

fn main() -> augecc::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(16, |s| s.parse().expect("n"));
    let count: u64 = args.next().map_or(2000, |s| s.parse().expect("count"));

    let mut applied = [0u64; 6];
    let mut violations = 0;
    for seed in 0..count {
        let t = random_tree(n, seed)?;
        let before = index_value(&t, IndexKind::Augmented)?;
        for (i, rule) in TransformRule::ALL.into_iter().enumerate() {
            let Ok(s) = rule.apply(&t) else { continue };
            applied[i] += 1;
            let after = index_value(&s, IndexKind::Augmented)?;
            let ok = match rule.direction() {
                Direction::Increasing => after > before,
                Direction::Decreasing => after < before,
            };
            if !ok {
                violations += 1;
                println!("violation: {rule} on seed {seed}: {before} -> {after}");
            }
        }
    }
    for (rule, k) in TransformRule::ALL.iter().zip(applied) {
        println!("{rule:<10} applied {k:>6} times");
    }
    println!("{violations} violations over {count} trees on {n} vertices");
    Ok(())
}
