//! Star versus TB_{n,⌈(n−1)/3⌉} crossover and the p = 2 profile f(t).
//!
//! ```bash
//! cargo run --example crossover_table
//! ```

use augecc::extremal::{crossover_table, p2_argmax, p2_profile, write_crossover_csv, write_p2_csv};

fn main() -> augecc::Result<()> {
    let rows = crossover_table(8, 40)?;
    write_crossover_csv(&rows, std::io::stdout())?;
    let first = rows.iter().find(|r| r.tb > r.star).map(|r| r.n);
    println!("first n with TB larger: {first:?}\n");

    for n in [9, 12, 20] {
        let profile = p2_profile(n)?;
        write_p2_csv(n, &profile, std::io::stdout())?;
        println!("n = {n}: maximum at t = {:?}\n", p2_argmax(&profile));
    }
    Ok(())
}
