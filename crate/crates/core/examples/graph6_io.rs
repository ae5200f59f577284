//! Edge-list and graph6 conversion.
//!
//! ```bash
//! cargo run --example graph6_io
//! echo "DhC" | cargo run --example graph6_io -- -
//! ```

use std::io::Read;

use augecc::format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use augecc::index::{display_exact, index_value, IndexKind};

fn main() -> augecc::Result<()> {
    if std::env::args().nth(1).as_deref() == Some("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).expect("stdin");
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let g = parse_graph6(line.trim())?;
            println!("{line}: {}", display_exact(&index_value(&g, IndexKind::Augmented)?));
            print!("{}", write_edge_list(&g));
        }
        return Ok(());
    }

    let g = parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n")?;
    let g6 = write_graph6(&g)?;
    println!("P_5 as graph6: {g6}");
    let back = parse_graph6(&g6)?;
    assert_eq!(back, g);
    print!("decoded again:\n{}", write_edge_list(&back));

    for bad in ["", "D", "DhC?", "D~~"] {
        println!("{bad:?} -> {}", parse_graph6(bad).unwrap_err());
    }
    Ok(())
}
