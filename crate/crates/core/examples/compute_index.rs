//! Exact index values of a graph read from an edge-list file, or of a few
//! built-in graphs when no file is given.
//!
//! ```bash
//! cargo run --example compute_index
//! cargo run --example compute_index -- my_graph.txt
//! ```

use augecc::ecc::eccentricities;
use augecc::format::parse_edge_list;
use augecc::index::{display_exact, index_value, neighbor_degree_product, IndexKind};
use augecc::Graph;

fn report(name: &str, g: &Graph) -> augecc::Result<()> {
    let profile = eccentricities(g)?;
    println!(
        "{name}: n = {}, m = {}, diameter {}, radius {}",
        g.n(),
        g.edge_count(),
        profile.diameter,
        profile.radius()
    );
    for u in 0..g.n() {
        println!(
            "  vertex {u}: deg {}, M = {}, ecc {}",
            g.degree(u),
            neighbor_degree_product(g, u)?,
            profile.ecc[u]
        );
    }
    for kind in IndexKind::ALL {
        println!("  {kind} = {}", display_exact(&index_value(g, kind)?));
    }
    Ok(())
}

fn main() -> augecc::Result<()> {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable file");
        return report(&path, &parse_edge_list(&text)?);
    }
    report("P_6", &Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])?)?;
    report("C_5", &Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?)?;
    // paw: triangle with a pendant
    report("paw", &Graph::new(4, &[(0, 1), (1, 2), (2, 0), (2, 3)])?)
}
