//! The closed-form L1 centrality next to its definition: the smallest
//! multiplicity that must be added to a vertex before it becomes a median,
//! found by bisection.
//!
//! ```text
//! cargo run --example oracle
//! ```

use l1cent::{geodesic_matrix, l1_centrality, l1_centrality_oracle, parse_graph, ApspAlgorithm};

const EDGES: &str = "\
hub\ta\t1
hub\tb\t1
hub\tc\t2
c\td\t1
d\te\t0.5
";

fn main() -> l1cent::Result<()> {
    let g = parse_graph(EDGES, None)?;
    let d = geodesic_matrix(&g, ApspAlgorithm::Auto)?;
    let eta = g.multiplicities();
    let closed = l1_centrality(&d, &eta)?;

    println!(
        "{:<6} {:>12} {:>12} {:>10}",
        "vertex", "closed form", "bisection", "diff"
    );
    for v in 0..g.n() {
        let oracle = l1_centrality_oracle(&d, &eta, v)?;
        println!(
            "{:<6} {:>12.9} {:>12.9} {:>10.1e}",
            g.label(v),
            closed.values[v],
            oracle,
            (closed.values[v] - oracle).abs()
        );
    }
    Ok(())
}
