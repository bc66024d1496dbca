//! Lorenz curve and Gini coefficient of the L1 centralities, under equal and
//! under supplied multiplicities.
//!
//! ```text
//! cargo run --example heterogeneity -- lorenz.svg
//! ```

use l1cent::{geodesic_matrix, gini, l1_centrality, lorenz, parse_graph, ApspAlgorithm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_graph(
        include_str!("../tests/fixtures/toy.tsv"),
        Some(include_str!("../tests/fixtures/toy_weighted_vertices.tsv")),
    )?;
    let d = geodesic_matrix(&g, ApspAlgorithm::Auto)?;

    let weighted = l1_centrality(&d, &g.multiplicities())?;
    let equal = l1_centrality(&d, &vec![1.0; g.n()])?;
    println!("gini, equal multiplicities:    {:.4}", gini(&equal.values)?);
    println!("gini, weighted multiplicities: {:.4}", gini(&weighted.values)?);

    let curve = lorenz(&weighted.values)?;
    print!("\n{}", curve.to_tsv(Some(4)));
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, curve.to_svg())?;
        println!("wrote {path}");
    }
    Ok(())
}
