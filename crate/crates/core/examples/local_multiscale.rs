//! Local L1 centrality: neighborhoods, local medians across locality levels,
//! the multiscale edge digraph and the centrality profile.
//!
//! ```text
//! cargo run --example local_multiscale > multiscale.dot.txt
//! ```

use l1cent::{
    centrality_profile, geodesic_matrix, local_l1_centrality, local_median, multiscale_edges, neighborhood,
    parse_graph, ApspAlgorithm,
};

fn main() -> l1cent::Result<()> {
    let g = parse_graph(
        include_str!("../tests/fixtures/toy.tsv"),
        Some(include_str!("../tests/fixtures/toy_vertices.tsv")),
    )?;
    let d = geodesic_matrix(&g, ApspAlgorithm::Auto)?;
    let eta = g.multiplicities();
    let labels = g.labels();
    let names = |idx: &[usize]| idx.iter().map(|&i| labels[i]).collect::<Vec<_>>().join(",");

    let focal = g.index_of("G").expect("toy graph has G");
    for alpha in [0.3, 0.6, 1.0] {
        let nb = neighborhood(&d, &eta, focal, alpha)?;
        let med = local_median(&d, &eta, focal, alpha)?;
        println!(
            "alpha {alpha}: neighborhood of G = {{{}}}, local median {}",
            names(&nb.members),
            names(&med.indices)
        );
    }

    let alphas = [0.3, 0.6, 1.0];
    println!(
        "\n{:<6} {}",
        "vertex",
        alphas.map(|a| format!("{:>9}", format!("a={a}"))).concat()
    );
    let local: Vec<_> = alphas
        .iter()
        .map(|&a| local_l1_centrality(&d, &eta, a))
        .collect::<Result<_, _>>()?;
    for (v, label) in labels.iter().enumerate() {
        let row: String = local.iter().map(|c| format!("{:>9.4}", c.values[v])).collect();
        println!("{label:<6} {row}");
    }

    let grid: Vec<f64> = (1..=7).map(|k| k as f64 / 7.0).collect();
    let profile = centrality_profile(&d, &eta, &grid)?;
    println!("\nprofile over {} levels (centered ranks):", profile.alphas.len());
    for (label, values) in labels.iter().zip(&profile.values) {
        let row: String = values.iter().map(|x| format!("{x:>6.2}")).collect();
        println!("{label:<6} {row}");
    }

    println!("\n{}", multiscale_edges(&d, &eta, 0.3)?.to_dot(&labels));
    Ok(())
}
