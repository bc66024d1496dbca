//! L1 centrality, the graph median and the classical measures for one graph.
//!
//! ```text
//! cargo run --example centrality [EDGES.tsv [VERTICES.tsv]]
//! ```
//!
//! Without arguments the bundled two-cluster toy graph is used.

use l1cent::{
    betweenness_centrality, closeness_centrality, degree_centrality, geodesic_matrix, graph_median, l1_centrality,
    parse_graph, ApspAlgorithm, Graph,
};

fn load() -> Result<Graph, Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [] => Ok(parse_graph(
            include_str!("../tests/fixtures/toy.tsv"),
            Some(include_str!("../tests/fixtures/toy_weighted_vertices.tsv")),
        )?),
        [edges, rest @ ..] => {
            let read = |p: &String| std::fs::read_to_string(p);
            let vertices = rest.first().map(read).transpose()?;
            Ok(parse_graph(&read(edges)?, vertices.as_deref())?)
        }
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = load()?;
    let d = geodesic_matrix(&g, ApspAlgorithm::Auto)?;
    let eta = g.multiplicities();

    let l1 = l1_centrality(&d, &eta)?;
    let degree = degree_centrality(&g);
    let closeness = closeness_centrality(&d)?;
    let betweenness = betweenness_centrality(&d, &g)?;

    println!(
        "{:<8} {:>6} {:>8} {:>8} {:>10} {:>12}",
        "vertex", "eta", "l1", "degree", "closeness", "betweenness"
    );
    for (v, m) in eta.iter().enumerate() {
        println!(
            "{:<8} {m:>6.2} {:>8.4} {:>8.0} {:>10.4} {:>12.4}",
            g.label(v),
            l1.values[v],
            degree.values[v],
            closeness.values[v],
            betweenness.values[v]
        );
    }

    let median = graph_median(&d, &eta)?;
    let names: Vec<&str> = median.indices.iter().map(|&i| g.label(i)).collect();
    println!("\nmedian: {} (objective {:.4})", names.join(", "), median.objective);
    Ok(())
}
