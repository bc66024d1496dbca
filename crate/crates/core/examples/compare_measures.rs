//! Pearson and Spearman correlations between L1 centrality and the classical
//! measures, on a random connected graph.
//!
//! ```text
//! cargo run --example compare_measures -- [N] [SEED]
//! ```

use l1cent::{
    betweenness_centrality, closeness_centrality, correlation, degree_centrality, geodesic_matrix, l1_centrality,
    uniform_margin, ApspAlgorithm, CorrelationKind, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(n: usize, seed: u64) -> l1cent::Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triples = Vec::new();
    for j in 1..n {
        triples.push((rng.gen_range(0..j), j, 1.0));
    }
    for _ in 0..n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && !triples.iter().any(|&(u, v, _)| (u, v) == (a.min(b), a.max(b))) {
            triples.push((a.min(b), a.max(b), 1.0));
        }
    }
    Graph::from_edges((0..n).map(|i| format!("v{i}")).collect::<Vec<_>>(), triples)
}

fn main() -> l1cent::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(40);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);

    let g = random_graph(n, seed)?;
    let d = geodesic_matrix(&g, ApspAlgorithm::Auto)?;
    let l1 = l1_centrality(&d, &g.multiplicities())?.values;
    let measures = [
        ("degree", degree_centrality(&g).values),
        ("closeness", closeness_centrality(&d)?.values),
        ("betweenness", betweenness_centrality(&d, &g)?.values),
    ];

    println!("n = {n}, {} edges", g.edges().len());
    println!("{:<12} {:>8} {:>9}", "measure", "pearson", "spearman");
    for (name, values) in &measures {
        let p = correlation(&l1, values, CorrelationKind::Pearson)?;
        let s = correlation(&l1, values, CorrelationKind::Spearman)?;
        println!("{name:<12} {p:>8.4} {s:>9.4}");
    }

    // ranks mapped onto (0, 1]: Spearman is unchanged, Pearson now compares orderings only
    let u = uniform_margin(&l1);
    let p = correlation(&u, &uniform_margin(&measures[2].1), CorrelationKind::Pearson)?;
    println!("\npearson of uniform margins, l1 vs betweenness: {p:.4}");
    Ok(())
}
