//! Target plot: radii fixed at `-ln C(v)`, angles fitted by nonmetric MDS.
//!
//! ```text
//! cargo run --release --example target_plot -- plot.svg
//! ```

use l1cent::layout::write_target_plot;
use l1cent::{geodesic_matrix, l1_centrality, optimize_layout, parse_graph, ApspAlgorithm, LayoutOptions};

fn main() -> l1cent::Result<()> {
    let g = parse_graph(include_str!("../tests/fixtures/toy.tsv"), None)?;
    let d = geodesic_matrix(&g, ApspAlgorithm::Auto)?;
    let eta = g.multiplicities();
    let c = l1_centrality(&d, &eta)?;

    let opts = LayoutOptions {
        restarts: 4,
        seed: 7,
        ..LayoutOptions::default()
    };
    let layout = optimize_layout(&d, &eta, &c, &opts)?;
    println!(
        "stress {:.4} after {} iterations (converged: {})",
        layout.stress, layout.iterations, layout.converged
    );
    for (v, [x, y]) in layout.positions().into_iter().enumerate() {
        println!(
            "{:<4} r={:.4} theta={:.4} ({x:.4}, {y:.4})",
            g.label(v),
            layout.radii[v],
            layout.thetas[v]
        );
    }

    let path = std::env::args().nth(1).unwrap_or_else(|| "target_plot.svg".into());
    write_target_plot(&layout, &c.values, &g.labels(), path.as_ref())?;
    println!("wrote {path}");
    Ok(())
}
