//! The published example networks, read from TSV exports.
//!
//! ```text
//! L1CENT_DATA_DIR=data cargo run --release --example datasets
//! ```
//!
//! See `l1cent::datasets` for the expected file names and how to export them.

use std::path::PathBuf;

use l1cent::datasets::{load_dataset, Dataset};
use l1cent::{geodesic_matrix, gini, graph_median, l1_centrality, ApspAlgorithm};

fn main() -> l1cent::Result<()> {
    let dir = std::env::var_os("L1CENT_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| "data".into());
    for ds in [Dataset::Mcu, Dataset::Assembly] {
        if !ds.available(&dir) {
            println!("{ds}: not found under {}", dir.display());
            continue;
        }
        let g = load_dataset(ds, &dir)?;
        let d = geodesic_matrix(&g, ApspAlgorithm::Auto)?;
        let eta = g.multiplicities();
        let median = graph_median(&d, &eta)?;
        let c = l1_centrality(&d, &eta)?;
        let names: Vec<&str> = median.indices.iter().map(|&i| g.label(i)).collect();
        println!(
            "{ds}: {} vertices, {} edges, median {}, gini {:.4}",
            g.n(),
            g.edges().len(),
            names.join(", "),
            gini(&c.values)?
        );
    }
    Ok(())
}
