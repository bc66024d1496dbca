//! In the plane, the L1 centrality formula with Euclidean distances
//! approximates the sample L1 depth. At the center of a uniform disk both
//! are close to 1; off center they fall.
//!
//! ```text
//! cargo run --release --example depth_check
//! ```

use l1cent::{euclidean_depth_check, unit_disk_sample};

fn main() -> l1cent::Result<()> {
    let mut points = unit_disk_sample(4000, 1);
    let eta = vec![1.0; points.len()];
    println!("{:>6} {:>8} {:>8} {:>12}", "x", "lhs", "depth", "lower bound");
    for x in [0.0, 0.25, 0.5, 0.75, 0.95] {
        points[0] = vec![x, 0.0];
        let r = euclidean_depth_check(&points, &eta, 0)?;
        println!("{x:>6.2} {:>8.4} {:>8.4} {:>12.4}", r.lhs, r.depth, r.lower_bound);
    }
    Ok(())
}
