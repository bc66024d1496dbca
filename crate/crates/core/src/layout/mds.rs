use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::geodesic::DistanceMatrix;

/// Classical (Torgerson) scaling into the plane.
///
/// Double-centers `-1/2 D∘D` and scales the two leading eigenvectors by the
/// square roots of their eigenvalues; negative eigenvalues count as zero.
/// Each eigenvector's sign is fixed so its largest-magnitude entry is positive.
pub fn classical_mds(d: &DistanceMatrix) -> Result<Vec<[f64; 2]>> {
    let n = d.n();
    if n < 2 {
        return Err(Error::invalid("classical MDS needs at least 2 points"));
    }
    let sq = DMatrix::from_fn(n, n, |i, j| d.get(i, j) * d.get(i, j));
    let row_means: Vec<f64> = (0..n).map(|i| sq.row(i).sum() / n as f64).collect();
    let grand = row_means.iter().sum::<f64>() / n as f64;
    let b = DMatrix::from_fn(n, n, |i, j| -0.5 * (sq[(i, j)] - row_means[i] - row_means[j] + grand));

    let eig = SymmetricEigen::new(b);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &c| eig.eigenvalues[c].total_cmp(&eig.eigenvalues[a]).then(a.cmp(&c)));

    let mut coords = vec![[0.0; 2]; n];
    for (axis, &col) in order.iter().take(2).enumerate() {
        let lambda = eig.eigenvalues[col].max(0.0);
        let v = eig.eigenvectors.column(col);
        let mut pivot = 0;
        for i in 1..n {
            if v[i].abs() > v[pivot].abs() + 1e-12 {
                pivot = i;
            }
        }
        let sign = if v[pivot] < 0.0 { -1.0 } else { 1.0 };
        let scale = sign * lambda.sqrt();
        for i in 0..n {
            coords[i][axis] = v[i] * scale;
        }
    }
    Ok(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn planar_dist(p: &[[f64; 2]], i: usize, j: usize) -> f64 {
        ((p[i][0] - p[j][0]).powi(2) + (p[i][1] - p[j][1]).powi(2)).sqrt()
    }

    #[test]
    fn equilateral_triangle() {
        let d = DistanceMatrix::from_fn(3, |_, _| 1.0);
        let p = classical_mds(&d).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert!((planar_dist(&p, i, j) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn two_points() {
        let d = DistanceMatrix::from_fn(2, |_, _| 3.5);
        let p = classical_mds(&d).unwrap();
        assert!((planar_dist(&p, 0, 1) - 3.5).abs() < 1e-12);
    }

    #[test]
    fn reproduces_planar_configuration() {
        let pts = [
            [0.0, 0.0],
            [3.0, 1.0],
            [-1.0, 2.0],
            [2.5, -2.0],
            [0.5, 0.7],
            [-2.0, -1.5],
        ];
        let d = DistanceMatrix::from_fn(pts.len(), |i, j| planar_dist(&pts, i, j));
        let p = classical_mds(&d).unwrap();
        for i in 0..pts.len() {
            for j in 0..pts.len() {
                assert!((planar_dist(&p, i, j) - d.get(i, j)).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn single_point_rejected() {
        let d = DistanceMatrix::from_fn(1, |_, _| 0.0);
        assert!(classical_mds(&d).is_err());
    }
}
