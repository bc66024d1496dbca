//! Kruskal stress of a polar configuration and its gradient in the angles.

use crate::error::{Error, Result};

/// Unordered pairs `(i, j)`, `i < j`, in row-major order. Every per-pair
/// vector in this module uses this order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Euclidean distance between `(r_i, theta_i)` and `(r_j, theta_j)` for every pair.
pub fn config_distances(radii: &[f64], thetas: &[f64]) -> Vec<f64> {
    let n = radii.len();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(polar_distance(radii[i], thetas[i], radii[j], thetas[j]));
        }
    }
    out
}

#[inline]
fn polar_distance(ri: f64, ti: f64, rj: f64, tj: f64) -> f64 {
    (ri * ri + rj * rj - 2.0 * ri * rj * (ti - tj).cos()).max(0.0).sqrt()
}

/// `(S*, T*)`: residual and total sums of squares over all pairs.
pub fn stress_parts(distances: &[f64], fitted: &[f64]) -> (f64, f64) {
    let mut s = 0.0;
    let mut t = 0.0;
    for (d, f) in distances.iter().zip(fitted) {
        s += (d - f) * (d - f);
        t += d * d;
    }
    (s, t)
}

/// `S = sqrt(S* / T*)`.
pub fn stress(distances: &[f64], fitted: &[f64]) -> Result<f64> {
    if distances.len() != fitted.len() {
        return Err(Error::invalid("distance and fit lengths differ"));
    }
    let (s, t) = stress_parts(distances, fitted);
    if t == 0.0 {
        return Err(Error::Numerical("stress undefined: all points coincide".into()));
    }
    Ok((s / t).sqrt())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gradient {
    pub values: Vec<f64>,
    /// Pairs at zero distance, whose terms were left out.
    pub skipped_pairs: Vec<(usize, usize)>,
}

impl Gradient {
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|g| g * g).sum::<f64>().sqrt()
    }
}

/// `dS/dtheta_i = sqrt(T*/S*) / T* * sum_{j != i} r_i r_j sin(theta_i - theta_j)
/// (1 - S*/T* - fitted_ij / d_ij)`, with the fitted values held fixed.
///
/// A perfect fit (`S* = 0`) yields the zero vector.
pub fn stress_gradient(radii: &[f64], thetas: &[f64], fitted: &[f64]) -> Result<Gradient> {
    let n = radii.len();
    if thetas.len() != n || fitted.len() != n * n.saturating_sub(1) / 2 {
        return Err(Error::invalid("configuration and fit sizes disagree"));
    }
    let distances = config_distances(radii, thetas);
    let (s, t) = stress_parts(&distances, fitted);
    if t == 0.0 {
        return Err(Error::Numerical("stress undefined: all points coincide".into()));
    }
    let mut values = vec![0.0; n];
    let mut skipped_pairs = Vec::new();
    if s == 0.0 {
        return Ok(Gradient { values, skipped_pairs });
    }
    let ratio = s / t;
    let mut p = 0;
    for i in 0..n {
        for j in i + 1..n {
            let d = distances[p];
            let f = fitted[p];
            p += 1;
            if d == 0.0 {
                skipped_pairs.push((i, j));
                continue;
            }
            let term = radii[i] * radii[j] * (thetas[i] - thetas[j]).sin() * (1.0 - ratio - f / d);
            values[i] += term;
            // sin is odd, so the (j, i) term is the negation
            values[j] -= term;
        }
    }
    let scale = (t / s).sqrt() / t;
    for g in &mut values {
        *g *= scale;
    }
    Ok(Gradient { values, skipped_pairs })
}
