//! Target plot: every vertex sits on a circle of radius `-ln C(v)` around
//! the median, and only the angles are optimized, by gradient descent on
//! Kruskal stress against the geodesic distances (nonmetric MDS).

mod isotonic;
mod mds;
mod render;
mod stress;

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use isotonic::{monotone_fit, MonotoneFit, MonotoneFitter};
pub use mds::classical_mds;
pub use render::{quantile, render_target_plot, write_target_plot};
pub use stress::{config_distances, pairs, stress, stress_gradient, stress_parts, Gradient};

use crate::centrality::{CentralityVector, Measure};
use crate::error::{Error, Result};
use crate::geodesic::DistanceMatrix;

/// Called with `(iteration, radii, thetas)` before each descent step.
type Observer<'a> = dyn FnMut(usize, &[f64], &[f64]) + 'a;

/// Polar layout with radii fixed by centrality.
#[derive(Debug, Clone, PartialEq)]
pub struct LayoutConfiguration {
    pub radii: Vec<f64>,
    /// Angles in `[0, 2pi)`.
    pub thetas: Vec<f64>,
    /// The vertex placed at the origin.
    pub median: usize,
    pub stress: f64,
    pub iterations: usize,
    /// `mag(g)` at the returned angles.
    pub final_mag: f64,
    pub converged: bool,
    /// Vertices whose starting direction was undefined and got angle `2 pi i / n`.
    pub fallback_angles: Vec<usize>,
}

impl LayoutConfiguration {
    pub fn positions(&self) -> Vec<[f64; 2]> {
        self.radii
            .iter()
            .zip(&self.thetas)
            .map(|(r, t)| [r * t.cos(), r * t.sin()])
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LayoutOptions {
    pub initial_step: f64,
    pub step_decay: f64,
    /// Stop once `mag(g)` falls below this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Extra runs from uniformly random angles; the lowest-stress run wins.
    pub restarts: usize,
    pub seed: u64,
    /// Allow non-uniform multiplicities.
    pub force: bool,
}

impl Default for LayoutOptions {
    fn default() -> Self {
        LayoutOptions {
            initial_step: 0.2,
            step_decay: 0.95,
            tolerance: 1e-4,
            max_iterations: 500,
            restarts: 0,
            seed: 0,
            force: false,
        }
    }
}

/// `r_i = -ln C(v_i)`; requires every value in `(0, 1]`.
pub fn radii(c: &CentralityVector) -> Result<Vec<f64>> {
    c.values
        .iter()
        .map(|&v| {
            if v == 1.0 {
                Ok(0.0)
            } else if v > 0.0 && v < 1.0 {
                Ok(-v.ln())
            } else {
                Err(Error::invalid(format!("centrality {v} outside (0, 1]")))
            }
        })
        .collect()
}

fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Places `median` at the origin and every other vertex on its circle in the
/// direction of its classical-MDS point as seen from the median's point.
pub fn initial_configuration(points: &[[f64; 2]], radii: &[f64], median: usize) -> Result<LayoutConfiguration> {
    let n = radii.len();
    if points.len() != n || median >= n {
        return Err(Error::invalid("points, radii and median do not match"));
    }
    let anchor = points[median];
    let mut thetas = vec![0.0; n];
    let mut fallback_angles = Vec::new();
    for i in (0..n).filter(|&i| i != median) {
        let dx = points[i][0] - anchor[0];
        let dy = points[i][1] - anchor[1];
        thetas[i] = if dx == 0.0 && dy == 0.0 {
            fallback_angles.push(i);
            TAU * i as f64 / n as f64
        } else {
            wrap_angle(dy.atan2(dx))
        };
    }
    Ok(LayoutConfiguration {
        radii: radii.to_vec(),
        thetas,
        median,
        stress: f64::NAN,
        iterations: 0,
        final_mag: f64::NAN,
        converged: false,
        fallback_angles,
    })
}

struct Problem<'a> {
    fitter: MonotoneFitter,
    radii: &'a [f64],
    radius_norm: f64,
}

struct Evaluation {
    stress: f64,
    gradient: Vec<f64>,
    mag: f64,
}

impl Problem<'_> {
    fn evaluate(&self, thetas: &[f64]) -> Result<Evaluation> {
        let dists = config_distances(self.radii, thetas);
        let fit = self.fitter.fit(&dists);
        let s = stress(&dists, &fit.fitted)?;
        let g = stress_gradient(self.radii, thetas, &fit.fitted)?;
        let mag = g.norm() / self.radius_norm;
        Ok(Evaluation {
            stress: s,
            gradient: g.values,
            mag,
        })
    }

    /// Gradient descent from `start`; returns the lowest-stress iterate.
    fn descend(
        &self,
        start: Vec<f64>,
        opts: &LayoutOptions,
        observer: &mut Observer,
    ) -> Result<(Vec<f64>, Evaluation, usize)> {
        let mut thetas = start;
        let mut step = opts.initial_step;
        let mut best: Option<(Vec<f64>, Evaluation, usize)> = None;
        let mut iteration = 0;
        loop {
            observer(iteration, self.radii, &thetas);
            let eval = self.evaluate(&thetas)?;
            let done = eval.mag < opts.tolerance || iteration == opts.max_iterations;
            let improves = best.as_ref().is_none_or(|b| eval.stress <= b.1.stress);
            let next = if done {
                None
            } else {
                let mag = eval.mag;
                Some(
                    thetas
                        .iter()
                        .zip(&eval.gradient)
                        .map(|(t, g)| wrap_angle(t - step * g / mag))
                        .collect::<Vec<f64>>(),
                )
            };
            if improves {
                best = Some((thetas.clone(), eval, iteration));
            }
            match next {
                None => break,
                Some(t) => thetas = t,
            }
            step *= opts.step_decay;
            iteration += 1;
        }
        let (t, e, _) = best.expect("at least one evaluation");
        Ok((t, e, iteration))
    }
}

/// Target-plot layout of the graph behind `d`.
///
/// `c` must be the global L1 centrality computed with multiplicities `eta`.
/// Layouts assume equal multiplicities; anything else is rejected unless
/// `opts.force` is set.
pub fn optimize_layout(
    d: &DistanceMatrix,
    eta: &[f64],
    c: &CentralityVector,
    opts: &LayoutOptions,
) -> Result<LayoutConfiguration> {
    optimize_layout_with(d, eta, c, opts, |_, _, _| {})
}

/// [`optimize_layout`] with `observer(iteration, radii, thetas)` called on
/// every configuration the descent visits.
pub fn optimize_layout_with(
    d: &DistanceMatrix,
    eta: &[f64],
    c: &CentralityVector,
    opts: &LayoutOptions,
    mut observer: impl FnMut(usize, &[f64], &[f64]),
) -> Result<LayoutConfiguration> {
    let n = d.n();
    if c.measure != Measure::L1 {
        return Err(Error::invalid(format!(
            "target plot needs L1 centrality, got {}",
            c.measure
        )));
    }
    if c.len() != n || eta.len() != n {
        return Err(Error::invalid(
            "centrality, multiplicities and distances differ in size",
        ));
    }
    if !opts.force && eta.iter().any(|&m| m != eta[0]) {
        return Err(Error::invalid(
            "target plot expects equal multiplicities (use force to override)",
        ));
    }
    let radii = radii(c)?;
    let median = c
        .values
        .iter()
        .position(|&v| v == 1.0)
        .ok_or_else(|| Error::Numerical("no vertex has centrality 1".into()))?;

    let radius_norm = radii.iter().map(|r| r * r).sum::<f64>().sqrt();
    if n < 2 || radius_norm == 0.0 {
        let thetas = vec![0.0; n];
        observer(0, &radii, &thetas);
        return Ok(LayoutConfiguration {
            radii,
            thetas,
            median,
            stress: 0.0,
            iterations: 0,
            final_mag: 0.0,
            converged: true,
            fallback_angles: Vec::new(),
        });
    }

    let geodesic: Vec<f64> = pairs(n).into_iter().map(|(i, j)| d.get(i, j)).collect();
    let problem = Problem {
        fitter: MonotoneFitter::new(&geodesic),
        radii: &radii,
        radius_norm,
    };

    let points = classical_mds(d)?;
    let init = initial_configuration(&points, &radii, median)?;
    let (mut thetas, mut eval, mut iterations) = problem.descend(init.thetas, opts, &mut observer)?;

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.restarts {
        let start: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        let (t, e, it) = problem.descend(start, opts, &mut observer)?;
        if e.stress < eval.stress {
            thetas = t;
            eval = e;
            iterations = it;
        }
    }

    Ok(LayoutConfiguration {
        radii,
        thetas,
        median,
        stress: eval.stress,
        iterations,
        final_mag: eval.mag,
        converged: eval.mag < opts.tolerance,
        fallback_angles: init.fallback_angles,
    })
}

/// Stress of `(radii, thetas)` against `d` after refitting the monotone
/// regression.
pub fn stress_with_refit(d: &DistanceMatrix, radii: &[f64], thetas: &[f64]) -> Result<f64> {
    let geodesic: Vec<f64> = pairs(d.n()).into_iter().map(|(i, j)| d.get(i, j)).collect();
    let dists = config_distances(radii, thetas);
    let fit = monotone_fit(&geodesic, &dists);
    stress(&dists, &fit.fitted)
}
