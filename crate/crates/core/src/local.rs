//! Symmetrized centrality, L1 centrality-based neighborhoods, local L1
//! centrality, local medians, multiscale edges and centrality profiles.
//!
//! Everything here reuses the original distance matrix. Symmetrizing a graph
//! about `v_i` is done by raising `eta_i` to `eta_total + eta_i`, and
//! conditioning on a neighborhood restricts the distance matrix and the
//! multiplicities to its members.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::centrality::{
    check_multiplicities, l1_centrality, l1_score, median_of, uniform_margin, weighted_sums, CentralityVector, Measure,
    MedianSet,
};
use crate::error::{Error, Result};
use crate::geodesic::DistanceMatrix;

/// Vertices closest to a focal vertex in the L1 centrality ordering of the
/// graph symmetrized about it.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodSet {
    pub focal: usize,
    pub alpha: f64,
    /// Ascending vertex indices; always contains `focal`.
    pub members: Vec<usize>,
    pub symmetrized_scores: Vec<f64>,
}

/// Directed arcs from every vertex to each of its local medians.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiscaleEdges {
    pub alpha: f64,
    /// `(from, to)` pairs ordered by `from`, then `to`. Self-arcs are omitted.
    pub arcs: Vec<(usize, usize)>,
    /// `is_local_median[v]` is true when `v` is a local median of some vertex
    /// (possibly of itself).
    pub is_local_median: Vec<bool>,
}

impl MultiscaleEdges {
    /// Graphviz digraph; local medians are drawn larger.
    pub fn to_dot(&self, labels: &[&str]) -> String {
        let mut out = String::from("digraph multiscale {\n");
        let _ = writeln!(out, "  // alpha = {}", self.alpha);
        let _ = writeln!(out, "  node [shape=circle, width=0.2, fixedsize=false];");
        for (v, label) in labels.iter().enumerate() {
            if self.is_local_median[v] {
                let _ = writeln!(
                    out,
                    "  {} [width=0.6, style=filled, fillcolor=black, fontcolor=white];",
                    dot_id(label)
                );
            } else {
                let _ = writeln!(out, "  {};", dot_id(label));
            }
        }
        for &(a, b) in &self.arcs {
            let _ = writeln!(out, "  {} -> {};", dot_id(labels[a]), dot_id(labels[b]));
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(label: &str) -> String {
    let plain = !label.is_empty()
        && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !label.starts_with(|c: char| c.is_ascii_digit());
    if plain {
        label.to_string()
    } else {
        format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Local L1 centralities over a grid of locality levels, rank-transformed
/// per level and centered per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityProfile {
    pub alphas: Vec<f64>,
    /// `values[v][a]`: vertex `v` at `alphas[a]`.
    pub values: Vec<Vec<f64>>,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!("alpha must lie in (0, 1], got {alpha}")))
    }
}

/// Number of top-ranked vertices a neighborhood of order `alpha` must hold:
/// `ceil(alpha * n)`, absorbing rounding in `alpha * n`, clamped to `1..=n`.
pub fn neighborhood_size(alpha: f64, n: usize) -> usize {
    let raw = alpha * n as f64;
    let t = (raw - 1e-9 * raw.max(1.0)).ceil() as usize;
    t.clamp(1, n)
}

/// L1 centrality in the graph symmetrized about `focal`: the original graph
/// with `eta_focal` replaced by `eta_total + eta_focal`.
pub fn symmetrized_centrality(d: &DistanceMatrix, eta: &[f64], focal: usize) -> Result<CentralityVector> {
    let total = check_multiplicities(d, eta)?;
    if focal >= d.n() {
        return Err(Error::invalid(format!("vertex {focal} out of range")));
    }
    let mut raised = eta.to_vec();
    raised[focal] = total + eta[focal];
    let mut c = l1_centrality(d, &raised)?;
    c.measure = Measure::Symmetrized { focal };
    Ok(c)
}

fn neighborhood_unchecked(d: &DistanceMatrix, eta: &[f64], focal: usize, alpha: f64) -> Result<NeighborhoodSet> {
    let scores = symmetrized_centrality(d, eta, focal)?.values;
    let size = neighborhood_size(alpha, d.n());
    let mut sorted = scores.clone();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let threshold = sorted[size - 1];
    let members = (0..d.n()).filter(|&v| v == focal || scores[v] >= threshold).collect();
    Ok(NeighborhoodSet {
        focal,
        alpha,
        members,
        symmetrized_scores: scores,
    })
}

/// Order-`alpha` neighborhood of `focal`: every vertex whose symmetrized
/// score reaches the `ceil(alpha * n)`-th largest score. Ties at the
/// threshold are all kept, so the set can exceed `ceil(alpha * n)`.
pub fn neighborhood(d: &DistanceMatrix, eta: &[f64], focal: usize, alpha: f64) -> Result<NeighborhoodSet> {
    check_alpha(alpha)?;
    neighborhood_unchecked(d, eta, focal, alpha)
}

/// Local L1 centrality of order `alpha` for every vertex: the closed form
/// evaluated on the distance submatrix and multiplicity subvector of each
/// vertex's own neighborhood. At `alpha = 1` this is bit-for-bit
/// [`l1_centrality`].
pub fn local_l1_centrality(d: &DistanceMatrix, eta: &[f64], alpha: f64) -> Result<CentralityVector> {
    check_alpha(alpha)?;
    check_multiplicities(d, eta)?;
    let values = (0..d.n())
        .into_par_iter()
        .map(|k| {
            let nb = neighborhood_unchecked(d, eta, k, alpha)?;
            let pos = nb.members.binary_search(&k).expect("focal is a member");
            let (sums, total) = weighted_sums(d, eta, &nb.members);
            Ok(l1_score(d, &nb.members, &sums, total, pos))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(CentralityVector {
        measure: Measure::LocalL1 { alpha },
        values,
    })
}

/// Graph median of the problem restricted to the order-`alpha` neighborhood
/// of `focal`.
pub fn local_median(d: &DistanceMatrix, eta: &[f64], focal: usize, alpha: f64) -> Result<MedianSet> {
    let nb = neighborhood(d, eta, focal, alpha)?;
    Ok(median_of(d, eta, &nb.members))
}

pub fn multiscale_edges(d: &DistanceMatrix, eta: &[f64], alpha: f64) -> Result<MultiscaleEdges> {
    check_alpha(alpha)?;
    check_multiplicities(d, eta)?;
    let medians = (0..d.n())
        .into_par_iter()
        .map(|k| local_median(d, eta, k, alpha))
        .collect::<Result<Vec<MedianSet>>>()?;
    let mut arcs = Vec::new();
    let mut is_local_median = vec![false; d.n()];
    for (k, m) in medians.iter().enumerate() {
        for &target in &m.indices {
            is_local_median[target] = true;
            if target != k {
                arcs.push((k, target));
            }
        }
    }
    Ok(MultiscaleEdges {
        alpha,
        arcs,
        is_local_median,
    })
}

/// `{5/n, 10/n, ...}` up to 1, or `{1}` when `n < 5`.
pub fn default_alpha_grid(n: usize) -> Vec<f64> {
    let grid: Vec<f64> = (1..)
        .map(|k| 5 * k)
        .take_while(|&s| s <= n)
        .map(|s| s as f64 / n as f64)
        .collect();
    if grid.is_empty() {
        vec![1.0]
    } else {
        grid
    }
}

/// Local L1 centrality at each `alpha`, turned into uniform-margin ranks per
/// level, then shifted so that each vertex's row has mean zero.
pub fn centrality_profile(d: &DistanceMatrix, eta: &[f64], alphas: &[f64]) -> Result<CentralityProfile> {
    if alphas.is_empty() {
        return Err(Error::invalid("empty alpha grid"));
    }
    for &a in alphas {
        check_alpha(a)?;
    }
    if alphas.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("alpha grid must be strictly increasing"));
    }
    let n = d.n();
    let mut values = vec![Vec::with_capacity(alphas.len()); n];
    for &a in alphas {
        let column = uniform_margin(&local_l1_centrality(d, eta, a)?.values);
        for (row, x) in values.iter_mut().zip(column) {
            row.push(x);
        }
    }
    for row in &mut values {
        let mean = row.iter().sum::<f64>() / row.len() as f64;
        for x in row.iter_mut() {
            *x -= mean;
        }
    }
    Ok(CentralityProfile {
        alphas: alphas.to_vec(),
        values,
    })
}
