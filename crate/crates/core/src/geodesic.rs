//! All-pairs geodesic distances.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense symmetric `n x n` matrix of shortest-path lengths.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    /// Builds a matrix from `f(i, j)`, evaluated for `i < j` and mirrored.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = f(i, j);
                data[i * n + j] = d;
                data[j * n + i] = d;
            }
        }
        DistanceMatrix { n, data }
    }

    /// Wraps row-major data, checking shape, symmetry, zero diagonal and
    /// finite nonnegative entries.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::invalid(format!(
                "distance data has {} entries, expected {}",
                data.len(),
                n * n
            )));
        }
        for i in 0..n {
            if data[i * n + i] != 0.0 {
                return Err(Error::invalid(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                let d = data[i * n + j];
                if !d.is_finite() || d < 0.0 {
                    return Err(Error::invalid(format!("invalid distance at ({i}, {j}): {d}")));
                }
                if d != data[j * n + i] {
                    return Err(Error::invalid(format!("asymmetric distance at ({i}, {j})")));
                }
            }
        }
        Ok(DistanceMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn scaled(&self, c: f64) -> DistanceMatrix {
        DistanceMatrix {
            n: self.n,
            data: self.data.iter().map(|d| d * c).collect(),
        }
    }

    /// Largest violation of `d(i,j) <= d(i,k) + d(k,j)`, relative to `d(i,j)`.
    pub fn max_triangle_violation(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let dij = self.get(i, j);
                for k in 0..n {
                    let excess = dij - (self.get(i, k) + self.get(k, j));
                    if excess > 0.0 {
                        worst = worst.max(excess / dij);
                    }
                }
            }
        }
        worst
    }

    /// TSV with a header row of labels and one labelled row per vertex.
    pub fn to_tsv(&self, labels: &[&str]) -> String {
        let mut out = String::from("label");
        for l in labels {
            out.push('\t');
            out.push_str(l);
        }
        out.push('\n');
        for (i, l) in labels.iter().enumerate() {
            out.push_str(l);
            for d in self.row(i) {
                let _ = write!(out, "\t{d}");
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ApspAlgorithm {
    /// Per-source when the graph is sparse (`|E| < n^2 / 4`), all-pairs otherwise.
    #[default]
    Auto,
    /// One priority-queue single-source run per vertex.
    PerSource,
    /// Floyd-Warshall triple-loop relaxation.
    AllPairs,
}

/// Geodesic distance matrix of a connected graph.
pub fn geodesic_matrix(g: &Graph, algorithm: ApspAlgorithm) -> Result<DistanceMatrix> {
    let n = g.n();
    let algorithm = match algorithm {
        ApspAlgorithm::Auto if 4 * g.edges().len() < n * n => ApspAlgorithm::PerSource,
        ApspAlgorithm::Auto => ApspAlgorithm::AllPairs,
        other => other,
    };
    let mut data = match algorithm {
        ApspAlgorithm::PerSource => {
            let rows: Vec<Vec<f64>> = (0..n).into_par_iter().map(|s| dijkstra(g, s)).collect();
            rows.concat()
        }
        _ => floyd_warshall(g),
    };

    for i in 0..n {
        for j in i + 1..n {
            if data[i * n + j].is_infinite() {
                return Err(Error::Disconnected {
                    from: g.label(i).to_string(),
                    to: g.label(j).to_string(),
                });
            }
            // single-source runs may disagree with their mirror in the last bit
            data[j * n + i] = data[i * n + j];
        }
    }
    Ok(DistanceMatrix { n, data })
}

#[derive(PartialEq)]
struct State {
    dist: f64,
    node: usize,
}

impl Eq for State {}

impl Ord for State {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for State {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra(g: &Graph, source: usize) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; g.n()];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(State {
        dist: 0.0,
        node: source,
    });
    while let Some(State { dist: du, node: u }) = heap.pop() {
        if du > dist[u] {
            continue;
        }
        for &(v, w) in g.neighbors(u) {
            let alt = du + w;
            if alt < dist[v] {
                dist[v] = alt;
                heap.push(State { dist: alt, node: v });
            }
        }
    }
    dist
}

fn floyd_warshall(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut d = vec![f64::INFINITY; n * n];
    for i in 0..n {
        d[i * n + i] = 0.0;
    }
    for e in g.edges() {
        d[e.u * n + e.v] = e.weight;
        d[e.v * n + e.u] = e.weight;
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i * n + k];
            if dik.is_infinite() {
                continue;
            }
            for j in 0..n {
                let alt = dik + d[k * n + j];
                if alt < d[i * n + j] {
                    d[i * n + j] = alt;
                }
            }
        }
    }
    d
}
