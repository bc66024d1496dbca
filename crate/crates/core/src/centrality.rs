//! Global L1 centrality, graph medians and the classical comparison measures.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geodesic::DistanceMatrix;
use crate::graph::Graph;

/// Relative tolerance on the median objective: vertices whose objective is
/// within this fraction of the minimum are all reported as medians.
pub const MEDIAN_RTOL: f64 = 1e-9;

/// Relative tolerance for counting a path as a geodesic in betweenness.
pub const BETWEENNESS_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    L1,
    Degree,
    Closeness,
    Betweenness,
    LocalL1 { alpha: f64 },
    Symmetrized { focal: usize },
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::L1 => write!(f, "l1"),
            Measure::Degree => write!(f, "degree"),
            Measure::Closeness => write!(f, "closeness"),
            Measure::Betweenness => write!(f, "betweenness"),
            Measure::LocalL1 { alpha } => write!(f, "local_l1({alpha})"),
            Measure::Symmetrized { focal } => write!(f, "symmetrized({focal})"),
        }
    }
}

/// Per-vertex scores tagged with the measure that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector {
    pub measure: Measure,
    pub values: Vec<f64>,
}

impl CentralityVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Vertices minimizing the multiplicity-weighted distance sum.
#[derive(Debug, Clone, PartialEq)]
pub struct MedianSet {
    /// Ascending vertex indices.
    pub indices: Vec<usize>,
    /// The minimal objective `sum_j eta_j d(v_i, v_j)`.
    pub objective: f64,
}

impl MedianSet {
    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

pub(crate) fn check_multiplicities(d: &DistanceMatrix, eta: &[f64]) -> Result<f64> {
    if eta.len() != d.n() {
        return Err(Error::invalid(format!(
            "{} multiplicities for {} vertices",
            eta.len(),
            d.n()
        )));
    }
    if d.n() == 0 {
        return Err(Error::invalid("empty distance matrix"));
    }
    if let Some(bad) = eta.iter().find(|m| !m.is_finite() || **m < 0.0) {
        return Err(Error::invalid(format!("invalid multiplicity {bad}")));
    }
    let total: f64 = eta.iter().sum();
    if total <= 0.0 {
        return Err(Error::invalid("total multiplicity must be positive"));
    }
    Ok(total)
}

/// Weighted distance sums `s_x = sum_{i in members} eta_i d(x, i)` for each
/// member `x`, plus the members' total multiplicity. Sums run in member order.
pub(crate) fn weighted_sums(d: &DistanceMatrix, eta: &[f64], members: &[usize]) -> (Vec<f64>, f64) {
    let sums = members
        .iter()
        .map(|&x| {
            let row = d.row(x);
            members.iter().map(|&i| eta[i] * row[i]).sum()
        })
        .collect();
    let total = members.iter().map(|&i| eta[i]).sum();
    (sums, total)
}

/// L1 centrality of `members[pos]` within the problem restricted to `members`.
///
/// Empty maxima (a single member) and zero total mass give 1: every member is
/// then a median. Members whose sum is within [`MEDIAN_RTOL`] of the minimum
/// also get exactly 1, so `C = 1` coincides with membership in the median set.
/// Coincident pairs (`d = 0`) are skipped, the `0/0 = 0` rule.
pub(crate) fn l1_score(d: &DistanceMatrix, members: &[usize], sums: &[f64], total: f64, pos: usize) -> f64 {
    if total <= 0.0 {
        return 1.0;
    }
    let min = sums.iter().copied().fold(f64::INFINITY, f64::min);
    if sums[pos] <= min + MEDIAN_RTOL * min.abs() {
        return 1.0;
    }
    let k = members[pos];
    let row = d.row(k);
    let mut worst = 0.0_f64;
    for (q, &j) in members.iter().enumerate() {
        if q == pos || row[j] == 0.0 {
            continue;
        }
        let ratio = (sums[pos] - sums[q]) / (total * row[j]);
        if ratio > worst {
            worst = ratio;
        }
    }
    1.0 - worst
}

pub(crate) fn median_of(d: &DistanceMatrix, eta: &[f64], members: &[usize]) -> MedianSet {
    let (sums, _) = weighted_sums(d, eta, members);
    let objective = sums.iter().copied().fold(f64::INFINITY, f64::min);
    let cutoff = objective + MEDIAN_RTOL * objective.abs();
    let indices = members
        .iter()
        .zip(&sums)
        .filter(|(_, &s)| s <= cutoff)
        .map(|(&i, _)| i)
        .collect();
    MedianSet { indices, objective }
}

/// Graph medians: all minimizers of `sum_j eta_j d(v_i, v_j)` up to
/// [`MEDIAN_RTOL`].
pub fn graph_median(d: &DistanceMatrix, eta: &[f64]) -> Result<MedianSet> {
    check_multiplicities(d, eta)?;
    let all: Vec<usize> = (0..d.n()).collect();
    Ok(median_of(d, eta, &all))
}

/// L1 centrality of every vertex, in O(n^2) given the distance matrix.
///
/// `C(v_k) = 1 - max_{j != k} { (s_k - s_j) / (eta_total * d(v_j, v_k)) }^+`
/// with `s_x = sum_i eta_i d(v_x, v_i)`. Values lie in `[0, 1]`, and equal 1
/// exactly at the medians (up to rounding of the sums).
pub fn l1_centrality(d: &DistanceMatrix, eta: &[f64]) -> Result<CentralityVector> {
    check_multiplicities(d, eta)?;
    let all: Vec<usize> = (0..d.n()).collect();
    let (sums, total) = weighted_sums(d, eta, &all);
    let values = (0..all.len())
        .into_par_iter()
        .map(|pos| l1_score(d, &all, &sums, total, pos))
        .collect();
    Ok(CentralityVector {
        measure: Measure::L1,
        values,
    })
}

/// L1 centrality of vertex `k` straight from its definition: one minus the
/// smallest extra (normalized) multiplicity `w` that makes `v_k` a graph
/// median, located by bisection on `w in [0, 1]`.
///
/// Independent of the closed form used by [`l1_centrality`]; meant for small
/// graphs in tests.
pub fn l1_centrality_oracle(d: &DistanceMatrix, eta: &[f64], k: usize) -> Result<f64> {
    let total = check_multiplicities(d, eta)?;
    if k >= d.n() {
        return Err(Error::invalid(format!("vertex {k} out of range")));
    }
    let n = d.n();
    let p: Vec<f64> = eta.iter().map(|m| m / total).collect();
    let objective = |j: usize| -> f64 { (0..n).map(|i| p[i] * d.get(j, i)).sum() };
    let base: Vec<f64> = (0..n).map(objective).collect();
    // with v_k's multiplicity raised by w, its own objective is unchanged and
    // every other vertex pays w * d(v_j, v_k) extra
    let is_median = |w: f64| (0..n).all(|j| base[k] <= base[j] + w * d.get(j, k));

    if is_median(0.0) {
        return Ok(1.0);
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if is_median(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(1.0 - 0.5 * (lo + hi))
}

/// Number of incident edges; weights are ignored.
pub fn degree_centrality(g: &Graph) -> CentralityVector {
    CentralityVector {
        measure: Measure::Degree,
        values: (0..g.n()).map(|i| g.degree(i) as f64).collect(),
    }
}

/// Reciprocal of the distance sum to all other vertices.
pub fn closeness_centrality(d: &DistanceMatrix) -> Result<CentralityVector> {
    if d.n() < 2 {
        return Err(Error::invalid("closeness centrality needs at least 2 vertices"));
    }
    let values = (0..d.n()).map(|i| 1.0 / d.row(i).iter().sum::<f64>()).collect();
    Ok(CentralityVector {
        measure: Measure::Closeness,
        values,
    })
}

/// Sum over unordered pairs `{j, k}` (endpoints excluded) of the fraction of
/// geodesics from `v_j` to `v_k` passing through each vertex.
///
/// A path counts as a geodesic when its length is within [`BETWEENNESS_RTOL`]
/// of `d(v_j, v_k)`. Path counts are accumulated per source as reals.
pub fn betweenness_centrality(d: &DistanceMatrix, g: &Graph) -> Result<CentralityVector> {
    let n = g.n();
    if d.n() != n {
        return Err(Error::invalid("distance matrix does not match the graph"));
    }
    let per_source: Vec<Vec<f64>> = (0..n).into_par_iter().map(|s| source_dependencies(d, g, s)).collect();
    let mut values = vec![0.0; n];
    for deps in &per_source {
        for (v, x) in values.iter_mut().zip(deps) {
            *v += x;
        }
    }
    for v in &mut values {
        *v /= 2.0;
    }
    Ok(CentralityVector {
        measure: Measure::Betweenness,
        values,
    })
}

fn source_dependencies(d: &DistanceMatrix, g: &Graph, s: usize) -> Vec<f64> {
    let n = g.n();
    let dist = d.row(s);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| dist[a].total_cmp(&dist[b]).then(a.cmp(&b)));

    let mut sigma = vec![0.0_f64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    sigma[s] = 1.0;
    for &v in &order {
        if v == s {
            continue;
        }
        for &(u, w) in g.neighbors(v) {
            if dist[u] < dist[v] && (dist[u] + w - dist[v]).abs() <= BETWEENNESS_RTOL * dist[v] {
                sigma[v] += sigma[u];
                preds[v].push(u);
            }
        }
    }

    let mut delta = vec![0.0_f64; n];
    for &w in order.iter().rev() {
        for &u in &preds[w] {
            delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
        }
    }
    delta[s] = 0.0;
    delta
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrelationKind {
    Pearson,
    Spearman,
}

/// Pearson product-moment or Spearman rank correlation (average ranks on ties).
pub fn correlation(x: &[f64], y: &[f64], kind: CorrelationKind) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::invalid(format!(
            "correlation inputs differ in length ({} vs {})",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 2 {
        return Err(Error::invalid("correlation needs at least 2 observations"));
    }
    match kind {
        CorrelationKind::Pearson => pearson(x, y),
        CorrelationKind::Spearman => pearson(&average_ranks(x), &average_ranks(y)),
    }
}

fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::Numerical("correlation of a constant input".into()));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// 1-based ranks, tied values sharing the average of their positions.
pub(crate) fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // positions start+1 ..= end
        let rank = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

/// Rank transform onto `{1/n, 2/n, ..., 1}`: the lowest value becomes `1/n`,
/// the next `2/n`, and so on; ties share their average rank.
pub fn uniform_margin(values: &[f64]) -> Vec<f64> {
    let n = values.len() as f64;
    average_ranks(values).into_iter().map(|r| r / n).collect()
}

/// Euclidean counterpart of the L1 centrality formula at a focal point,
/// alongside the sample L1 depth it estimates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepthCheck {
    /// The centrality formula with Euclidean norms in place of geodesics.
    pub lhs: f64,
    /// `1 - |e|`, where `e` is the multiplicity-weighted mean unit vector
    /// from the focal point to the other points.
    pub depth: f64,
    /// `1 - (|e| - eta_focal / eta_total)^+`, a lower bound for `lhs`.
    pub lower_bound: f64,
}

pub fn euclidean_depth_check(points: &[Vec<f64>], eta: &[f64], focal: usize) -> Result<DepthCheck> {
    let m = points.len();
    if m < 2 {
        return Err(Error::invalid("depth check needs at least 2 points"));
    }
    if eta.len() != m {
        return Err(Error::invalid(format!("{} multiplicities for {m} points", eta.len())));
    }
    if focal >= m {
        return Err(Error::invalid(format!("focal index {focal} out of range")));
    }
    let dim = points[0].len();
    if dim == 0 || points.iter().any(|p| p.len() != dim) {
        return Err(Error::invalid("points must share a positive dimension"));
    }
    if eta.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::invalid("multiplicities must be finite and nonnegative"));
    }
    let total: f64 = eta.iter().sum();
    if total <= 0.0 {
        return Err(Error::invalid("total multiplicity must be positive"));
    }
    let dist = |a: &[f64], b: &[f64]| -> f64 { a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt() };
    let x1 = &points[focal];
    let to_focal: Vec<f64> = points.iter().map(|p| dist(p, x1)).collect();
    if let Some(dup) = (0..m).find(|&j| j != focal && to_focal[j] == 0.0) {
        return Err(Error::invalid(format!("point {dup} coincides with the focal point")));
    }

    let sums: Vec<f64> = (0..m)
        .into_par_iter()
        .map(|j| {
            if j == focal {
                return eta.iter().zip(&to_focal).map(|(w, d)| w * d).sum();
            }
            let xj = &points[j];
            points.iter().zip(eta).map(|(xi, w)| w * dist(xj, xi)).sum()
        })
        .collect();
    let mut worst = 0.0_f64;
    for j in (0..m).filter(|&j| j != focal) {
        let ratio = (sums[focal] - sums[j]) / (total * to_focal[j]);
        worst = worst.max(ratio);
    }

    let mut mean_unit = vec![0.0; dim];
    for j in (0..m).filter(|&j| j != focal) {
        let scale = eta[j] / total / to_focal[j];
        for (acc, (a, b)) in mean_unit.iter_mut().zip(points[j].iter().zip(x1)) {
            *acc += scale * (a - b);
        }
    }
    let norm = mean_unit.iter().map(|v| v * v).sum::<f64>().sqrt();
    Ok(DepthCheck {
        lhs: 1.0 - worst,
        depth: 1.0 - norm,
        lower_bound: 1.0 - (norm - eta[focal] / total).max(0.0),
    })
}

/// The origin followed by `samples` points drawn uniformly from the unit disk.
///
/// Radii are `sqrt(u)` with `u` in `(0, 1]`, so no sample lands on the origin.
pub fn unit_disk_sample(samples: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(samples + 1);
    points.push(vec![0.0, 0.0]);
    for _ in 0..samples {
        let r = (1.0 - rng.gen::<f64>()).sqrt();
        let t = std::f64::consts::TAU * rng.gen::<f64>();
        points.push(vec![r * t.cos(), r * t.sin()]);
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::{geodesic_matrix, ApspAlgorithm};
    use crate::graph::parse_graph;

    fn dist(edges: &str) -> (Graph, DistanceMatrix) {
        let g = parse_graph(edges, None).unwrap();
        let d = geodesic_matrix(&g, ApspAlgorithm::Auto).unwrap();
        (g, d)
    }

    const PATH3: &str = "A\tB\nB\tC";
    const K3: &str = "A\tB\nB\tC\nA\tC";
    const STAR: &str = "c\tl1\nc\tl2\nc\tl3";
    const C4: &str = "A\tB\nB\tC\nC\tD\nD\tA";

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn medians() {
        let (_, d) = dist(PATH3);
        assert_eq!(graph_median(&d, &[1.0; 3]).unwrap().indices, vec![1]);
        assert_eq!(graph_median(&d, &[5.0, 1.0, 1.0]).unwrap().indices, vec![0]);
        let (_, d) = dist(K3);
        let m = graph_median(&d, &[1.0; 3]).unwrap();
        assert_eq!(m.indices, vec![0, 1, 2]);
        assert_eq!(m.objective, 2.0);
    }

    #[test]
    fn l1_fixtures() {
        let (_, d) = dist(PATH3);
        let c = l1_centrality(&d, &[1.0; 3]).unwrap();
        assert!(close(&c.values, &[2.0 / 3.0, 1.0, 2.0 / 3.0], 1e-12));

        let (_, d) = dist(STAR);
        let c = l1_centrality(&d, &[1.0; 4]).unwrap();
        assert!(close(&c.values, &[1.0, 0.5, 0.5, 0.5], 1e-12));
    }

    #[test]
    fn heavy_vertex_is_central() {
        let (_, d) = dist(C4);
        let c = l1_centrality(&d, &[3.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(c.values[0], 1.0);
        let c = l1_centrality(&d, &[2.0, 0.5, 1.0, 0.5]).unwrap();
        assert_eq!(c.values[0], 1.0);
    }

    #[test]
    fn single_vertex_is_one() {
        let d = DistanceMatrix::from_fn(1, |_, _| unreachable!());
        assert_eq!(l1_centrality(&d, &[2.0]).unwrap().values, vec![1.0]);
    }

    #[test]
    fn rejects_bad_multiplicities() {
        let (_, d) = dist(PATH3);
        assert!(l1_centrality(&d, &[0.0; 3]).is_err());
        assert!(l1_centrality(&d, &[1.0, -1.0, 1.0]).is_err());
        assert!(l1_centrality(&d, &[1.0; 2]).is_err());
        assert!(graph_median(&d, &[f64::NAN, 1.0, 1.0]).is_err());
    }

    #[test]
    fn oracle_on_path() {
        let (_, d) = dist(PATH3);
        assert_eq!(l1_centrality_oracle(&d, &[1.0; 3], 1).unwrap(), 1.0);
        let a = l1_centrality_oracle(&d, &[1.0; 3], 0).unwrap();
        assert!((a - 2.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn classical_measures() {
        let (g, d) = dist(PATH3);
        assert_eq!(degree_centrality(&g).values, vec![1.0, 2.0, 1.0]);
        let c = closeness_centrality(&d).unwrap();
        assert!(close(&c.values, &[1.0 / 3.0, 0.5, 1.0 / 3.0], 1e-15));
        assert_eq!(betweenness_centrality(&d, &g).unwrap().values, vec![0.0, 1.0, 0.0]);

        let (g, d) = dist(K3);
        assert_eq!(degree_centrality(&g).values, vec![2.0; 3]);
        assert_eq!(closeness_centrality(&d).unwrap().values, vec![0.5; 3]);
        assert_eq!(betweenness_centrality(&d, &g).unwrap().values, vec![0.0; 3]);

        let (g, _) = dist(STAR);
        assert_eq!(degree_centrality(&g).values, vec![3.0, 1.0, 1.0, 1.0]);

        let (g, d) = dist(C4);
        assert_eq!(betweenness_centrality(&d, &g).unwrap().values, vec![0.5; 4]);
    }

    #[test]
    fn closeness_scales_inversely() {
        let (_, d) = dist(PATH3);
        let c1 = closeness_centrality(&d).unwrap();
        let c2 = closeness_centrality(&d.scaled(4.0)).unwrap();
        for (a, b) in c1.values.iter().zip(&c2.values) {
            assert!((a / 4.0 - b).abs() < 1e-15);
        }
        let one = DistanceMatrix::from_fn(1, |_, _| 0.0);
        assert!(closeness_centrality(&one).is_err());
    }

    #[test]
    fn betweenness_with_float_ties() {
        // 0.1 + 0.2 != 0.3 in binary; the two routes A-B-D and A-C-D must tie
        let (g, d) = dist("A\tB\t0.1\nB\tD\t0.2\nA\tC\t0.2\nC\tD\t0.1");
        let b = betweenness_centrality(&d, &g).unwrap();
        assert!(close(&b.values, &[0.5, 0.5, 0.5, 0.5], 1e-12), "{:?}", b.values);
    }

    #[test]
    fn correlations() {
        let x = [1.0, 2.0, 3.0, 5.0];
        let rev = [4.0, 3.0, 2.0, 1.0];
        assert!((correlation(&x, &x, CorrelationKind::Pearson).unwrap() - 1.0).abs() < 1e-15);
        assert!((correlation(&x, &rev, CorrelationKind::Spearman).unwrap() + 1.0).abs() < 1e-15);
        assert!(correlation(&x, &[1.0; 4], CorrelationKind::Pearson).is_err());
        assert!(correlation(&x, &[1.0; 3], CorrelationKind::Pearson).is_err());
        assert!(correlation(&[1.0], &[1.0], CorrelationKind::Spearman).is_err());
    }

    #[test]
    fn ranks_average_ties() {
        assert_eq!(average_ranks(&[2.0, 1.0, 2.0]), vec![2.5, 1.0, 2.5]);
        assert_eq!(uniform_margin(&[2.0 / 3.0, 1.0, 2.0 / 3.0]), vec![0.5, 1.0, 0.5]);
        assert_eq!(uniform_margin(&[7.0; 4]), vec![0.625; 4]);
    }

    #[test]
    fn depth_check_two_points() {
        let pts = vec![vec![0.3, -1.0], vec![2.0, 5.0]];
        let r = euclidean_depth_check(&pts, &[1.0, 1.0], 0).unwrap();
        assert_eq!(r.lhs, 1.0);
    }

    #[test]
    fn depth_check_symmetric_points() {
        let pts = vec![vec![1.0, 1.0], vec![2.0, 3.0], vec![0.0, -1.0]];
        let r = euclidean_depth_check(&pts, &[1.0; 3], 0).unwrap();
        assert!((r.depth - 1.0).abs() < 1e-15);
        assert!(r.lhs >= r.lower_bound - 1e-12);
    }

    #[test]
    fn depth_check_rejects_duplicate_focal() {
        let pts = vec![vec![0.0, 0.0], vec![0.0, 0.0], vec![1.0, 0.0]];
        assert!(euclidean_depth_check(&pts, &[1.0; 3], 0).is_err());
        assert!(euclidean_depth_check(&pts[..1], &[1.0], 0).is_err());
    }
}
