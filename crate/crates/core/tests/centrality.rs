mod common;

use common::{config, load_fixture, max_abs_diff, random_graph, seeded_instance, GraphSpec};
use l1cent::{
    betweenness_centrality, closeness_centrality, euclidean_depth_check, geodesic_matrix, graph_median, l1_centrality,
    l1_centrality_oracle, unit_disk_sample, ApspAlgorithm, Graph,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn centrality_of(g: &Graph) -> Vec<f64> {
    let d = geodesic_matrix(g, ApspAlgorithm::Auto).unwrap();
    l1_centrality(&d, &g.multiplicities()).unwrap().values
}

/// Betweenness by enumerating every simple path. Paths within `1e-9`
/// relative of the shortest count as shortest.
fn brute_betweenness(g: &Graph) -> Vec<f64> {
    fn walk(g: &Graph, at: usize, to: usize, len: f64, path: &mut Vec<usize>, out: &mut Vec<(f64, Vec<usize>)>) {
        if at == to {
            out.push((len, path.clone()));
            return;
        }
        for &(next, w) in g.neighbors(at) {
            if !path.contains(&next) {
                path.push(next);
                walk(g, next, to, len + w, path, out);
                path.pop();
            }
        }
    }
    let n = g.n();
    let mut b = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            let mut paths = Vec::new();
            walk(g, s, t, 0.0, &mut vec![s], &mut paths);
            let best = paths.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
            let shortest: Vec<&Vec<usize>> = paths
                .iter()
                .filter(|p| p.0 <= best * (1.0 + 1e-9))
                .map(|p| &p.1)
                .collect();
            for (v, bv) in b.iter_mut().enumerate() {
                if v == s || v == t {
                    continue;
                }
                let through = shortest.iter().filter(|p| p.contains(&v)).count();
                *bv += through as f64 / shortest.len() as f64;
            }
        }
    }
    b
}

#[test]
fn fixtures() {
    let c = centrality_of(&load_fixture("path3.tsv", None));
    assert!(max_abs_diff(&c, &[2.0 / 3.0, 1.0, 2.0 / 3.0]) <= 1e-12);
    let c = centrality_of(&load_fixture("star.tsv", None));
    assert!(max_abs_diff(&c, &[1.0, 0.5, 0.5, 0.5]) <= 1e-12);
}

#[test]
fn pendant_limit_approached_monotonically() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let n = rng.gen_range(3..=8);
        let core = random_graph(&GraphSpec::standard(n - 1), &mut rng);
        let anchor = rng.gen_range(0..n - 1);
        let base = rng.gen_range(0.1..10.0);
        let eta: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..5.0)).collect();
        let total: f64 = eta.iter().sum();
        let limit = (2.0 * eta[n - 1] / total).min(1.0);

        let mut gaps = Vec::new();
        for t in [1e2, 1e4, 1e6] {
            let mut labels = core.labels().iter().map(|s| s.to_string()).collect::<Vec<_>>();
            labels.push("pendant".into());
            let mut triples: Vec<(usize, usize, f64)> = core.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
            triples.push((anchor, n - 1, base * t));
            let g = Graph::from_edges(labels, triples)
                .unwrap()
                .with_multiplicities(&eta)
                .unwrap();
            gaps.push((centrality_of(&g)[n - 1] - limit).abs());
        }
        assert!(gaps[1] <= gaps[0] + 1e-12 && gaps[2] <= gaps[1] + 1e-12, "{gaps:?}");
        assert!(gaps[2] <= 1e-3, "{gaps:?}");
    }
}

#[test]
fn depth_at_disk_center() {
    let pts = unit_disk_sample(2000, 0);
    let eta = vec![1.0; pts.len()];
    let r = euclidean_depth_check(&pts, &eta, 0).unwrap();
    assert!((r.lhs - 1.0).abs() <= 0.1, "{r:?}");
    assert!((r.depth - 1.0).abs() <= 0.1, "{r:?}");
    assert_eq!(r, euclidean_depth_check(&unit_disk_sample(2000, 0), &eta, 0).unwrap());
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn closed_form_matches_bisection_oracle(seed in any::<u64>()) {
        let (_, d, eta) = seeded_instance(seed, 2, 8);
        let c = l1_centrality(&d, &eta).unwrap();
        for k in 0..d.n() {
            let o = l1_centrality_oracle(&d, &eta, k).unwrap();
            prop_assert!((c.values[k] - o).abs() <= 1e-8, "vertex {}: {} vs {}", k, c.values[k], o);
        }
    }

    #[test]
    fn scale_invariance(seed in any::<u64>(), a in 0.01f64..100.0, b in 0.01f64..100.0) {
        let (_, d, eta) = seeded_instance(seed, 2, 8);
        let c = l1_centrality(&d, &eta).unwrap();
        let scaled_eta: Vec<f64> = eta.iter().map(|m| m * a).collect();
        let c2 = l1_centrality(&d.scaled(b), &scaled_eta).unwrap();
        prop_assert!(max_abs_diff(&c.values, &c2.values) <= 1e-12);
    }

    #[test]
    fn unit_score_iff_median(seed in any::<u64>()) {
        let (_, d, eta) = seeded_instance(seed, 1, 8);
        let c = l1_centrality(&d, &eta).unwrap();
        let med = graph_median(&d, &eta).unwrap();
        prop_assert!(!med.indices.is_empty());
        for k in 0..d.n() {
            prop_assert_eq!(c.values[k] == 1.0, med.contains(k), "vertex {}", k);
        }
    }

    #[test]
    fn lower_bound_and_range(seed in any::<u64>()) {
        let (_, d, eta) = seeded_instance(seed, 1, 8);
        let total: f64 = eta.iter().sum();
        let c = l1_centrality(&d, &eta).unwrap();
        for (k, &v) in c.values.iter().enumerate() {
            prop_assert!((0.0..=1.0).contains(&v));
            prop_assert!(v >= (2.0 * eta[k] / total).min(1.0) - 1e-12, "vertex {}: {}", k, v);
        }
    }

    #[test]
    fn betweenness_matches_path_enumeration(seed in any::<u64>(), n in 2usize..=7, unit in any::<bool>()) {
        // unit weights make many geodesics tie
        let spec = if unit {
            GraphSpec { weights: (1.0, 1.0), density: 0.4, ..GraphSpec::unweighted_vertices(n) }
        } else {
            GraphSpec::unweighted_vertices(n)
        };
        let g = random_graph(&spec, &mut ChaCha8Rng::seed_from_u64(seed));
        let d = geodesic_matrix(&g, ApspAlgorithm::Auto).unwrap();
        let b = betweenness_centrality(&d, &g).unwrap();
        prop_assert!(max_abs_diff(&b.values, &brute_betweenness(&g)) <= 1e-9);
    }

    #[test]
    fn closeness_is_reciprocal_distance_sum(seed in any::<u64>()) {
        let (_, d, _) = seeded_instance(seed, 2, 12);
        let c = closeness_centrality(&d).unwrap();
        for i in 0..d.n() {
            let s: f64 = (0..d.n()).map(|j| d.get(i, j)).sum();
            prop_assert!((c.values[i] * s - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn euclidean_lhs_above_depth_bound(seed in any::<u64>(), m in 2usize..40, dim in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts: Vec<Vec<f64>> = (0..m).map(|_| (0..dim).map(|_| rng.gen_range(-3.0..3.0)).collect()).collect();
        let eta: Vec<f64> = (0..m).map(|_| rng.gen_range(0.0..2.0)).collect();
        prop_assume!(eta.iter().sum::<f64>() > 0.0);
        let focal = rng.gen_range(0..m);
        let r = euclidean_depth_check(&pts, &eta, focal).unwrap();
        prop_assert!(r.lhs >= r.lower_bound - 1e-12, "{:?}", r);
    }
}
