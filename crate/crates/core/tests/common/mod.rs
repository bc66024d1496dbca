//! Shared helpers for the integration tests: fixtures and seeded random graphs.
#![allow(dead_code)]

use std::path::PathBuf;

use l1cent::{geodesic_matrix, parse_graph, ApspAlgorithm, DistanceMatrix, Graph};
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn load_fixture(edges: &str, vertices: Option<&str>) -> Graph {
    let e = std::fs::read_to_string(fixture(edges)).unwrap();
    let v = vertices.map(|v| std::fs::read_to_string(fixture(v)).unwrap());
    parse_graph(&e, v.as_deref()).unwrap()
}

/// Fixed-seed proptest configuration without failure files.
pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x11ce),
        failure_persistence: None,
        ..Config::default()
    }
}

#[derive(Debug, Clone)]
pub struct GraphSpec {
    pub n: usize,
    /// Probability of each non-tree edge.
    pub density: f64,
    pub weights: (f64, f64),
    /// Multiplicity range; `None` keeps every multiplicity at 1.
    pub multiplicities: Option<(f64, f64)>,
}

impl GraphSpec {
    /// The random family used by the centrality checks: weights in
    /// `[0.1, 10]`, multiplicities in `[0, 5]`.
    pub fn standard(n: usize) -> Self {
        GraphSpec {
            n,
            density: 0.3,
            weights: (0.1, 10.0),
            multiplicities: Some((0.0, 5.0)),
        }
    }

    pub fn unweighted_vertices(n: usize) -> Self {
        GraphSpec {
            multiplicities: None,
            ..GraphSpec::standard(n)
        }
    }
}

/// Connected graph: a random recursive tree plus independent extra edges.
/// Multiplicities always have a positive total.
pub fn random_graph(spec: &GraphSpec, rng: &mut impl Rng) -> Graph {
    let n = spec.n;
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut present = vec![vec![false; n]; n];
    let mut triples = Vec::new();
    let (lo, hi) = spec.weights;
    for j in 1..n {
        let i = rng.gen_range(0..j);
        present[i][j] = true;
        triples.push((i, j, rng.gen_range(lo..=hi)));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !present[i][j] && rng.gen_bool(spec.density) {
                triples.push((i, j, rng.gen_range(lo..=hi)));
            }
        }
    }
    let g = Graph::from_edges(labels, triples).unwrap();
    match spec.multiplicities {
        None => g,
        Some((a, b)) => {
            let mut eta: Vec<f64> = (0..n).map(|_| rng.gen_range(a..=b)).collect();
            if eta.iter().sum::<f64>() <= 0.0 {
                eta[0] = 1.0;
            }
            g.with_multiplicities(&eta).unwrap()
        }
    }
}

pub fn seeded_graph(seed: u64, spec: &GraphSpec) -> Graph {
    random_graph(spec, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Graph, geodesics and multiplicities from one seed; `n` is drawn from
/// `min_n..=max_n`.
pub fn seeded_instance(seed: u64, min_n: usize, max_n: usize) -> (Graph, DistanceMatrix, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(min_n..=max_n);
    let g = random_graph(&GraphSpec::standard(n), &mut rng);
    let d = geodesic_matrix(&g, ApspAlgorithm::Auto).unwrap();
    let eta = g.multiplicities();
    (g, d, eta)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// The graph doubled and glued at `focal`: copies of the other vertices are
/// appended after the originals, and the focal multiplicity doubles.
pub fn mirror(g: &Graph, focal: usize) -> Graph {
    let n = g.n();
    let copy = |v: usize| -> usize {
        if v == focal {
            focal
        } else if v < focal {
            n + v
        } else {
            n + v - 1
        }
    };
    let mut labels: Vec<String> = g.labels().iter().map(|s| s.to_string()).collect();
    let mut eta = g.multiplicities();
    eta[focal] *= 2.0;
    for v in (0..n).filter(|&v| v != focal) {
        labels.push(format!("{}'", g.label(v)));
        eta.push(g.vertices()[v].multiplicity);
    }
    let mut triples: Vec<(usize, usize, f64)> = g.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
    triples.extend(g.edges().iter().map(|e| (copy(e.u), copy(e.v), e.weight)));
    Graph::from_edges(labels, triples)
        .unwrap()
        .with_multiplicities(&eta)
        .unwrap()
}

/// Exact least-squares monotone fit by trying every contiguous partition of
/// the tie groups. Inputs are integer multiples of 1/8 (`eighths`), so block
/// sums are exact and objectives compare as integer fractions.
pub fn exhaustive_isotonic(geodesic: &[f64], eighths: &[i64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..geodesic.len()).collect();
    order.sort_by(|&a, &b| geodesic[a].total_cmp(&geodesic[b]).then(a.cmp(&b)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &p in &order {
        match groups.last_mut() {
            Some(g) if geodesic[g[0]] == geodesic[p] => g.push(p),
            _ => groups.push(vec![p]),
        }
    }

    // maximize sum_b S_b^2 / c_b over monotone partitions
    let mut best: Option<((i128, i128), Vec<(i128, i128, Vec<usize>)>)> = None;
    for mask in 0u32..(1 << (groups.len() - 1)) {
        let mut blocks: Vec<(i128, i128, Vec<usize>)> = Vec::new();
        let mut current = (0i128, 0i128, Vec::new());
        for (gi, g) in groups.iter().enumerate() {
            for &p in g {
                current.0 += eighths[p] as i128;
                current.1 += 1;
                current.2.push(p);
            }
            if gi + 1 == groups.len() || mask & (1 << gi) != 0 {
                blocks.push(std::mem::replace(&mut current, (0, 0, Vec::new())));
            }
        }
        let monotone = blocks.windows(2).all(|w| w[0].0 * w[1].1 <= w[1].0 * w[0].1);
        if !monotone {
            continue;
        }
        let objective = blocks
            .iter()
            .fold((0i128, 1i128), |(num, den), (s, c, _)| (num * c + s * s * den, den * c));
        let better = match &best {
            None => true,
            Some(((bn, bd), _)) => objective.0 * bd > bn * objective.1,
        };
        if better {
            best = Some((objective, blocks));
        }
    }

    let mut fitted = vec![0.0; geodesic.len()];
    for (s, c, members) in best.unwrap().1 {
        let mean = (s as f64 / 8.0) / c as f64;
        for p in members {
            fitted[p] = mean;
        }
    }
    fitted
}

/// Mean absolute difference over all ordered pairs, normalized by `2 m^2 mean`.
pub fn pairwise_gini(x: &[f64]) -> f64 {
    let m = x.len() as f64;
    let mean = x.iter().sum::<f64>() / m;
    let mut acc = 0.0;
    for a in x {
        for b in x {
            acc += (a - b).abs();
        }
    }
    acc / (2.0 * m * m * mean)
}
