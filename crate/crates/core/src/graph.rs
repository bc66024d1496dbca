//! Undirected graphs with vertex multiplicities and positive edge weights.
//!
//! Edge files are TSV with `u<TAB>v[<TAB>weight]` rows (weight defaults to
//! 1). Vertex files are TSV with `label<TAB>multiplicity` rows. Blank lines
//! and lines starting with `#` are skipped in both.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Vertex {
    pub label: String,
    pub multiplicity: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// An immutable, validated, undirected simple graph.
///
/// Invariants checked at construction: labels are unique, multiplicities are
/// finite and nonnegative with a positive total, edge weights are finite and
/// positive, and there are no self-loops or repeated unordered pairs.
#[derive(Debug, Clone)]
pub struct Graph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<(usize, f64)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Graph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut index = HashMap::with_capacity(vertices.len());
        let mut total = 0.0;
        for (i, v) in vertices.iter().enumerate() {
            if v.label.is_empty() {
                return Err(Error::InvalidGraph(format!("vertex {i} has an empty label")));
            }
            if !v.multiplicity.is_finite() || v.multiplicity < 0.0 {
                return Err(Error::InvalidGraph(format!(
                    "vertex {:?} has invalid multiplicity {}",
                    v.label, v.multiplicity
                )));
            }
            if index.insert(v.label.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex label {:?}", v.label)));
            }
            total += v.multiplicity;
        }
        if total <= 0.0 {
            return Err(Error::InvalidGraph("total multiplicity must be positive".into()));
        }

        let n = vertices.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for e in &edges {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) references a vertex outside 0..{n}",
                    e.u, e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("self-loop at {:?}", vertices[e.u].label)));
            }
            if !e.weight.is_finite() || e.weight <= 0.0 {
                return Err(Error::InvalidGraph(format!(
                    "edge {:?}-{:?} has nonpositive or non-finite weight {}",
                    vertices[e.u].label, vertices[e.v].label, e.weight
                )));
            }
            if !seen.insert((e.u.min(e.v), e.u.max(e.v))) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {:?}-{:?}",
                    vertices[e.u].label, vertices[e.v].label
                )));
            }
            adjacency[e.u].push((e.v, e.weight));
            adjacency[e.v].push((e.u, e.weight));
        }

        Ok(Graph {
            vertices,
            edges,
            index,
            adjacency,
        })
    }

    /// Builds a graph from labels and `(u, v, weight)` triples, with every
    /// multiplicity set to 1.
    pub fn from_edges<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        let vertices = labels
            .into_iter()
            .map(|l| Vertex {
                label: l.into(),
                multiplicity: 1.0,
            })
            .collect();
        let edges = edges.into_iter().map(|(u, v, weight)| Edge { u, v, weight }).collect();
        Graph::new(vertices, edges)
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn label(&self, i: usize) -> &str {
        &self.vertices[i].label
    }

    pub fn labels(&self) -> Vec<&str> {
        self.vertices.iter().map(|v| v.label.as_str()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn multiplicities(&self) -> Vec<f64> {
        self.vertices.iter().map(|v| v.multiplicity).collect()
    }

    /// Neighbors of `i` with the connecting edge weight.
    pub fn neighbors(&self, i: usize) -> &[(usize, f64)] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    /// Same structure with replaced multiplicities.
    pub fn with_multiplicities(&self, eta: &[f64]) -> Result<Graph> {
        if eta.len() != self.n() {
            return Err(Error::invalid(format!(
                "expected {} multiplicities, got {}",
                self.n(),
                eta.len()
            )));
        }
        let vertices = self
            .vertices
            .iter()
            .zip(eta)
            .map(|(v, &m)| Vertex {
                label: v.label.clone(),
                multiplicity: m,
            })
            .collect();
        Graph::new(vertices, self.edges.clone())
    }

    /// Subgraph induced by `keep`, with vertices renumbered in the order given.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut remap = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| remap[e.u] != usize::MAX && remap[e.v] != usize::MAX)
            .map(|e| Edge {
                u: remap[e.u],
                v: remap[e.v],
                weight: e.weight,
            })
            .collect();
        Graph::new(vertices, edges)
    }

    /// Edge list as TSV, one `u<TAB>v<TAB>weight` row per edge. Weights use the
    /// shortest round-tripping decimal form, so parsing reproduces them exactly.
    pub fn to_edge_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let _ = writeln!(out, "{}\t{}\t{}", self.label(e.u), self.label(e.v), e.weight);
        }
        out
    }

    pub fn to_vertex_tsv(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "{}\t{}", v.label, v.multiplicity);
        }
        out
    }
}

/// Partition of the vertices into maximal connected subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    /// Components ordered by their smallest vertex index; members ascending.
    pub components: Vec<Vec<usize>>,
}

impl ConnectivityReport {
    pub fn largest(&self) -> &[usize] {
        // first of the largest, so ties go to the component with the lowest vertex
        let mut best = &self.components[0];
        for c in &self.components[1..] {
            if c.len() > best.len() {
                best = c;
            }
        }
        best
    }
}

pub fn connectivity(g: &Graph) -> ConnectivityReport {
    let n = g.n();
    let mut component = vec![usize::MAX; n];
    let mut components = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        component[start] = id;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &(v, _) in g.neighbors(u) {
                if component[v] == usize::MAX {
                    component[v] = id;
                    members.push(v);
                    stack.push(v);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    ConnectivityReport {
        connected: components.len() == 1,
        components,
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

fn parse_number(field: &str, line: usize, what: &str) -> Result<f64> {
    let value: f64 = field.trim().parse().map_err(|_| Error::Parse {
        line,
        message: format!("cannot parse {what} {field:?}"),
    })?;
    if !value.is_finite() {
        return Err(Error::Parse {
            line,
            message: format!("{what} must be finite, got {field:?}"),
        });
    }
    Ok(value)
}

fn parse_label(field: &str, line: usize) -> Result<String> {
    if field.is_empty() {
        return Err(Error::Parse {
            line,
            message: "empty vertex label".into(),
        });
    }
    Ok(field.to_string())
}

/// Parses an edge TSV and an optional vertex TSV into a [`Graph`].
///
/// Without a vertex file, vertices appear in first-appearance order with
/// multiplicity 1. With one, the vertex file fixes the order and every edge
/// endpoint must be listed there. Errors carry the 1-based line number of the
/// offending row (of the file they came from).
pub fn parse_graph(edge_text: &str, vertex_text: Option<&str>) -> Result<Graph> {
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let fixed_vertices = vertex_text.is_some();

    if let Some(text) = vertex_text {
        for (line, row) in data_lines(text) {
            let fields: Vec<&str> = row.split('\t').collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected 2 tab-separated fields in vertex file, found {}", fields.len()),
                });
            }
            let label = parse_label(fields[0], line)?;
            let multiplicity = parse_number(fields[1], line, "multiplicity")?;
            if multiplicity < 0.0 {
                return Err(Error::Parse {
                    line,
                    message: format!("negative multiplicity {multiplicity} for {label:?}"),
                });
            }
            if index.contains_key(&label) {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate vertex {label:?}"),
                });
            }
            index.insert(label.clone(), vertices.len());
            vertices.push(Vertex { label, multiplicity });
        }
    }

    let mut edges = Vec::new();
    let mut pairs: HashMap<(usize, usize), usize> = HashMap::new();
    for (line, row) in data_lines(edge_text) {
        let fields: Vec<&str> = row.split('\t').collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!(
                    "expected 2 or 3 tab-separated fields in edge file, found {}",
                    fields.len()
                ),
            });
        }
        let mut endpoint = |field: &str| -> Result<usize> {
            let label = parse_label(field, line)?;
            match index.get(&label) {
                Some(&i) => Ok(i),
                None if fixed_vertices => Err(Error::Parse {
                    line,
                    message: format!("vertex {label:?} is not in the vertex file"),
                }),
                None => {
                    let i = vertices.len();
                    index.insert(label.clone(), i);
                    vertices.push(Vertex {
                        label,
                        multiplicity: 1.0,
                    });
                    Ok(i)
                }
            }
        };
        let u = endpoint(fields[0])?;
        let v = endpoint(fields[1])?;
        let weight = match fields.get(2) {
            Some(f) => parse_number(f, line, "weight")?,
            None => 1.0,
        };
        if weight <= 0.0 {
            return Err(Error::Parse {
                line,
                message: format!("nonpositive weight {weight}"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at {:?}", fields[0]),
            });
        }
        if let Some(first) = pairs.insert((u.min(v), u.max(v)), line) {
            return Err(Error::Parse {
                line,
                message: format!(
                    "duplicate edge {:?}-{:?} (first given on line {first})",
                    fields[0], fields[1]
                ),
            });
        }
        edges.push(Edge { u, v, weight });
    }

    Graph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err_line(r: Result<Graph>) -> usize {
        match r {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn path_graph_with_defaults() {
        let g = parse_graph("A\tB\t1\nB\tC\t1", None).unwrap();
        assert_eq!(g.labels(), vec!["A", "B", "C"]);
        assert_eq!(g.multiplicities(), vec![1.0; 3]);
        assert_eq!(g.edges().len(), 2);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn omitted_weight_is_one() {
        let g = parse_graph("A\tB\n", None).unwrap();
        assert_eq!(g.edges()[0].weight, 1.0);
    }

    #[test]
    fn vertex_file_sets_order_and_multiplicity() {
        let g = parse_graph("A\tB\t0.5", Some("A\t2\nB\t1")).unwrap();
        assert_eq!(g.multiplicities(), vec![2.0, 1.0]);
        assert_eq!(g.edges()[0].weight, 0.5);

        let g = parse_graph("A\tB", Some("B\t1\nA\t3")).unwrap();
        assert_eq!(g.labels(), vec!["B", "A"]);
    }

    #[test]
    fn comments_and_blank_lines_skipped() {
        let g = parse_graph("# header\n\nA\tB\t2\r\n# x\nB\tC\n", None).unwrap();
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse_err_line(parse_graph("A\tB\t0", None)), 1);
        assert_eq!(parse_err_line(parse_graph("A\tB\t1\nB\tC\t-2", None)), 2);
        assert_eq!(parse_err_line(parse_graph("A\tB\tNaN", None)), 1);
        assert_eq!(parse_err_line(parse_graph("A\tB\tinf", None)), 1);
        assert_eq!(parse_err_line(parse_graph("A\tA\t1", None)), 1);
        assert_eq!(parse_err_line(parse_graph("A\tB\t1\nB\tA\t1", None)), 2);
        assert_eq!(parse_err_line(parse_graph("A B 1", None)), 1);
        assert_eq!(parse_err_line(parse_graph("A\tB\tx", None)), 1);
        assert_eq!(parse_err_line(parse_graph("A\tC", Some("A\t1\nB\t1"))), 1);
        assert_eq!(parse_err_line(parse_graph("A\tB", Some("A\t1\nB\t-1"))), 2);
        assert_eq!(parse_err_line(parse_graph("A\tB", Some("A\t1\nA\t1"))), 2);
        assert!(parse_graph("", None).is_err());
        assert!(parse_graph("A\tB", Some("A\t0\nB\t0")).is_err());
    }

    #[test]
    fn constructor_rejects_invalid() {
        assert!(Graph::from_edges(["A", "B"], [(0, 1, 0.0)]).is_err());
        assert!(Graph::from_edges(["A", "A"], [(0, 1, 1.0)]).is_err());
        assert!(Graph::from_edges(["A", "B"], [(0, 1, 1.0), (1, 0, 1.0)]).is_err());
        assert!(Graph::from_edges(["A", "B"], [(0, 2, 1.0)]).is_err());
    }

    #[test]
    fn connectivity_examples() {
        let path = parse_graph("A\tB\nB\tC", None).unwrap();
        let r = connectivity(&path);
        assert!(r.connected);
        assert_eq!(r.components, vec![vec![0, 1, 2]]);

        let split = parse_graph("A\tB\nC\tD", None).unwrap();
        let r = connectivity(&split);
        assert!(!r.connected);
        assert_eq!(r.components, vec![vec![0, 1], vec![2, 3]]);

        let single = parse_graph("", Some("A\t1")).unwrap();
        assert!(connectivity(&single).connected);
    }

    #[test]
    fn isolated_vertex_from_vertex_file_disconnects() {
        let g = parse_graph("A\tB", Some("A\t1\nB\t1\nC\t1")).unwrap();
        let r = connectivity(&g);
        assert!(!r.connected);
        assert_eq!(r.largest(), &[0, 1]);
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = parse_graph("A\tB\t2\nB\tC\t3\nC\tD\t4", None).unwrap();
        let sub = g.induced_subgraph(&[1, 2]).unwrap();
        assert_eq!(sub.labels(), vec!["B", "C"]);
        assert_eq!(
            sub.edges(),
            &[Edge {
                u: 0,
                v: 1,
                weight: 3.0
            }]
        );
    }
}
