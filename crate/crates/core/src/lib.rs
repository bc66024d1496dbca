//! L1 centrality for undirected, connected graphs with vertex multiplicities
//! and positive edge weights.
//!
//! Every measure in this crate is computed from a dense geodesic
//! [`DistanceMatrix`], built once per graph:
//!
//! ```
//! use l1cent::{geodesic_matrix, l1_centrality, parse_graph, ApspAlgorithm};
//!
//! let g = parse_graph("A\tB\t1\nB\tC\t1\n", None).unwrap();
//! let d = geodesic_matrix(&g, ApspAlgorithm::Auto).unwrap();
//! let c = l1_centrality(&d, &g.multiplicities()).unwrap();
//! assert_eq!(c.values[1], 1.0);
//! ```
//!
//! Modules:
//!
//! - [`graph`]: graph model, TSV parsing and connectivity.
//! - [`geodesic`]: all-pairs shortest path lengths.
//! - [`centrality`]: L1 centrality, graph medians, classical measures,
//!   correlations and the Euclidean depth check.
//! - [`local`]: symmetrization, neighborhoods, local L1 centrality, local
//!   medians, multiscale edges and centrality profiles.
//! - [`heterogeneity`]: Lorenz curve and Gini coefficient.
//! - [`layout`]: target-plot layout (radially constrained nonmetric MDS).
//! - [`cli`] and [`datasets`]: command-line surface and dataset loaders.

pub mod centrality;
pub mod cli;
pub mod datasets;
pub mod error;
pub mod geodesic;
pub mod graph;
pub mod heterogeneity;
pub mod layout;
pub mod local;

pub use centrality::{
    betweenness_centrality, closeness_centrality, correlation, degree_centrality, euclidean_depth_check, graph_median,
    l1_centrality, l1_centrality_oracle, uniform_margin, unit_disk_sample, CentralityVector, CorrelationKind,
    DepthCheck, Measure, MedianSet,
};
pub use error::{Error, Result};
pub use geodesic::{geodesic_matrix, ApspAlgorithm, DistanceMatrix};
pub use graph::{connectivity, parse_graph, ConnectivityReport, Edge, Graph, Vertex};
pub use heterogeneity::{gini, lorenz, LorenzCurve};
pub use layout::{optimize_layout, LayoutConfiguration, LayoutOptions};
pub use local::{
    centrality_profile, local_l1_centrality, local_median, multiscale_edges, neighborhood, symmetrized_centrality,
    CentralityProfile, MultiscaleEdges, NeighborhoodSet,
};
