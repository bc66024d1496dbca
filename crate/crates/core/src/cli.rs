//! Command-line front end for the `l1cent` binary.
//!
//! Every subcommand loads a graph, calls the library and serializes the
//! result. Tables are TSV with a header row; numbers carry six decimals
//! unless `--precision full` is given.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::centrality::{
    betweenness_centrality, closeness_centrality, correlation, degree_centrality, euclidean_depth_check, graph_median,
    l1_centrality, uniform_margin, unit_disk_sample, CorrelationKind,
};
use crate::datasets::{load_dataset, Dataset};
use crate::error::{Error, Result};
use crate::geodesic::{geodesic_matrix, ApspAlgorithm, DistanceMatrix};
use crate::graph::{connectivity, parse_graph, Graph};
use crate::heterogeneity::lorenz;
use crate::layout::{optimize_layout, write_target_plot, LayoutOptions};
use crate::local::{centrality_profile, default_alpha_grid, local_l1_centrality, multiscale_edges, neighborhood};

const TOLERANCES: &str = "\
Tolerances:
  graph median            objective ties within 1e-9 relative
  betweenness             path counted as shortest within 1e-9 relative of the geodesic
  neighborhood size       ceil(alpha n), with alpha n rounded down by up to 1e-9 relative
  bisection oracle        interval width 1e-12
  target-plot descent     stop when mag(g) < 1e-4 or after 500 iterations;
                          step 0.2, multiplied by 0.95 per iteration
  quartile circles        linearly interpolated quantiles of the L1 centralities

Exit status: 0 on success, 1 on input errors, 2 on numerical failures.";

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(
    name = "l1cent",
    version,
    about = "L1 centrality, local centrality and target plots for weighted graphs",
    after_help = TOLERANCES
)]
pub struct RunSpec {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads; outputs do not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Number formatting in tables.
    #[arg(long, global = true, value_enum, default_value_t = Precision::Fixed)]
    pub precision: Precision,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Precision {
    /// Six decimal places.
    Fixed,
    /// Shortest representation that round-trips.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComponentChoice {
    /// Require a connected graph.
    Whole,
    /// Keep the largest connected component (ties go to the one holding the
    /// earliest vertex).
    Largest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmChoice {
    Auto,
    PerSource,
    AllPairs,
}

impl From<AlgorithmChoice> for ApspAlgorithm {
    fn from(a: AlgorithmChoice) -> Self {
        match a {
            AlgorithmChoice::Auto => ApspAlgorithm::Auto,
            AlgorithmChoice::PerSource => ApspAlgorithm::PerSource,
            AlgorithmChoice::AllPairs => ApspAlgorithm::AllPairs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DatasetChoice {
    Mcu,
    Assembly,
}

impl From<DatasetChoice> for Dataset {
    fn from(d: DatasetChoice) -> Self {
        match d {
            DatasetChoice::Mcu => Dataset::Mcu,
            DatasetChoice::Assembly => Dataset::Assembly,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureChoice {
    L1,
    Degree,
    Closeness,
    Betweenness,
}

impl MeasureChoice {
    const ALL: [MeasureChoice; 4] = [
        MeasureChoice::L1,
        MeasureChoice::Degree,
        MeasureChoice::Closeness,
        MeasureChoice::Betweenness,
    ];

    fn name(self) -> &'static str {
        match self {
            MeasureChoice::L1 => "l1",
            MeasureChoice::Degree => "degree",
            MeasureChoice::Closeness => "closeness",
            MeasureChoice::Betweenness => "betweenness",
        }
    }
}

/// Where the graph comes from and how it is prepared.
#[derive(Debug, Clone, Args)]
pub struct GraphInput {
    /// Edge list TSV: `u<TAB>v<TAB>weight` per line.
    #[arg(short = 'g', long, conflicts_with = "dataset")]
    pub graph: Option<PathBuf>,

    /// Vertex TSV: `label<TAB>multiplicity` per line (default multiplicity 1).
    #[arg(short = 'v', long, requires = "graph")]
    pub vertices: Option<PathBuf>,

    /// Load an exported published dataset instead of `-g`.
    #[arg(long, value_enum)]
    pub dataset: Option<DatasetChoice>,

    /// Directory holding dataset exports [default: $L1CENT_DATA_DIR or ./data].
    #[arg(long)]
    pub data_dir: Option<PathBuf>,

    /// Replace every multiplicity by 1.
    #[arg(long)]
    pub unit_multiplicities: bool,

    #[arg(long, value_enum, default_value_t = ComponentChoice::Whole)]
    pub component: ComponentChoice,

    /// All-pairs shortest path method.
    #[arg(long, value_enum, default_value_t = AlgorithmChoice::Auto)]
    pub algorithm: AlgorithmChoice,

    /// Also write the geodesic distance matrix as TSV.
    #[arg(long, value_name = "PATH")]
    pub dump_dist: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArg {
    /// Write the result here instead of stdout.
    #[arg(short = 'o', long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Global L1 centrality with degree, closeness and betweenness.
    Centrality {
        #[command(flatten)]
        input: GraphInput,
        /// Columns to print.
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = MeasureChoice::ALL)]
        measures: Vec<MeasureChoice>,
        /// Replace each column by its ranks divided by n.
        #[arg(long)]
        uniform_margin: bool,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Graph median(s) and the minimal weighted distance sum.
    Median {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Neighborhood of a vertex at locality level alpha.
    Neighborhood {
        #[command(flatten)]
        input: GraphInput,
        /// Label of the focal vertex.
        #[arg(long)]
        focal: String,
        #[arg(long, value_parser = parse_alpha)]
        alpha: f64,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Local L1 centrality at one or more locality levels.
    Local {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated levels in (0, 1].
        #[arg(long, value_parser = parse_alpha, value_delimiter = ',', required = true)]
        alpha: Vec<f64>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Multiscale edge representation as a Graphviz digraph.
    Edges {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_parser = parse_alpha)]
        alpha: f64,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Centrality profiles over a grid of locality levels.
    Profile {
        #[command(flatten)]
        input: GraphInput,
        /// `auto` for {5/n, 10/n, ...}, or a comma-separated increasing list.
        #[arg(long, default_value = "auto")]
        grid: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Lorenz curve knots and Gini coefficient.
    Lorenz {
        #[command(flatten)]
        input: GraphInput,
        /// Read values (one per line) instead of computing them from a graph.
        #[arg(long, value_name = "PATH", conflicts_with_all = ["graph", "dataset"])]
        values: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MeasureChoice::L1)]
        measure: MeasureChoice,
        /// Use local L1 centrality at this level (only with `--measure l1`).
        #[arg(long, value_parser = parse_alpha)]
        alpha: Option<f64>,
        /// Also draw the curve as SVG.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Target plot: a polar layout with radius -ln C.
    TargetPlot {
        #[command(flatten)]
        input: GraphInput,
        /// SVG output path.
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        /// Coordinates TSV output path.
        #[arg(long, value_name = "PATH")]
        coords: Option<PathBuf>,
        /// Extra runs from random angles; the lowest stress wins.
        #[arg(long, default_value_t = 0)]
        restarts: usize,
        /// Accept non-uniform multiplicities.
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// All four measures, raw and uniform-margin, with correlations to L1.
    Compare {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Euclidean analogue of L1 centrality at a focal point.
    DepthCheck {
        /// Points TSV, one point per line; default: the origin plus uniform
        /// samples from the unit disk.
        #[arg(long, value_name = "PATH")]
        points: Option<PathBuf>,
        /// Focal row of `--points`.
        #[arg(long, default_value_t = 0, requires = "points")]
        focal: usize,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArg,
    },
}

fn parse_alpha(s: &str) -> std::result::Result<f64, String> {
    let a: f64 = s.trim().parse().map_err(|_| format!("not a number: {s:?}"))?;
    if a > 0.0 && a <= 1.0 {
        Ok(a)
    } else {
        Err(format!("alpha must lie in (0, 1], got {a}"))
    }
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit status. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let spec = match RunSpec::try_parse_from(args) {
        Ok(spec) => spec,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&spec) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            eprintln!("l1cent: {e}");
            e.exit_code()
        }
    }
}

/// Runs `spec`, writing any requested files, and returns what belongs on stdout.
pub fn execute(spec: &RunSpec) -> Result<String> {
    match spec.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
            pool.install(|| dispatch(spec))
        }
        None => dispatch(spec),
    }
}

struct Fmt(Precision);

impl Fmt {
    fn num(&self, x: f64) -> String {
        match self.0 {
            Precision::Fixed => format!("{x:.6}"),
            Precision::Full => format!("{x}"),
        }
    }
}

struct Loaded {
    graph: Graph,
    dist: DistanceMatrix,
    eta: Vec<f64>,
}

impl Loaded {
    fn labels(&self) -> Vec<&str> {
        self.graph.labels()
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn in_file(path: &Path) -> impl FnOnce(Error) -> Error + '_ {
    move |e| match e {
        Error::Io { .. } => e,
        other => Error::InFile {
            path: path.to_path_buf(),
            source: Box::new(other),
        },
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    match (&input.graph, input.dataset) {
        (Some(path), _) => {
            let edges = read_file(path)?;
            let vertices = match &input.vertices {
                Some(vp) => {
                    let text = read_file(vp)?;
                    // vertex-file problems are reported against that file
                    parse_graph("", Some(&text)).map_err(in_file(vp))?;
                    Some(text)
                }
                None => None,
            };
            parse_graph(&edges, vertices.as_deref()).map_err(in_file(path))
        }
        (None, Some(ds)) => {
            let dir = input
                .data_dir
                .clone()
                .or_else(|| std::env::var_os("L1CENT_DATA_DIR").map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("data"));
            load_dataset(ds.into(), &dir)
        }
        (None, None) => Err(Error::invalid(
            "no input graph: pass -g <edges.tsv> or --dataset <name>",
        )),
    }
}

fn load(input: &GraphInput) -> Result<Loaded> {
    let mut graph = load_graph(input)?;
    if input.unit_multiplicities {
        graph = graph.with_multiplicities(&vec![1.0; graph.n()])?;
    }
    if input.component == ComponentChoice::Largest {
        let report = connectivity(&graph);
        if !report.connected {
            graph = graph.induced_subgraph(report.largest())?;
        }
    }
    let dist = geodesic_matrix(&graph, input.algorithm.into())?;
    if let Some(path) = &input.dump_dist {
        write_file(path, &dist.to_tsv(&graph.labels()))?;
    }
    let eta = graph.multiplicities();
    Ok(Loaded { graph, dist, eta })
}

/// Sends `text` to `out.output` if given, otherwise returns it for stdout.
fn deliver(out: &OutputArg, text: String) -> Result<String> {
    match &out.output {
        Some(path) => {
            write_file(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn measure_values(l: &Loaded, m: MeasureChoice) -> Result<Vec<f64>> {
    Ok(match m {
        MeasureChoice::L1 => l1_centrality(&l.dist, &l.eta)?.values,
        MeasureChoice::Degree => degree_centrality(&l.graph).values,
        MeasureChoice::Closeness => closeness_centrality(&l.dist)?.values,
        MeasureChoice::Betweenness => betweenness_centrality(&l.dist, &l.graph)?.values,
    })
}

/// `label` column followed by one column per `(name, values)`.
fn table(f: &Fmt, labels: &[&str], columns: &[(String, Vec<f64>)]) -> String {
    let mut s = String::from("label");
    for (name, _) in columns {
        s.push('\t');
        s.push_str(name);
    }
    s.push('\n');
    for (i, label) in labels.iter().enumerate() {
        s.push_str(label);
        for (_, values) in columns {
            s.push('\t');
            s.push_str(&f.num(values[i]));
        }
        s.push('\n');
    }
    s
}

fn alpha_name(a: f64) -> String {
    format!("alpha={a}")
}

fn dispatch(spec: &RunSpec) -> Result<String> {
    let f = Fmt(spec.precision);
    match &spec.command {
        Command::Centrality {
            input,
            measures,
            uniform_margin: um,
            out,
        } => {
            let l = load(input)?;
            let mut columns = Vec::with_capacity(measures.len());
            for &m in measures {
                let mut values = measure_values(&l, m)?;
                if *um {
                    values = uniform_margin(&values);
                }
                columns.push((m.name().to_string(), values));
            }
            deliver(out, table(&f, &l.labels(), &columns))
        }

        Command::Median { input, out } => {
            let l = load(input)?;
            let med = graph_median(&l.dist, &l.eta)?;
            let mut s = String::from("label\tobjective\n");
            for &i in &med.indices {
                let _ = writeln!(s, "{}\t{}", l.graph.label(i), f.num(med.objective));
            }
            deliver(out, s)
        }

        Command::Neighborhood {
            input,
            focal,
            alpha,
            out,
        } => {
            let l = load(input)?;
            let k = l
                .graph
                .index_of(focal)
                .ok_or_else(|| Error::invalid(format!("unknown vertex {focal:?}")))?;
            let nb = neighborhood(&l.dist, &l.eta, k, *alpha)?;
            let mut s = String::from("label\tsymmetrized\tmember\n");
            for (i, label) in l.labels().iter().enumerate() {
                let member = nb.members.binary_search(&i).is_ok();
                let _ = writeln!(s, "{label}\t{}\t{}", f.num(nb.symmetrized_scores[i]), u8::from(member));
            }
            deliver(out, s)
        }

        Command::Local { input, alpha, out } => {
            let l = load(input)?;
            let mut columns = Vec::with_capacity(alpha.len());
            for &a in alpha {
                columns.push((alpha_name(a), local_l1_centrality(&l.dist, &l.eta, a)?.values));
            }
            deliver(out, table(&f, &l.labels(), &columns))
        }

        Command::Edges { input, alpha, out } => {
            let l = load(input)?;
            let edges = multiscale_edges(&l.dist, &l.eta, *alpha)?;
            deliver(out, edges.to_dot(&l.labels()))
        }

        Command::Profile { input, grid, out } => {
            let l = load(input)?;
            let alphas = if grid.trim() == "auto" {
                default_alpha_grid(l.graph.n())
            } else {
                grid.split(',')
                    .map(|t| parse_alpha(t).map_err(Error::InvalidArgument))
                    .collect::<Result<Vec<_>>>()?
            };
            let profile = centrality_profile(&l.dist, &l.eta, &alphas)?;
            let columns: Vec<(String, Vec<f64>)> = profile
                .alphas
                .iter()
                .enumerate()
                .map(|(a, &alpha)| (alpha_name(alpha), profile.values.iter().map(|row| row[a]).collect()))
                .collect();
            deliver(out, table(&f, &l.labels(), &columns))
        }

        Command::Lorenz {
            input,
            values,
            measure,
            alpha,
            svg,
            out,
        } => {
            let data = match values {
                Some(path) => read_values(path)?,
                None => {
                    let l = load(input)?;
                    match (alpha, measure) {
                        (Some(a), MeasureChoice::L1) => local_l1_centrality(&l.dist, &l.eta, *a)?.values,
                        (Some(_), _) => return Err(Error::invalid("--alpha applies only to --measure l1")),
                        (None, m) => measure_values(&l, *m)?,
                    }
                }
            };
            let curve = lorenz(&data)?;
            if let Some(path) = svg {
                write_file(path, &curve.to_svg())?;
            }
            let decimals = match spec.precision {
                Precision::Fixed => Some(6),
                Precision::Full => None,
            };
            deliver(out, curve.to_tsv(decimals))
        }

        Command::TargetPlot {
            input,
            out,
            coords,
            restarts,
            force,
            seed,
        } => {
            let l = load(input)?;
            let c = l1_centrality(&l.dist, &l.eta)?;
            let opts = LayoutOptions {
                restarts: *restarts,
                seed: *seed,
                force: *force,
                ..LayoutOptions::default()
            };
            let config = optimize_layout(&l.dist, &l.eta, &c, &opts)?;
            let labels = l.labels();
            write_target_plot(&config, &c.values, &labels, out)?;
            if let Some(path) = coords {
                let mut s = format!("# stress\t{}\nlabel\tr\ttheta\tx\ty\n", f.num(config.stress));
                for (i, [x, y]) in config.positions().into_iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "{}\t{}\t{}\t{}\t{}",
                        labels[i],
                        f.num(config.radii[i]),
                        f.num(config.thetas[i]),
                        f.num(x),
                        f.num(y)
                    );
                }
                write_file(path, &s)?;
            }
            if !config.fallback_angles.is_empty() {
                let names: Vec<&str> = config.fallback_angles.iter().map(|&i| labels[i]).collect();
                eprintln!(
                    "l1cent: no starting direction for {}; used evenly spaced angles",
                    names.join(", ")
                );
            }
            Ok(format!(
                "stress\titerations\tconverged\n{}\t{}\t{}\n",
                f.num(config.stress),
                config.iterations,
                config.converged
            ))
        }

        Command::Compare { input, out } => {
            let l = load(input)?;
            let raw: Vec<(MeasureChoice, Vec<f64>)> = MeasureChoice::ALL
                .iter()
                .map(|&m| measure_values(&l, m).map(|v| (m, v)))
                .collect::<Result<_>>()?;
            let mut columns: Vec<(String, Vec<f64>)> =
                raw.iter().map(|(m, v)| (m.name().to_string(), v.clone())).collect();
            columns.extend(
                raw.iter()
                    .map(|(m, v)| (format!("{}_uniform", m.name()), uniform_margin(v))),
            );
            let mut s = table(&f, &l.labels(), &columns);
            s.push_str("# measure\tpearson\tspearman\n");
            let l1 = &raw[0].1;
            for (m, v) in &raw[1..] {
                let r = |kind| {
                    correlation(l1, v, kind)
                        .map(|x| f.num(x))
                        .unwrap_or_else(|_| "NA".into())
                };
                let _ = writeln!(
                    s,
                    "# {}\t{}\t{}",
                    m.name(),
                    r(CorrelationKind::Pearson),
                    r(CorrelationKind::Spearman)
                );
            }
            deliver(out, s)
        }

        Command::DepthCheck {
            points,
            focal,
            samples,
            seed,
            out,
        } => {
            let (pts, k) = match points {
                Some(path) => (read_points(path)?, *focal),
                None => (unit_disk_sample(*samples, *seed), 0),
            };
            let eta = vec![1.0; pts.len()];
            let check = euclidean_depth_check(&pts, &eta, k)?;
            deliver(
                out,
                format!(
                    "points\tlhs\tdepth\tlower_bound\n{}\t{}\t{}\t{}\n",
                    pts.len(),
                    f.num(check.lhs),
                    f.num(check.depth),
                    f.num(check.lower_bound)
                ),
            )
        }
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_number(line: usize, token: &str) -> Result<f64> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("not a number: {token:?}"),
    })
}

fn read_values(path: &Path) -> Result<Vec<f64>> {
    let text = read_file(path)?;
    data_lines(&text)
        .map(|(n, l)| parse_number(n, l))
        .collect::<Result<Vec<_>>>()
        .map_err(in_file(path))
}

fn read_points(path: &Path) -> Result<Vec<Vec<f64>>> {
    let text = read_file(path)?;
    data_lines(&text)
        .map(|(n, l)| l.split_whitespace().map(|t| parse_number(n, t)).collect())
        .collect::<Result<Vec<_>>>()
        .map_err(in_file(path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        RunSpec::command().debug_assert();
    }

    #[test]
    fn help_lists_tolerances() {
        let help = RunSpec::command().render_help().to_string();
        for needle in ["1e-9", "1e-4", "500", "1e-12"] {
            assert!(help.contains(needle), "{needle} missing from help");
        }
    }

    #[test]
    fn alpha_range() {
        assert_eq!(parse_alpha("1").unwrap(), 1.0);
        assert!(parse_alpha("0").is_err());
        assert!(parse_alpha("1.5").is_err());
        assert!(parse_alpha("x").is_err());
    }

    #[test]
    fn bad_arguments_exit_one() {
        assert_eq!(run(["l1cent", "centrality"]), 1);
        assert_eq!(run(["l1cent", "local", "-g", "x.tsv", "--alpha", "2"]), 1);
        assert_eq!(run(["l1cent", "--help"]), 0);
    }
}
