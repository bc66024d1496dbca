//! Loaders for the two published example networks, exported to TSV.
//!
//! Expected layout under the data directory:
//!
//! ```text
//! mcu_edges.tsv        movie<TAB>movie<TAB>weight   (|A_i ∪ A_j| / |A_i ∩ A_j|)
//! mcu_vertices.tsv     movie<TAB>worldwide_gross
//! assembly_edges.tsv   member<TAB>member<TAB>weight (1 / cosponsored bills)
//! assembly_vertices.tsv member<TAB>multiplicity
//! ```
//!
//! Both networks ship with the `L1centrality` R package on CRAN
//! (`MCUmovie` and `rokassembly21`); export them with, e.g.,
//! `igraph::as_data_frame(g, "edges")` and `write.table(..., sep = "\t")`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{parse_graph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dataset {
    /// Marvel Cinematic Universe movies sharing cast members.
    Mcu,
    /// 21st National Assembly bill cosponsorship network.
    Assembly,
}

impl Dataset {
    pub fn stem(self) -> &'static str {
        match self {
            Dataset::Mcu => "mcu",
            Dataset::Assembly => "assembly",
        }
    }

    /// Published `(vertices, edges)` counts.
    pub fn expected_size(self) -> (usize, usize) {
        match self {
            Dataset::Mcu => (32, 278),
            Dataset::Assembly => (317, 47657),
        }
    }

    pub fn edge_path(self, dir: &Path) -> PathBuf {
        dir.join(format!("{}_edges.tsv", self.stem()))
    }

    pub fn vertex_path(self, dir: &Path) -> PathBuf {
        dir.join(format!("{}_vertices.tsv", self.stem()))
    }

    /// Whether both export files exist under `dir`.
    pub fn available(self, dir: &Path) -> bool {
        self.edge_path(dir).is_file() && self.vertex_path(dir).is_file()
    }
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.stem())
    }
}

impl FromStr for Dataset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mcu" => Ok(Dataset::Mcu),
            "assembly" => Ok(Dataset::Assembly),
            other => Err(Error::invalid(format!(
                "unknown dataset {other:?} (expected mcu or assembly)"
            ))),
        }
    }
}

fn read(path: &Path, dataset: Dataset) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            Error::Dataset(format!(
                "{} not found. Export the `{}` network from the L1centrality R package \
                 (https://CRAN.R-project.org/package=L1centrality) into {} and {}",
                path.display(),
                match dataset {
                    Dataset::Mcu => "MCUmovie",
                    Dataset::Assembly => "rokassembly21",
                },
                dataset.edge_path(Path::new(".")).display(),
                dataset.vertex_path(Path::new(".")).display(),
            ))
        } else {
            Error::io(path, e)
        }
    })
}

/// Loads an exported dataset and checks it against the published size.
pub fn load_dataset(dataset: Dataset, dir: &Path) -> Result<Graph> {
    let edges = read(&dataset.edge_path(dir), dataset)?;
    let vertices = read(&dataset.vertex_path(dir), dataset)?;
    let g = parse_graph(&edges, Some(&vertices))?;
    let (n, m) = dataset.expected_size();
    if g.n() != n || g.edges().len() != m {
        return Err(Error::Dataset(format!(
            "{dataset}: expected {n} vertices and {m} edges, found {} vertices ({:+}) and {} edges ({:+})",
            g.n(),
            g.n() as i64 - n as i64,
            g.edges().len(),
            g.edges().len() as i64 - m as i64,
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_files_explain_how_to_fetch() {
        let dir = std::env::temp_dir().join("l1cent-no-such-dataset-dir");
        match load_dataset(Dataset::Mcu, &dir) {
            Err(Error::Dataset(msg)) => assert!(msg.contains("CRAN") && msg.contains("mcu_edges.tsv")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn size_mismatch_is_reported() {
        let dir = std::env::temp_dir().join(format!("l1cent-dataset-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(Dataset::Mcu.edge_path(&dir), "A\tB\t1\n").unwrap();
        std::fs::write(Dataset::Mcu.vertex_path(&dir), "A\t1\nB\t2\n").unwrap();
        let err = load_dataset(Dataset::Mcu, &dir).unwrap_err().to_string();
        std::fs::remove_dir_all(&dir).unwrap();
        assert!(err.contains("expected 32 vertices and 278 edges"), "{err}");
        assert!(err.contains("(-30)") && err.contains("(-277)"), "{err}");
    }

    #[test]
    fn names_parse() {
        assert_eq!("mcu".parse::<Dataset>().unwrap(), Dataset::Mcu);
        assert!("imdb".parse::<Dataset>().is_err());
    }
}
