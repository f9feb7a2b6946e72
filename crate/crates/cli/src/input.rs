//! Graph and coloring sources shared by the subcommands.

use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use locgame::coloring::{distance_colorings, parse_colorings};
use locgame::graph::{build_named, parse_edge_list, parse_graph6, Connectivity};
use locgame::{Coloring, Graph, NamedGraph};

use crate::error::{CliError, CliResult};

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph in graph6 format.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File with one `u v` edge per line (0-based ids).
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
    /// Built-in graph: T33, Gm:M, star:M, path:N, cycle:N, example41.
    #[arg(long, value_name = "NAME[:PARAM]")]
    pub named: Option<String>,
}

impl GraphSource {
    pub fn load(&self) -> CliResult<Graph> {
        if let Some(text) = &self.graph6 {
            return Ok(parse_graph6(text, Connectivity::Require)?);
        }
        if let Some(path) = &self.edges {
            return Ok(parse_edge_list(&read(path)?, Connectivity::Require)?);
        }
        let name: NamedGraph = self.named.as_deref().unwrap_or_default().parse()?;
        Ok(build_named(&name)?)
    }
}

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Colorings from a file (`1|2,3|4,5` per line) or every distance coloring
/// of probe sets up to `distance_k` (default 1).
pub fn colorings(g: &Graph, file: Option<&Path>, distance_k: Option<usize>) -> CliResult<Vec<Coloring>> {
    match file {
        Some(path) => Ok(parse_colorings(&read(path)?, g.n())?),
        None => Ok(distance_colorings(g, distance_k.unwrap_or(1), true)?),
    }
}
