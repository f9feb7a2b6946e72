use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// The fixed graph families used throughout the checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// The 10-vertex spider: root 0, children 1..=3, leaves 4..=9.
    T33,
    /// T_3,3 with `m - 2` extra leaves on root child 1 (`Gm(2)` is T_3,3).
    Gm(usize),
    /// K_{1,n} with center 0.
    Star(usize),
    Path(usize),
    Cycle(usize),
    /// Five-vertex tree 1-2, 1-3, 3-4, 3-5 (relabeled to 0..4).
    Example41,
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `NAME` or `NAME:PARAM`, e.g. `T33`, `Gm:5`, `star:4`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let param = |what: &'static str| -> Result<usize> {
            let p = param.ok_or_else(|| Error::UnknownName(format!("{s} (missing :{what})")))?;
            p.trim()
                .parse()
                .map_err(|_| Error::UnknownName(format!("{s} (bad parameter `{p}`)")))
        };
        let named = match name.trim().to_ascii_lowercase().as_str() {
            "t33" => NamedGraph::T33,
            "gm" => NamedGraph::Gm(param("m")?),
            "star" => NamedGraph::Star(param("n")?),
            "path" => NamedGraph::Path(param("n")?),
            "cycle" => NamedGraph::Cycle(param("n")?),
            "example41" => NamedGraph::Example41,
            _ => return Err(Error::UnknownName(s.to_string())),
        };
        Ok(named)
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::T33 => write!(f, "T33"),
            NamedGraph::Gm(m) => write!(f, "Gm:{m}"),
            NamedGraph::Star(n) => write!(f, "star:{n}"),
            NamedGraph::Path(n) => write!(f, "path:{n}"),
            NamedGraph::Cycle(n) => write!(f, "cycle:{n}"),
            NamedGraph::Example41 => write!(f, "example41"),
        }
    }
}

const T33_EDGES: [(usize, usize); 9] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 4),
    (1, 5),
    (2, 6),
    (2, 7),
    (3, 8),
    (3, 9),
];

pub fn build_named(name: &NamedGraph) -> Result<Graph> {
    let range_err = |what, value, range: &str| Error::OutOfRange {
        what,
        value,
        range: range.to_string(),
    };
    match *name {
        NamedGraph::T33 => Graph::new(10, &T33_EDGES),
        NamedGraph::Gm(m) => {
            if m < 2 {
                return Err(range_err("m", m, ">= 2"));
            }
            let mut edges = T33_EDGES.to_vec();
            edges.extend((10..10 + m - 2).map(|v| (1, v)));
            Graph::new(8 + m, &edges)
        }
        NamedGraph::Star(n) => {
            if n < 1 {
                return Err(range_err("n", n, ">= 1"));
            }
            let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
            Graph::new(n + 1, &edges)
        }
        NamedGraph::Path(n) => {
            if n < 1 {
                return Err(range_err("n", n, ">= 1"));
            }
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::new(n, &edges)
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(range_err("n", n, ">= 3"));
            }
            let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            Graph::new(n, &edges)
        }
        NamedGraph::Example41 => Graph::new(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]),
    }
}
