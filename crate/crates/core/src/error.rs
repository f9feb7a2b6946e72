use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph has {0} vertices; at most {max} supported", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("not a tree")]
    NotATree,
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("tree contains T_3,3")]
    ContainsT33,
    #[error("tree does not contain T_3,3")]
    LacksT33,
    #[error("{what} = {value} out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: String,
    },
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("empty vertex set")]
    EmptySet,
    #[error("coloring: {0}")]
    Coloring(String),
    #[error("{n} vertices with {k} cops exceeds the exhaustive-search cap of {cap}")]
    CapExceeded { n: usize, k: usize, cap: usize },
    #[error("game value is infinite; no policy exists")]
    Unwinnable,
    #[error("strategy `{strategy}`: {msg}")]
    Strategy { strategy: String, msg: String },
}
