use thiserror::Error;

/// Errors raised while building or querying a plane graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {u} lists {v} as a neighbor but {v} does not list {u}")]
    AsymmetricAdjacency { u: usize, v: usize },
    #[error("vertex {0} lists itself as a neighbor")]
    SelfLoop(usize),
    #[error("vertex {v} lists neighbor {u} more than once")]
    DuplicateNeighbor { v: usize, u: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("rotation system is not a planar embedding: n={n}, m={m}, faces={f} (Euler check n - m + f = 2 failed)")]
    NotPlanarEmbedding { n: usize, m: usize, f: usize },
    #[error("invalid vertex or face id {0}")]
    InvalidId(usize),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error("graph has no edges")]
    EmptyGraph,
}

/// Error from the `.plg` text parser; wraps a build error with a line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlgError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Build {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Errors from the discharging engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("rules (R1)-(R7) require the vertex charging scheme, got {0}")]
    SchemeMismatch(&'static str),
}

/// Errors from the certifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("witness does not revalidate against the graph: {0}")]
    WitnessMismatch(String),
    #[error("construction names an external neighbor of vertex {0} that does not exist")]
    MissingExternalNeighbor(usize),
    #[error("no edge set within the bound {0} increases the independent domination number")]
    SearchExhausted(usize),
    #[error("no configuration (a)-(h) found; this would falsify the unavoidability claim")]
    NoConfiguration,
    #[error("edge ({0}, {1}) has no endpoint in N(v)")]
    NotAttachment(usize, usize),
    #[error("lemma requires d(v) >= 8, got d({v}) = {d}")]
    DegreeTooSmall { v: usize, d: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
