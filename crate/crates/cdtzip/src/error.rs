use thiserror::Error;

/// Errors produced by graph construction and the pipeline stages.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1}) in simple mode")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown catalog name: {0}")]
    UnknownCatalogName(String),
    #[error("no orientation-assignment fixture for {0}")]
    NoFixture(String),
    #[error("power exponent {0} exceeds diameter {1}")]
    PowerExceedsDiameter(usize, usize),
    #[error("graph too large for exact search (n = {0}, limit {1})")]
    ScaleGuard(usize, usize),
    #[error("input is not vertex-transitive")]
    NotVertexTransitive,
    #[error("path is not a path of the graph: {0:?}")]
    NotAPath(Vec<usize>),
    #[error("path {path:?} lies in {found} girth cycles, expected exactly 2")]
    PathCycleCount { path: Vec<usize>, found: usize },
    #[error("unsupported power exponent k = {0} (only k = 2 and k = 3 are zippable here)")]
    UnsupportedZipK(usize),
    #[error("arc ({0} -> {1}, label {2:?}) has no oppositely oriented partner")]
    UnmatchedArc(usize, usize, Option<usize>),
    #[error("kappa is not 2 for this graph")]
    KappaNotTwo,
    #[error("fixture parse error: {0}")]
    FixtureParse(String),
    #[error("invalid oriented cycle set: {0}")]
    InvalidOac(String),
    #[error("face set does not cover every edge exactly twice")]
    BadFaceCover,
    #[error("triangle families do not have the expected shape: {0}")]
    TriangleFamilies(String),
    #[error("lkn parameter {0} out of supported range 4..=8")]
    LknRange(usize),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
