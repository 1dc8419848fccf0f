use thiserror::Error;

use crate::model::{ArcId, Vertex};

/// Errors raised while reading or solving an instance.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("arc {arc}: empty color set")]
    EmptyColorSet { arc: ArcId },
    #[error("arc {arc}: color {color} outside 1..={k}")]
    ColorOutOfRange { arc: ArcId, color: u32, k: u32 },
    #[error("arc {arc}: duplicate color {color}")]
    DuplicateColor { arc: ArcId, color: u32 },
    #[error("vertex {vertex} out of range (num_vertices = {num_vertices})")]
    VertexOutOfRange { vertex: Vertex, num_vertices: usize },
    #[error("arc {arc}: self-loop at vertex {vertex}")]
    SelfLoop { arc: ArcId, vertex: Vertex },
    #[error("terminals must be distinct (s = t = {0})")]
    EqualTerminals(Vertex),
    #[error("number of colors must be positive")]
    NoColors,
    #[error("unknown arc id {0}")]
    UnknownArc(ArcId),
    #[error("negative cycle through arcs {cycle:?}")]
    NegativeCycle { cycle: Vec<ArcId> },
    #[error("undirected edge {arc} has negative cost {cost}")]
    NegativeUndirectedCost { arc: ArcId, cost: i64 },
    #[error("arc {arc} has negative effective cost {cost}")]
    NegativeEffectiveCost { arc: ArcId, cost: i64 },
    #[error("not a DAG")]
    NotDag,
    #[error("operation requires a directed network")]
    NotDirected,
    #[error("state budget exceeded ({limit} product states)")]
    StateBudgetExceeded { limit: usize },
    #[error("ℓ budget exceeded: {ell} multi-colored arcs, cap {cap}")]
    EllBudgetExceeded { ell: usize, cap: usize },
    #[error("search-node budget exceeded ({limit} nodes)")]
    SearchBudgetExceeded { limit: u64 },
    #[error("oracle cap exceeded: {arcs} arcs, cap {cap}")]
    OracleCapExceeded { arcs: usize, cap: usize },
    #[error("variable cap exceeded: {vars} variables, cap {cap}")]
    VariableCapExceeded { vars: usize, cap: usize },
    #[error("family too large for exhaustive cover search: {sets} sets, cap {cap}")]
    FamilyCapExceeded { sets: usize, cap: usize },
    #[error("universe element {0:?} is in no set")]
    Uncoverable(String),
    #[error("invalid formula: {0}")]
    InvalidFormula(String),
    #[error("invalid cover system: {0}")]
    InvalidCoverSystem(String),
    #[error("invalid generator input: {0}")]
    InvalidGeneratorInput(String),
    #[error("color family is not laminar")]
    NotLaminar,
    #[error("no applicable solver")]
    NoApplicableSolver,
    #[error("cannot extract assignment: {0}")]
    Extraction(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for cap/budget violations, which the CLI reports with exit code 3.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::StateBudgetExceeded { .. }
                | Error::EllBudgetExceeded { .. }
                | Error::SearchBudgetExceeded { .. }
                | Error::OracleCapExceeded { .. }
                | Error::VariableCapExceeded { .. }
                | Error::FamilyCapExceeded { .. }
                | Error::NoApplicableSolver
        )
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Malformed(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
