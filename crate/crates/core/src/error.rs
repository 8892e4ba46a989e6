//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("lambda must be at least 1")]
    NonPositiveLambda,
    #[error("parameter condition violated: k1 + k2 - lambda = {sum} < l = {l}")]
    ParameterConditionViolated { sum: i64, l: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("incidence references unknown identifier {0:?}")]
    DanglingReference(String),
    #[error("duplicate incidence ({0}, {1})")]
    DuplicateIncidence(String, String),

    #[error("cannot accept edge: endpoints hold at most l pebbles")]
    InsufficientPebbles,
    #[error("chosen source vertex holds no pebble")]
    SourceHasNoPebble,
    #[error("edge already accepted")]
    AlreadyAccepted,
    #[error("pebble path ends at a vertex with no pebbles")]
    EmptyTargetPebbles,
    #[error("path is not an oriented path of accepted edges")]
    PathNotInD,
    #[error("witness extraction requires a failed acceptance state")]
    NotAFailureState,
    #[error("subgeometry extraction requires lambda = 1, got {0}")]
    LambdaNotOne(u32),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("instance too large for the oracle: {size} exceeds bound {bound}")]
    InstanceTooLarge { size: usize, bound: usize },
    #[error("oracle input is not sparse")]
    NotSparseInput,
    #[error("supplied incidence set is not tight: {0}")]
    NotTightInput(String),

    #[error("no feasible lambda for r = {r}, k = {k}, l = {l}")]
    NoFeasibleLambda { r: usize, k: u32, l: u32 },
    #[error("hyperedges have mixed sizes ({0} and {1})")]
    MixedEdgeSizes(usize, usize),
    #[error("infeasible target size: {0}")]
    InfeasibleSize(String),
    #[error("constructed geometry failed the tightness post-check")]
    PostCheckFailed,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
