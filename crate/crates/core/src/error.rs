use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a digraph needs at least one vertex")]
    Empty,
    #[error("arc #{index}: endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("arc #{index} is a loop at vertex {vertex}")]
    LoopArc { index: usize, vertex: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("{what}: size {size} exceeds the supported maximum {max}")]
    TooLarge { what: &'static str, size: usize, max: usize },
    #[error("blocks do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("not a simple directed cycle: {0}")]
    NotACycle(String),
    #[error("not a tournament: {0}")]
    NotATournament(String),
    #[error("vertices {0} and {1} are adjacent, the set is not independent")]
    NotIndependent(usize, usize),
    #[error("the underlying graph is disconnected")]
    Disconnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("state space of {states} states exceeds the budget of {budget}")]
    StateBudget { states: u128, budget: u64 },
    #[error("fully active play needs an out-arc at vertex {0}")]
    StuckMover(usize),
    #[error("{k} cop(s) cannot force a capture")]
    NotCopWin { k: usize },
    #[error("vertex {vertex} is a sink{}", step_suffix(*.step))]
    SinkPresent { vertex: usize, step: Option<usize> },
    #[error("contraction merges the arc ({0},{1}) into a loop")]
    LoopAfterContraction(usize, usize),
    #[error("the digraph has no arcs")]
    NoArcs,
    #[error("no fixpoint after {0} contraction steps")]
    StepLimit(usize),
    #[error("search budget exhausted: {0}")]
    SearchBudget(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn step_suffix(step: Option<usize>) -> String {
    match step {
        Some(s) => format!(" at contraction step {s}"),
        None => String::new(),
    }
}
