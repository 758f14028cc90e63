use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("graph on {n} vertices exceeds the limit of {limit} for {operation}")]
    TooLarge { operation: &'static str, n: usize, limit: usize },

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not {0}-closed")]
    NotClosed(usize),

    #[error("power iteration did not converge after {iterations} iterations (best rho {best}, residual {residual})")]
    NoConvergence { best: f64, residual: f64, iterations: u64 },

    #[error("inconsistent spectral bound inputs: {0}")]
    InconsistentBound(String),

    #[error("rejection sampling exhausted {0} retries")]
    RetriesExhausted(u32),

    #[error("malformed matching instance: {0}")]
    MalformedInstance(String),

    #[error("no distinct spare-clique representatives for path ends: {0}")]
    InsufficientRepresentatives(String),

    #[error("validation failure: {0}")]
    Validation(String),

    #[error("closure equivalence counterexample: {0}")]
    ClosureCounterexample(String),
}
