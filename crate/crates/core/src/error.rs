//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by graph construction, generation, and the engines.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed edge-list input, with the 1-based line that caused it.
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// An edge id that does not exist in the graph.
    #[error("unknown edge id {0}")]
    UnknownEdge(u32),

    /// No edge joins the two named vertices.
    #[error("no edge between vertices {0} and {1}")]
    NoSuchEdge(usize, usize),

    /// A vertex index outside 0..vertex_count.
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),

    /// Bad generator family, parameters, or parameter values.
    #[error("invalid generator: {0}")]
    Generator(String),

    /// Operation needs a circuit but the graph is acyclic.
    #[error("graph is acyclic: girth is undefined")]
    Acyclic,

    /// An exhaustive search would exceed the configured work budget.
    #[error("work budget exceeded: needs about {required} steps, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    /// Parameters that violate a documented precondition.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Could not sample a connected graph within the retry limit.
    #[error("no connected graph with n={n}, m={m} found after {attempts} attempts")]
    SamplingExhausted { n: usize, m: usize, attempts: usize },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
