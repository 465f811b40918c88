use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex index {index} out of range for graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is bipartite, parameter undefined")]
    Bipartite,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("configuration length {got} does not match vertex count {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("subtraction would produce a negative count at vertex {0}")]
    NegativeCount(usize),
    #[error("arithmetic overflow in configuration counts")]
    Overflow,
    #[error("move {from}->{to} is not applicable: {reason}")]
    InapplicableMove {
        from: usize,
        to: usize,
        reason: String,
    },
    #[error("search budget exceeded after {states} states (budget {budget})")]
    BudgetExceeded { states: u64, budget: u64 },
    #[error("valuation violates the edge condition on edge {u}-{v}")]
    InvalidValuation { u: usize, v: usize },
    #[error("frontier layer index {index} exceeded the cap {cap}; internal inconsistency")]
    CapExceeded { index: usize, cap: usize },
    #[error("procedure hypotheses violated: {0}")]
    Hypotheses(String),
    #[error("certificate refused: {0}")]
    CertificateRefused(String),
    #[error("malformed certificate payload: {0}")]
    MalformedCertificate(String),
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("edge list parse error: {0}")]
    EdgeList(String),
    #[error("configuration parse error: {0}")]
    ConfigParse(String),
    #[error("vertex map does not preserve edge {u}-{v}")]
    NotHomomorphism { u: usize, v: usize },
    #[error("label tracking supports at most 128 pebbles, got {0}")]
    TooManyLabels(u64),
    #[error("selection is not a sub-multiset of the final configuration")]
    BadSelection,
    #[error("atlas order {0} out of supported range 1..=8")]
    AtlasOrder(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
