use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("unsupported size n={n} (supported maximum {max}){hint}")]
    UnsupportedSize {
        n: usize,
        max: usize,
        hint: &'static str,
    },

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("n={n} exceeds the brute-force cap {cap}{hint}")]
    CapExceeded {
        n: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("fractional matching is not optimal: {0}")]
    NonOptimal(String),

    #[error("fractional matching is not canonical: {0}")]
    NonCanonical(String),

    #[error("invalid fractional matching: {0}")]
    InvalidWeights(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("theorem falsification alert on {graph6}: {detail}")]
    TheoremFalsified { graph6: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
