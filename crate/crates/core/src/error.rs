use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex set is empty")]
    EmptySet,

    #[error("graph of order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("graph of order {order} exceeds the {what} cap of {cap} vertices")]
    OverCap {
        what: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("automorphism group of order {order} exceeds the element cap of {cap}")]
    GroupTooLarge { order: u128, cap: u64 },

    #[error("time budget exhausted")]
    BudgetExhausted,

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("labeling is not total: {0}")]
    PartialLabeling(String),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("graph has no edges")]
    Edgeless,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("distinguishing index is not defined for {0}")]
    IndexNotDefined(String),

    #[error("no valid bipartite cover: {0}")]
    NoCover(String),

    #[error("constructed labeling failed verification: {0}")]
    ConstructionFailed(String),
}

impl Error {
    /// Resource errors are the ones a caller can fix by raising a cap or
    /// granting more time.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::OverCap { .. }
                | Error::GroupTooLarge { .. }
                | Error::BudgetExhausted
                | Error::OrderTooLarge { .. }
        )
    }
}
