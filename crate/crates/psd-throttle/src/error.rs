use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("graph is disconnected; {0} is only defined for connected graphs")]
    Disconnected(String),
    #[error("edge {{{0},{1}}} is not present in the graph")]
    EdgeNotPresent(usize, usize),
    #[error("graph6 parse error at byte {0}: {1}")]
    Graph6(usize, String),
    #[error("graph does not carry a Cartesian product layout")]
    NotProduct,
    #[error("parameter is undefined for this graph: {0}")]
    Undefined(String),
    #[error("input error: {0}")]
    Input(String),
}

impl Error {
    pub(crate) fn graph6(offset: usize, msg: impl Into<String>) -> Self {
        Error::Graph6(offset, msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
