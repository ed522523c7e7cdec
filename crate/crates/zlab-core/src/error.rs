use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("vertex {0} out of range (n = {1})")]
    UnknownVertex(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("directed 2-cycle between {0} and {1}")]
    TwoCycle(usize, usize),
    #[error("quiver has no bipartition")]
    NotBipartite,
    #[error("edge ({0},{1}) joins vertices of the same color")]
    SameColor(usize, usize),
    #[error("edge ({0},{1}) is both red and blue")]
    SharedEdge(usize, usize),
    #[error("color vector has length {0}, expected {1}")]
    ColorLength(usize, usize),
    #[error("zero multiplicity on edge ({0},{1})")]
    ZeroMultiplicity(usize, usize),
    #[error("malformed bigraph json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
