use thiserror::Error;
use zlab_dynkin::{DynkinError, DynkinType};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("bigraph is not recurrent")]
    NotRecurrent,
    #[error("bigraph is empty or disconnected")]
    Disconnected,
    #[error("red components of mixed or unsupported types: {0}")]
    MixedComponents(String),
    #[error("red component {0} has type {1}, expected affine ADE")]
    NotAffineComponent(usize, DynkinType),
    #[error("inconsistent scaling between components {0} and {1}")]
    InconsistentScf(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("axiom violated at ({0},{1}): {2}")]
    Axiom(usize, usize, &'static str),
    #[error("matrix is decomposable")]
    Decomposable,
    #[error("no diagram name matches this {0} matrix")]
    Unnamed(&'static str),
    #[error("expected two red components, found {0}")]
    NotDoubleBinding(usize),
    #[error("eigenvector residual {0:e} exceeds tolerance")]
    Numerical(f64),
    #[error(transparent)]
    Dynkin(#[from] DynkinError),
}

pub type Result<T> = std::result::Result<T, SpectralError>;
