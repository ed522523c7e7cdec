use thiserror::Error;

use crate::conserved::ConservedReport;

#[derive(Debug, Error)]
pub enum TwistError {
    #[error("vertex {0} out of range (n = {1})")]
    UnknownVertex(usize, usize),
    #[error("vector has {0} coordinates, graph has {1} vertices")]
    Length(usize, usize),
    #[error("graph or quiver is not bipartite")]
    NotBipartite,
    #[error("graph is empty or disconnected")]
    Disconnected,
    #[error("{0} is not an affine type")]
    NotAffine(String),
    #[error("tau-mutation changed the twist quiver at step {0}")]
    QuiverChanged(usize),
    #[error("exponent does not fit a machine integer")]
    Overflow,
    #[error("no Coxeter period found up to {0}")]
    NoPeriod(u64),
    #[error("no real eigenvalue above 1 could be certified")]
    NoCertificate,
    #[error("conservation law violated: worst residual {}", .0.worst_residual)]
    Violated(Box<ConservedReport>),
    #[error(transparent)]
    Core(#[from] zlab_core::CoreError),
    #[error(transparent)]
    Dynkin(#[from] zlab_dynkin::DynkinError),
    #[error(transparent)]
    Dynamics(#[from] zlab_dynamics::DynamicsError),
}

pub type Result<T> = std::result::Result<T, TwistError>;
