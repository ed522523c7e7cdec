use thiserror::Error;
use zlab_core::CoreError;
use zlab_dynkin::{DynkinError, DynkinType};
use zlab_spectral::SpectralError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("unknown family #{0}")]
    UnknownFamily(u8),
    #[error("family #{0}: {1}")]
    BadParams(u8, String),
    #[error("{0} is not a bipartite affine diagram")]
    NotBipartiteAffine(DynkinType),
    #[error("invalid toric data: {0}")]
    Toric(String),
    #[error("no double binding realizes {1} on {0}")]
    Inadmissible(DynkinType, String),
    #[error("invalid binding parameters: {0}")]
    Binding(String),
    #[error("unknown exceptional #{0}")]
    UnknownExceptional(u8),
    #[error("bigraph is not affine-by-affine: {0}")]
    NotAffineAffine(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Dynkin(#[from] DynkinError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

pub type Result<T> = std::result::Result<T, CatalogError>;
