//! Finite and affine ADE Dynkin diagrams: recognition, additive functions,
//! Coxeter and McKay numbers, and the automorphisms used by the constructions.

pub mod automorphism;
pub mod linalg;
pub mod recognize;
pub mod types;

use thiserror::Error;

pub use automorphism::{named, standard_automorphisms, Automorphism};
pub use recognize::{graph_isomorphism, recognize, Recognition};
pub use types::DynkinType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DynkinError {
    #[error("graph is empty or disconnected")]
    Disconnected,
    #[error("not an ADE type")]
    NonADE,
    #[error("{0} is not affine")]
    NotAffine(DynkinType),
    #[error("index out of range for {0:?}")]
    BadIndex(DynkinType),
    #[error("cannot parse Dynkin type {0:?}")]
    Parse(String),
    #[error("{0} has no automorphism named {1:?}")]
    UnknownAutomorphism(DynkinType, String),
    #[error("internal: {0}")]
    Internal(String),
}

/// `h(Λ)`, with `None` for the infinite Coxeter number of affine types.
pub fn coxeter_number(t: DynkinType) -> Result<Option<u64>, DynkinError> {
    t.coxeter_number()
}

pub fn mckay_number(t: DynkinType) -> Result<u64, DynkinError> {
    t.mckay_number()
}
