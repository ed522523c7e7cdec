//! Perron data and labeling regimes of bigraphs, the weak generalized Cartan
//! matrix `A(G)`, its Kac class and diagram name, and scaling factors.

pub mod binding;
pub mod error;
pub mod gcm;
pub mod naming;
pub mod perron;

pub use binding::{cartan_of, delta_vector, double_bindings, red_components, scaling_factor, DoubleBinding, RedComponents};
pub use error::{Result, SpectralError};
pub use gcm::{classify, describe, kac_type, KacClass, Trichotomy, WeakGCM};
pub use perron::{exact_additive_labeling, labeling_regime, perron, PerronData, Regime, RegimeVerdict};
