//! The reflection game on graphs, twist quivers `Q × Q` with their τ-mutations and
//! product formula, Coxeter transformations, the Devron property and time-dependent
//! conserved quantities of twists of affine diagrams.

pub mod conserved;
pub mod coxeter;
pub mod error;
pub mod reflection;
pub mod tau;

pub use conserved::{conserved_check, ConservedReport, DEFAULT_TOL};
pub use coxeter::{
    characteristic_polynomial, coxeter_analysis, coxeter_analysis_with, coxeter_matrix, coxeter_samples, identity,
    is_eventually_exponential, is_eventually_quadratic, matmul, matpow, round_order, second_differences, CoxeterClass,
    CoxeterData, IntMatrix,
};
pub use error::{Result, TwistError};
pub use reflection::{exponent_matrix, reflect, reflect_marked, reflect_sequence, ExponentMatrix, ReflectionVector};
pub use tau::{
    devron_check, devron_exponents, devron_sequence, factorization_check, tau_evolve_symbolic, twist_quiver,
    underlying_graph, x_variables, TauRun,
};
