//! T-system engines (exact Laurent, tropical, log-space numeric) and a growth classifier.

pub mod error;
pub mod growth;
pub mod laurent;
pub mod numeric;
pub mod symbolic;
pub mod trajectory;
pub mod tropical;

pub use error::{DynamicsError, Result};
pub use growth::{find_revisit, growth_classify, growth_classify_with, log_series, Diagnostics, GrowthConfig, GrowthTag, GrowthVerdict};
pub use laurent::LaurentPolynomial;
pub use numeric::{numeric_evolve, numeric_evolve_log};
pub use symbolic::{budget_terms, deg_max_agrees, deg_max_check, symbolic_evolve, symbolic_evolve_with_budget, DEFAULT_BUDGET_TERMS};
pub use trajectory::{TState, Trajectory};
pub use tropical::tropical_evolve;
