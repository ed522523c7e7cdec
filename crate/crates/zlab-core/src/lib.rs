//! Combinatorial substrate: quivers, bigraphs, mutation, recurrence and isomorphism.

pub mod bigraph;
pub mod error;
pub mod graph;
pub mod iso;
pub mod quiver;

pub use bigraph::Bigraph;
pub use error::{CoreError, Result};
pub use graph::UGraph;
pub use quiver::Quiver;

/// `bigraph_of`: red from white→black arrows, blue from black→white.
pub fn bigraph_of(q: &Quiver) -> Result<Bigraph> {
    Bigraph::from_quiver(q)
}

pub fn quiver_of(g: &Bigraph) -> Quiver {
    g.to_quiver()
}
