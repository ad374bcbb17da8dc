//! Monomial ideals, weighted edge ideals and exact depth computations.

pub mod closure;
pub mod depth;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod monomial;

pub use error::{Error, Result};
pub use graph::{classify_cycle, enumerate_weighted_graphs, CycleCase, CycleFamily, WeightedGraph};
pub use monomial::{Monomial, MonomialIdeal};
