//! Exact domination and independent domination on small graphs, with
//! isomorph-free generation, discharging certificates and a bound registry.

pub mod bounds;
pub mod canon;
pub mod discharging;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod rational;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use rational::Rational;
