//! Exact decision procedures for spectral and geometric properties of
//! labeled graphs describing graph manifolds.

pub mod bkn;
pub mod cli;
pub mod cohomology;
pub mod decide;
pub mod error;
pub mod exactla;
pub mod graph;
pub mod json;
pub mod malpha;
pub mod operators;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{Cocycle, Edge, LabeledGraph, Sign};
pub use rational::Rational;
