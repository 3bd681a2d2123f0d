//! Exact matroid and simplicial-complex invariants.
//!
//! The crate computes f- and h-vectors of independence and broken circuit complexes,
//! Tutte, characteristic and reliability polynomials, and checks a family of
//! inequalities and identities relating them over generated matroid corpora.
//! All arithmetic is exact.

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod io;
pub mod matroid;
pub mod poly;
pub mod set;
pub mod tutte;

pub use error::{MatxError, Result};
pub use graph::{cycle_matroid, Edge, Graph};
pub use matroid::{Matroid, PointedMatroid};
pub use set::ElementSet;
