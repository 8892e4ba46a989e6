//! Sparsity and tightness of rank-2 incidence geometries.
//!
//! The central objects are incidence geometries (points, lines, and
//! incidences between them) together with a parameter quadruple
//! `(lambda, k1, k2, l)`. A geometry is sparse when every nonempty
//! incidence subset `I'` satisfies
//! `lambda*|I'| <= k1*|P(I')| + k2*|L(I')| - l`, and tight when the full
//! incidence set meets the bound with equality.
//!
//! The [`engine`] module decides these properties with a pebble game on
//! the lambda-fold incidence multigraph and, for `lambda = 1`, greedily
//! extracts a maximum sparse subgeometry. The [`oracle`] module provides
//! exhaustive reference implementations used to certify every verdict at
//! test scale. [`hypergraph`] imports graphs and hypergraphs through the
//! incidence reduction, and [`generate`] constructs tight and random
//! instances.

pub mod corpus;
pub mod engine;
pub mod error;
pub mod game;
pub mod generate;
pub mod geometry;
pub mod hypergraph;
pub mod multigraph;
pub mod oracle;
pub mod params;
pub mod preset;

pub use engine::{run_extraction, run_recognition, EngineOptions, Status, Verdict};
pub use error::{Error, Result};
pub use geometry::{IncidenceGeometry, Support};
pub use params::SparsityParams;
