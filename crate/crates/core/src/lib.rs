//! Finite aura topological spaces.
//!
//! An aura space `(X, τ, 𝔞)` is a finite topological space together with a
//! scope function assigning every point an open neighbourhood of itself. The
//! crate computes the induced operators and topology, decides the covering
//! and connectivity properties built on them, builds subspaces and products,
//! evaluates exact verdicts for a few infinite models over ℕ, and enumerates
//! small spaces to check laws exhaustively.

pub mod aura;
pub mod connectivity;
pub mod constructions;
pub mod covering;
pub mod document;
pub mod finite_space;
pub mod fixtures;
pub mod generalized;
pub mod graph;
pub mod laws;
pub mod pointset;
pub mod search;
pub mod sequences;
pub mod symbolic;
pub mod verify;

pub use aura::{
    AuraClassification, AuraError, AuraSpace, FiniteMap, ScopeFunction, SeparationAxioms,
};
pub use document::{parse_space, DocumentError, SpaceDocument};
pub use finite_space::{FiniteTopSpace, TopologyError, TopologyFamily};
pub use pointset::{PointSet, Universe, UniverseError, MAX_POINTS};
