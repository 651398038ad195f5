//! Polychromatic colorings of the hypercube.
//!
//! A coloring of the edges (or, more generally, of the `i`-dimensional
//! subcubes) of a hypercube `Q_n` is *polychromatic* for a target graph if
//! every embedding of the target contains every color. This crate models
//! subcube embeddings as star-patterns, reduces them to gap vectors and to
//! shape sequences on the grid of color classes, and provides:
//!
//! * a catalog of the known periodic coloring constructions,
//! * two independent verifiers (concrete brute force over `Q_n`, and a
//!   residue check over the coloring's period vector),
//! * the grid bounds (level-profile bound, closed forms, binomial upper and
//!   max-product lower bounds, and the interval-partition procedure),
//! * backtracking searches for colorings on truncated cell windows and on
//!   concrete hypercubes.
//!
//! Enumeration orders are fixed and documented so that searches and failure
//! witnesses are reproducible. With the default `parallel` feature the
//! verifiers partition their enumeration across a rayon pool; verdicts and
//! witnesses are identical to the sequential fallback.

pub mod bounds;
pub mod coloring;
pub mod error;
pub mod grid;
pub mod pattern;
pub mod search;
pub mod verify;

mod exec;
mod util;

pub use error::Error;

/// Shorthand result type used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
