//! Exact-arithmetic polyhedral combinatorics for 2-level polytopes.
//!
//! The crate constructs the classical 2-level polytope families (stable set
//! polytopes of perfect graphs, Hansen and min up/down polytopes, order and
//! chain polytopes, stable matching polytopes, 2-level matroid base polytopes,
//! cycle/cut polytopes of binary matroids) over exact rationals, and checks
//! the vertex/facet trade-off bound
//!
//! ```text
//! f0(P) * f_{d-1}(P) <= d * 2^(d+1)
//! ```
//!
//! on each of them, together with the known 0/1-polytope constructions that
//! violate it (forest and spanning tree polytopes, 3-level min up/down
//! polytopes, fractional stable set polytopes, and a 12-dimensional integer
//! hull).
//!
//! Everything is computed with arbitrary-precision integers and rationals;
//! facet enumeration is an incremental double description method in
//! `dd`, shared by all modules. See the `examples/` directory for one
//! runnable example per capability, and the `twolevel` binary for the
//! JSON-in/JSON-out command line interface.

pub mod binary;
pub mod bits;
pub mod cli;
pub mod dd;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod io;
pub mod matching;
pub mod matroid;
pub mod polytope;
pub mod poset;
pub mod rat;
pub mod report;

pub use error::Error;
pub use polytope::{FSummary, HPolytope, SlackMatrix, VPolytope};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

use std::sync::atomic::{AtomicUsize, Ordering};

static MAX_DIM: AtomicUsize = AtomicUsize::new(14);

/// Current dimension guard for facet enumeration (affine dimension).
pub fn max_dim() -> usize {
    MAX_DIM.load(Ordering::Relaxed)
}

/// Override the dimension guard (CLI `--max-dim`).
pub fn set_max_dim(d: usize) {
    MAX_DIM.store(d, Ordering::Relaxed);
}
