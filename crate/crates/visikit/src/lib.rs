//! Exact combinatorics of semi-bar k-visibility graphs.
//!
//! A semi-bar arrangement is a stack of horizontal bars with left endpoints
//! on a shared axis (or, cylindrically, on a circle); two bars are adjacent
//! in the k-visibility graph when a sightline joins them crossing at most
//! `k` other bars. This crate computes those graphs exactly over integer
//! lengths, analyzes convex geometric drawings for pairwise crossing chord
//! families, and carries out the constructive moves between the two worlds:
//!
//! - [`visibility`]: flat and cylindrical visibility graphs, plus a
//!   brute-force sightline oracle to check them against.
//! - [`quasiplanar`]: crossing detection, exact pairwise-crossing family
//!   search, maximality, maximal completion, j-pairs, extremal edge counts,
//!   degeneracy, and greedy coloring.
//! - [`transform`]: embed a cylindrical arrangement as a convex drawing,
//!   peel a maximal drawing back into an arrangement, curl a flat
//!   arrangement onto the cylinder, and cut it flat again.
//! - [`generate`]: seeded random instances and the named families with
//!   extremal behavior.
//! - [`verify`]: the sweep harness the guarantees are checked with.
//! - [`svg`], [`cli`]: figure export and the command-line surface.
//!
//! Everything is deterministic: fixed tie-breaks, seeded randomness, sorted
//! collections throughout.

pub mod cli;
pub mod error;
pub mod generate;
pub mod model;
pub mod quasiplanar;
pub mod svg;
pub mod transform;
pub mod verify;
pub mod visibility;

pub use error::{Error, Result};
pub use model::{
    cyclic_between, cyclic_distance, ArcSide, Arrangement, ArrangementKind, ConvexDrawing,
    CylArrangement, FlatArrangement, Graph, PeelStep, PeelTrace, Validate,
};
pub use quasiplanar::{
    chords_cross, degeneracy, find_pairwise_crossing, greedy_color, is_maximal, is_quasiplanar,
    j_pairs, max_edges, maximal_completion,
};
pub use transform::{curl, curl_preserves, cut, embed, flat_peel, peel, peel_force, PeelOutcome};
pub use visibility::{cyl_visibility, flat_visibility, shorter_bar_edge_count, sightline_oracle};
