//! Exact combinatorics of alternating paths in edge-colored host graphs.
//!
//! An *alternating* path is a path whose consecutive edges receive different
//! colors. This crate provides:
//!
//! - dense representations of r-edge-colorings of `K_{m,n}` and `K_n`, the
//!   equivalent code view (one color word per right-class vertex), and their
//!   degree/codegree statistics ([`coloring`], [`code`], [`codegree`]);
//! - exact counters for alternating paths and walks: closed forms for lengths
//!   2-4, a length-5 objective, a transfer dynamic program for walks of any
//!   length, a distinct-vertex enumerator, and the orientation reduction to
//!   directed walks ([`counting`]);
//! - maximum bipartite matching with Hall-violation certificates and the
//!   padded auxiliary graph whose perfect matchings witness
//!   near-saturation of the original view ([`matching`]);
//! - explicit colorings (seeded random, block, balanced-split, red-matching)
//!   and the matching-chain builder that materializes families of internally
//!   disjoint alternating paths ([`constructions`]);
//! - exhaustive extremal search for the connectivity numbers kappa and
//!   lambda, maximum-code search, exact disjoint-path packing, and bound
//!   verification drivers ([`search`]).
//!
//! All randomness is seeded and counter-split; identical seeds reproduce
//! identical objects byte for byte.

pub mod code;
pub mod codegree;
pub mod coloring;
pub mod constructions;
pub mod counting;
pub mod io;
pub mod matching;
pub mod paths;
pub mod rng;
pub mod search;

pub use coloring::{Color, ColoringMatrix, CompleteColoring, Side, BLUE, RED};
pub use paths::{BiVertex, Flavor, PathKind, PathRecord};
