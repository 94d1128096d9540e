//! Red/blue Ramsey machinery for sparse graphs versus disjoint unions of fans.
//!
//! The crate is organized around a single question: given a red/blue edge
//! coloring of a complete graph at the right order, exhibit an explicit red
//! copy of a sparse connected graph `G` or an explicit blue `t·F_k` (with
//! `F_k` the fan of `k` triangles sharing a vertex). Everything a solver
//! returns is a [`embed::Certificate`] that an independent verifier checks
//! against the coloring, and an exhaustive [`oracle`] provides ground truth
//! at small orders.
//!
//! Threshold comparisons are written in the same shape as the published
//! constants (`n >= k^2 - k + 1`, `count <= k - 1`), which a lint would
//! otherwise rewrite.
#![allow(clippy::int_plus_one)]

pub mod bitset;
pub mod bounds;
pub mod clique;
pub mod coloring;
pub mod embed;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod oracle;
pub mod sparse;

pub use coloring::{EdgeColor, FanSpec, TwoColoring};
pub use embed::{Certificate, SolveMode};
pub use graph::{Graph, GraphFamily, VertexId};
