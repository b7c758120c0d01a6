//! Construction, verification, and exact minimization of graph rankings.
//!
//! A k-ranking assigns each vertex a positive rank so that on every path
//! of length at most k, either the endpoints get different ranks or some
//! interior vertex outranks both. The 2-ranking case (paths of length one
//! and two) is the main subject: it sits between star coloring and square
//! coloring, and this crate provides
//!
//! - [`graph`]: small undirected graphs, products, and named families;
//! - [`verify`]: certified checking of rankings and star colorings, with
//!   explicit violating paths;
//! - [`matrix`]: rank matrices over complete-times-complete products and
//!   their validity characterization;
//! - [`construct`]: closed-form rankings for hypercubes, cycle products,
//!   rook's graphs, triangle-times-cycle products, and subcubic graphs;
//! - [`solve`]: exact minimum rank counts by budgeted exhaustive search;
//! - [`enumerate`]: all minimum witnesses of a small graph up to symmetry;
//! - [`bounds`]: lower bounds, structural audits, and random-graph
//!   experiments;
//! - [`io`]: plain-text interchange formats for graphs, rankings, and
//!   matrices;
//! - [`iso`]: isomorphism checks for small graphs.
//!
//! Everything is deterministic: randomized pieces take explicit seeds, and
//! searches visit candidates in fixed orders.

pub mod bounds;
pub mod construct;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod iso;
pub mod matrix;
pub mod solve;
pub mod subcubic;
pub mod verify;

pub use graph::Graph;
pub use matrix::RankMatrix;
pub use solve::{Budget, SolveOutcome};
pub use verify::{Ranking, Verdict};
