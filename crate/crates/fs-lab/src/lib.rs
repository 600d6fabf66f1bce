//! Friends-and-strangers graphs, computed exactly at desk scale.
//!
//! Given two simple graphs `X` and `Y` on the same number of vertices, the
//! friends-and-strangers graph `FS(X, Y)` has one vertex per bijection
//! `V(X) -> V(Y)`, with two bijections adjacent when they differ by a single
//! *friendly swap*: positions `a, b` adjacent in `X` whose occupants
//! `σ(a), σ(b)` are adjacent in `Y` exchange occupants.
//!
//! The crate provides:
//!
//! - [`graph`]: bitset graphs on up to 32 vertices with the classical
//!   algorithms (components, cut vertices, 2-coloring, cycle/θ0 detection);
//! - [`perm`]: bijections with Lehmer-code ranking into `[0, n!)`, signs, and
//!   swap sequences;
//! - [`engine`]: exact component censuses of `FS(X, Y)` via a parallel
//!   union-find over ranks, plus bidirectional path search and
//!   exchangeability queries;
//! - [`classify`]: the Wilsonian / almost-Wilsonian graph classes that govern
//!   connectivity of `FS(Star_n, Y)` and `FS(+Star_n, Y)`;
//! - [`constructions`]: named families, seeded random graphs with degree
//!   floors, and the two extremal pair constructions whose FS graphs are
//!   provably disconnected;
//! - [`verify`]: a claim harness that samples instances, evaluates hypothesis
//!   and conclusion predicates, and reports counterexamples (claims are named
//!   `THM_1_4`, `PROP_2_3`, `LEM_6_2`, ... as on the CLI).

pub mod classify;
pub mod constructions;
pub mod engine;
pub mod graph;
pub mod perm;
pub mod verify;
