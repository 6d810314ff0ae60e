//! Exact cops-and-robbers toolkit.
//!
//! The crate is organised in layers:
//!
//! * [`graph`] — compact undirected graphs plus the handful of algorithms the
//!   rest of the crate leans on (BFS, chordality, dismantlability, small-order
//!   connectivity).
//! * [`embed`] — graphs with combinatorial face data, vertex role tags, and
//!   crossing structures for 1-planar drawings.
//! * [`construct`] — the construction pipeline: dodecahedron, pentagon
//!   triangulation, quadrangulation, kite diagonals, uniform subdivisions and
//!   1-planarizations of general drawings.
//! * [`solver`] — exact retrograde solver for the k-cop pursuit game.
//! * [`strategy`] — executable cop and robber policies (path guarding, the
//!   quadrangulation escape rule, the three-cop territory recursion) and a
//!   referee that plays policies against each other.
//! * [`outer`] — outer-k-planar drawings: crossing detection, structure checks
//!   and the chordality/cop-win correspondence.
//! * [`verify`] — batch verification harnesses used by the CLI and the
//!   acceptance tests.

pub mod construct;
pub mod embed;
pub mod graph;
pub mod outer;
pub mod solver;
pub mod strategy;
pub mod verify;
