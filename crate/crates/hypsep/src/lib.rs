//! Balanced short-cycle separators for negatively curved planar graphs,
//! with the machinery built on top of them: weak r-divisions and
//! near-linear approximation schemes for maximum independent set and
//! graph-metric TSP.
//!
//! The central object is a plane graph whose shortest-path metric is
//! δ-hyperbolic for a small constant δ. For such graphs the library finds
//! a balanced separator that is a single geodesic path or a short
//! (length O(δ)) cycle, in near-linear time. Everything else — divisions,
//! the approximation schemes, the instance generators and the brute-force
//! oracles used to test all of it — lives in its own module.
//!
//! Modules, bottom up:
//!
//! * [`rational`] — exact fractions for balance accounting.
//! * [`graph`] — adjacency lists, deterministic BFS, blocks and cut
//!   vertices.
//! * [`embedding`] — combinatorial plane embeddings: rotation systems,
//!   face tracing, duals, and the two sides of a cycle.
//! * [`metric`] — hyperbolicity and slimness measurement.
//! * [`filling`] — greedy filling of a cycle with short-cycle faces.
//! * [`separator`] — the separator theorem itself: path shortening,
//!   iterated filling, the two hard outcomes, and the biconnectivity
//!   reduction.
//! * [`division`] — weak r-divisions by recursive separation.
//! * [`approx`] — the two approximation schemes plus the exact solvers
//!   they call on small pieces.
//! * [`generators`] — instance families: grids with diagonals, wheels,
//!   cylinders, negatively curved tilings, and reductions that produce
//!   hard independent-set instances.
//! * [`oracles`] — small brute-force reference implementations used to
//!   validate the fast code.
//! * [`io`] / [`report`] — file formats and run reports for the CLI.

pub mod approx;
pub mod division;
pub mod embedding;
pub mod filling;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metric;
pub mod oracles;
pub mod rational;
pub mod report;
pub mod separator;

pub use graph::{Graph, Vertex};
pub use rational::Rational;
