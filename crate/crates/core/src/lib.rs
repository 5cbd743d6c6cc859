//! Graph-theoretic analysis of noncontextuality inequalities.
//!
//! The central object is the *exclusivity graph*: vertices are measurement
//! events, edges join pairwise exclusive events. The crate provides
//!
//! - graph construction (cycles, anticycles, circulants, Johnson graphs, the
//!   Shrikhande graph, products) and small-graph isomorphism ([`graph`]);
//! - induced-subgraph census, odd-hole/antihole detection, and perfectness
//!   tests ([`census`]);
//! - classical invariants: independence and clique numbers, chromatic number,
//!   maximal cliques, and the fractional packing number ([`invariants`]);
//! - exact rational linear programming used by the packing LP ([`lp`]);
//! - the Lovász number: closed forms for odd cycles and their complements and
//!   a general small-graph SDP solver ([`theta`]);
//! - Lovász-optimum orthonormal representations and quantum-dimension lower
//!   bounds ([`orthorep`]);
//! - event models of the classic inequality families ([`events`]);
//! - exclusivity-principle bound chains over disjunctive powers
//!   ([`eprinciple`]);
//! - bundled analysis reports ([`report`]).

pub mod bitset;
pub mod census;
pub mod eprinciple;
pub mod error;
pub mod events;
pub mod graph;
pub mod invariants;
pub mod lp;
pub mod orthorep;
pub mod report;
pub mod theta;

pub use error::{Error, Result};
pub use graph::{Graph, GraphSpec};
pub use lp::Rational;
