//! Exact-arithmetic engine for friezes on marked surfaces.
//!
//! The crate is organized around the pipeline disk -> annulus -> pair of pants:
//!
//! * [`ccfrieze`] — Conway–Coxeter friezes of type A: quiddity cycles,
//!   polygon triangulations, chord tables.
//! * [`cluster`] — valued cluster seeds, quiver mutation, exchange-graph
//!   exploration, mesh-rule checking for type A and D grids.
//! * [`surface`] — half-edge combinatorial maps for triangulated genus-0
//!   surfaces with up to three boundary circles, flips, canonical keys.
//! * [`lambda`] — exact λ-length states on triangulations and their
//!   transformation under flips via the Ptolemy relation.
//! * [`solver`] — unitarity search over the flip graph, uniqueness
//!   certificates, surgery (reduction and cutting).
//! * [`strip`] — the annulus strip harness: arc enumeration with winding
//!   bounds, greedy bridging triangulations, quadrilateral case analysis
//!   and the four claim checks.
//!
//! All values are exact rationals (`num_rational::BigRational`); fixed-width
//! arithmetic is never used for λ-lengths or cluster values.

pub mod ccfrieze;
pub mod cluster;
pub mod lambda;
pub mod rat;
pub mod solver;
pub mod strip;
pub mod surface;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
