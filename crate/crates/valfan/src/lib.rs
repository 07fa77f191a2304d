//! Exact classification of special quasi-monomial valuations on del Pezzo
//! surfaces with nodal anticanonical cycles.
//!
//! Given the pair `(X, C)` of a del Pezzo surface and a cycle of rational
//! curves in the anticanonical class, the points of the dual complex (a
//! circle of component vertices and node edges) correspond to valuations
//! with weights `(1, t)` along the two branches at a node. This crate
//! decides exactly which of them induce degenerations of `X` onto Fano
//! surfaces, computes the interval partition of that locus into chambers
//! with a common degeneration, enumerates the unicuspidal-curve witnesses
//! at chamber boundaries, and cross-checks the degree-8 family against its
//! toric polytopes, lattice-point counts, and monoid-algebra Hilbert
//! functions.
//!
//! Everything is exact: rationals are arbitrary precision, interval
//! endpoints live in real quadratic fields with sign-based comparison,
//! and the positivity tests behind the classification run on an exact
//! rational feasibility solver. See the `examples/` directory for one
//! runnable example per capability; the thin `valfan` binary exposes the
//! same operations as subcommands.

pub mod blowup;
pub mod catalog;
pub mod cli;
pub mod cycle;
pub mod degen;
pub mod exact;
pub mod feasible;
pub mod jsonio;
pub mod lattice;
pub mod render;
pub mod special;
