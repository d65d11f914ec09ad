//! Exact computational commutative algebra for (parity) binomial edge ideals.
//!
//! The toolkit works in the polynomial ring `S = k[x_1..x_n, y_1..y_n]` attached
//! to a simple graph on `n` vertices. It builds the binomial edge ideal `J_G`
//! (generated by `f_ij = x_i y_j - x_j y_i`) and the parity binomial edge ideal
//! `I_G` (generated by `g_ij = x_i x_j - y_i y_j`), decides whether the edge
//! binomials form a d-sequence, computes graded Betti tables and
//! Castelnuovo-Mumford regularity of ideal powers, and re-verifies the closed
//! regularity formulas for the unicyclic graph families where d-sequences exist.
//!
//! Layer map:
//! * [`field`], [`monomial`], [`ring`], [`poly`] — exact coefficient arithmetic
//!   and multivariate polynomials,
//! * [`groebner`] — Buchberger's algorithm, normal forms, ideal equality,
//! * [`ideal`] — sums, products, powers, colon ideals, intersections, minimal
//!   generators,
//! * [`graph`] — graph families, invariants and small-graph enumeration,
//! * [`binomial`] — graph-to-ideal constructions and colon identities,
//! * [`dseq`] — d-sequence checking, ordering search and classification,
//! * [`resolution`] — minimal free resolutions, Betti tables, regularity,
//! * [`harness`] — the named-claim registry batch-verified by the CLI,
//! * [`oracle`] — independent brute-force oracles used by the test suites.

#![forbid(unsafe_code)]

pub mod binomial;
#[cfg(feature = "cache")]
pub mod cache;
pub mod dseq;
pub mod error;
pub mod field;
pub mod graph;
pub mod groebner;
pub mod harness;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod resolution;
pub mod ring;

pub use error::Error;
pub use field::{CoefficientField, Scalar};
pub use graph::{Graph, TmSpec};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::PolyRing;
