//! Exact computer algebra for ideals generated by the 2-minors of generic
//! Hankel matrices indexed by pairs of closed graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] — coefficient fields (arbitrary-precision rationals, odd prime
//!   fields) behind a context trait, plus exact sparse rank.
//! * [`monomial`] — exponent vectors and monomial orders (degrevlex, lex,
//!   block/elimination orders).
//! * [`poly`] — multivariate polynomials over a [`field::Field`], division,
//!   S-polynomials, parsing and canonical rendering.
//! * [`graph`] — closed graphs on `[n]` given by interval facet lists, the
//!   combine construction on pairs, and enumeration.
//! * [`groebner`] — Buchberger's algorithm, reduced bases, ideal equality,
//!   intersection, radical membership, Krull dimension.
//! * [`hankel`] — the 2-minor generators attached to edge pairs, scroll
//!   generators, the two ideals, and the telescoping decomposition.
//! * [`resolution`] — graded Betti numbers of the quotient via Koszul
//!   homology, regularity, depth, projective dimension.
//! * [`verifier`] — machine checks for the structural claims about these
//!   ideals, with pass/fail/flagged adjudication and sweeps.
//!
//! Everything is `no_std` + `alloc`; all arithmetic is exact.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod field;
pub mod graph;
pub mod groebner;
pub mod hankel;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod verifier;

pub use field::{Field, PrimeField, Rationals};
pub use graph::ClosedGraph;
pub use groebner::{GroebnerBasis, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial};
pub use resolution::BettiTable;
pub use verifier::{Caps, Check, CheckKind, Instance, InstanceReport, Status, SweepReport};
