//! Exact-arithmetic core for certifying endomorphisms of unitriangular
//! pattern groups over localizations of the integers.
//!
//! A *pattern group* is a group of upper unitriangular rational matrices in
//! which each superdiagonal position ranges over a prescribed subring
//! `Z[1/pi]` of the rationals. Such groups are torsion-free nilpotent of
//! finite rank, and an endomorphism is conveniently presented by the linear
//! map it induces on the associated Lie algebra.
//!
//! The crate decides, entirely in exact rational arithmetic:
//!
//! * membership and surjectivity questions for lattices of the form
//!   `⊕ Z[1/pi_i]` ([`localized`]),
//! * group-level structure of the pattern group: multiplication, exact
//!   matrix `log`/`exp`, rational powers, elementary factorization
//!   ([`pattern`]),
//! * the graded structure of the associated Lie lattice: lower/upper
//!   central series, graded bracket maps, the embedding of the second
//!   centre section into a Hom module ([`lie`]),
//! * two sufficient automorphism criteria for a validated endomorphism —
//!   surjectivity on the torsion-free abelianisation, and the combination
//!   "pi-like + centre determinant a pi-unit" — together with an
//!   unconditional section-by-section surjectivity oracle ([`certify`]).
//!
//! Everything is `no_std` + `alloc`; there is no floating point anywhere.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod certify;
pub mod lie;
pub mod localized;
pub mod matrix;
pub mod pattern;
pub mod poly;
pub mod primes;
pub mod rational;

pub use certify::{
    CertifyError, Conclusion, Endomorphism, EndomorphismError, Hypothesis, OracleOutcome, Report,
    Verdict,
};
pub use lie::{CentralHomEmbedding, Filtration, GradedBracketMap, LieLattice, Section};
pub use localized::{CoordinateRing, ModuleShape, ShapeError};
pub use matrix::{MatrixError, RationalMatrix};
pub use pattern::{GroupElement, LieVector, Pattern, PatternError, Position};
pub use poly::Polynomial;
pub use primes::PrimeSet;
pub use rational::Rational;
