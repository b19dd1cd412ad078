//! Exact normal ordering in classical and q-deformed Heisenberg algebras.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalars`]: the coefficient ring (Laurent polynomials in `v = q^(1/2)`
//!   with auxiliary symbols) and q-combinatorics.
//! - [`ncalg`]: algebra presentations, noncommutative polynomials and the
//!   normal-ordering rewrite engine.
//! - [`realizations`]: actions on commutative polynomial spaces, used as
//!   independent oracles.
//! - [`identities`]: builders for the ordering identities and the
//!   verification driver.
//! - [`exprio`]: the text expression language.
//! - [`report`]: suite reports (text table and JSON).

pub mod exprio;
pub mod identities;
pub mod ncalg;
pub mod realizations;
pub mod report;
pub mod scalars;

pub use ncalg::{AlgebraKind, AlgebraSpec, NCPoly, Word};
pub use scalars::{CoeffPoly, Rational};
