//! Exact coefficient arithmetic.
//!
//! Coefficients live in the ring `Q[v, v^-1][alpha, eps, c]` where `q = v^2`,
//! so half-integer powers of `q` are ordinary monomials. The combinatorial
//! helpers (q-numbers, q-binomials, multinomials) produce values in this ring.

mod coeff;
mod combinatorics;

pub use coeff::{Assignment, CoeffPoly, Monomial, Symbol};
pub use combinatorics::{binomial, multinomial, qbinomial, qfactorial, qnum};

/// Arbitrary-precision exact fraction; always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero: v assigned 0 while negative powers of v are present")]
    DivisionByZero,
    #[error("q-binomial ({n} choose {k}) requires k <= n")]
    BinomialDomain { n: u32, k: u32 },
    #[error("multinomial parts sum to {sum}, expected {n}")]
    MultinomialSum { n: u32, sum: u64 },
}
