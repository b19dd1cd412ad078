//! Noncommutative polynomials over the supported algebras and their normal
//! ordering.
//!
//! Canonical generator order puts every `b_i` before every `a_j` (and `B`
//! before `A`), so a normal word reads `b1^.. b2^.. a1^.. a2^..`.

mod algebra;
mod poly;
mod rewrite;
mod word;

pub use algebra::{AlgebraKind, AlgebraSpec, Central, Deformation, Gen, RuleTable, RuleTerm, MAX_PAIRS};
pub use poly::NCPoly;
pub use rewrite::{measure, reset_rewrite_steps, rewrite_steps, Measure};
pub use word::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("algebra mismatch: {left} vs {right}")]
    Mismatch { left: String, right: String },
    #[error("invalid number of pairs p={0} (expected 1..=9)")]
    InvalidPairs(u32),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("generator index {index} exceeds p={p}")]
    IndexExceeds { index: u32, p: u32 },
    #[error("adjoint is not defined for {0}")]
    AdjointUnsupported(String),
}
